#ifndef JOINTINFO_MONTECARLO_HPP_
#define JOINTINFO_MONTECARLO_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "jointinfo/measures.hpp"
#include "jointinfo/pmf.hpp"
#include "jointinfo/rng.hpp"

namespace jointinfo {

/// Inverse-CDF sampler over the cumulative p.m.f. Zero cells are never drawn.
class CategoricalSampler {
public:
  explicit CategoricalSampler(const ZPmf &p);

  /// One 1-based Z index.
  std::size_t draw(Xoshiro256 &engine) const;

  std::size_t size() const noexcept { return cumulative_.size(); }

private:
  std::vector<double> cumulative_;
};

/// n i.i.d. draws of Z (1-based indices) from stream `stream` of `rng`.
std::vector<std::size_t> sample_z(const ZPmf &p, std::uint64_t n, const RngSpec &rng,
                                  std::uint64_t stream);

/// Same draws as sample_z, tallied straight into counts.
EmpiricalPmf sample_counts(const ZPmf &p, std::uint64_t n, const RngSpec &rng,
                           std::uint64_t stream);

struct StudyOptions {
  /// Worker threads for replicate loops; 0 picks hardware concurrency.
  unsigned threads = 1;
};

/// Estimates along increasing sample sizes, each size with its own fresh
/// sample drawn from stream = position in `sizes`.
struct ConvergenceTrace {
  Measure measure = Measure::JointEntropy;
  double true_value = 0.0;
  std::vector<std::uint64_t> sizes;
  std::vector<double> estimates;
  std::vector<double> abs_errors;
  std::vector<double> a_zn;  // sup_k |p_n,k - p_k|
  std::vector<double> ratio; // abs_error / a_zn, 0 when a_zn = 0
};

ConvergenceTrace convergence_trace(const ZPmf &p, std::span<const std::uint64_t> sizes,
                                   Measure measure, const RngSpec &rng, StudyOptions options = {});

struct Histogram {
  std::vector<double> edges; // bins + 1 edges
  std::vector<std::uint64_t> counts;
};

/// Equal-width bins over [lo, hi]; values outside are clamped into the end bins.
Histogram make_histogram(std::span<const double> values, std::size_t bins = 40, double lo = -4.0,
                         double hi = 4.0);

/// sup |F_n(x) - Phi(x)| of the empirical CDF of `values` against N(0, 1).
double ks_distance_to_normal(std::span<const double> values);

/// Replicates T_i = sqrt(n)(E_i - E) / sigma, standardized with the true
/// p.m.f.'s canonical sigma.
struct NormalityStudy {
  Measure measure = Measure::JointEntropy;
  std::uint64_t n = 0;
  std::size_t replicates = 0;
  double true_value = 0.0;
  double sigma = 0.0;
  std::vector<double> t_values; // replicate order
  double mean = 0.0;
  double variance = 0.0; // unbiased
  double ks_distance = 0.0;
  Histogram histogram;
  std::vector<double> qq_theoretical; // Phi^{-1}((i - 0.5) / replicates)
  std::vector<double> qq_observed;    // sorted t_values
};

/// Requires n >= 1000, replicates >= 100 and a nonzero canonical variance
/// (std::invalid_argument "degenerate CLT" otherwise).
NormalityStudy normality_study(const ZPmf &p, std::uint64_t n, std::size_t replicates,
                               Measure measure, const RngSpec &rng, StudyOptions options = {});

/// Fraction of replicates in which independence_test rejects at level alpha.
double rejection_rate(const ZPmf &p, std::uint64_t n, std::size_t replicates, double alpha,
                      const RngSpec &rng, StudyOptions options = {});

struct VarianceCheck {
  double empirical = 0.0; // sample variance of sqrt(n) E_i over replicates
  double canonical = 0.0;
  std::optional<double> three_halves;
};

VarianceCheck variance_check(const ZPmf &p, std::uint64_t n, std::size_t replicates,
                             Measure measure, const RngSpec &rng, StudyOptions options = {});

} // namespace jointinfo

#endif // JOINTINFO_MONTECARLO_HPP_
