#ifndef JOINTINFO_ASYMPTOTICS_HPP_
#define JOINTINFO_ASYMPTOTICS_HPP_

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>

#include <Eigen/Dense>

#include "jointinfo/measures.hpp"
#include "jointinfo/pmf.hpp"

namespace jointinfo {

/// Asymptotic variance of sqrt(n) (estimator - truth), in two forms.
///
/// `canonical` is the delta-method variance sum_k p_k w_k^2 - (sum_k p_k w_k)^2
/// for gradient weights w, i.e. w' Sigma w under the multinomial covariance.
/// `three_halves` evaluates
///
///   sum_k p_k (1 - p_k) w_k^2 - 2 sum_{k != k'} (p_k p_k')^{3/2} w_k w_k'
///
/// over ordered pairs. It disagrees with `canonical` whenever two or more
/// cells carry nonzero weight. It needs logs of every cell, so it is absent
/// for p.m.f.s with empty cells.
struct VariancePair {
  double canonical = 0.0;
  std::optional<double> three_halves;

  std::optional<double> discrepancy() const {
    if (!three_halves) {
      return std::nullopt;
    }
    return std::abs(canonical - *three_halves);
  }
};

enum class Axis { X, Y };

/// A(p) = sum_k |1 + log p_k|, the constant bounding
/// limsup |H(p_n) - H(p)| / sup_k |p_n,k - p_k|. Requires every cell > 0.
double rate_constant(const ZPmf &p);

/// Weights w_k = 1 + log p_k. Zero cells contribute nothing to `canonical`.
VariancePair entropy_variance(const ZPmf &p);

/// Weights B_{i,j} = log(p_{i,j} / (p_{X,i} p_{Y,j})).
VariancePair mi_variance(const ZPmf &p);

/// The mutual-information variance restricted to the diagonal cells
/// (i, i) of a square table, for data of the form (x_i, y_i).
/// Throws std::domain_error on a non-square shape.
VariancePair diagonal_mi_variance(const ZPmf &p);

/// Variance of sqrt(n)(p_n,X,i - p_X,i) (or the Y marginal). `canonical` is
/// the binomial p(1-p); `three_halves` applies the cross-term form to the
/// cells of the row (column), and is always present.
VariancePair marginal_variance(const ZPmf &p, Axis axis, std::size_t index);

/// Covariance of the standardized cell deviations sqrt(n / p_k)(p_n,k - p_k):
/// 1 - p_k on the diagonal, -sqrt(p_k p_k') off it. Requires every cell > 0.
Eigen::MatrixXd multinomial_covariance(const ZPmf &p);

struct Interval {
  double lower = 0.0;
  double upper = 0.0;
};

/// estimate -/+ z_{1 - alpha/2} sqrt(variance / n).
Interval confidence_interval(double estimate, double variance, std::uint64_t n, double alpha);

/// Standard normal CDF.
double normal_cdf(double x);

/// Standard normal quantile. Rational initial guess refined by one Halley
/// step against erfc; absolute error well under 1e-8 on (0, 1).
double normal_quantile(double p);

struct EstimateReport {
  Measure measure = Measure::JointEntropy;
  double estimate = 0.0; // nats; mutual information clamped at 0
  std::uint64_t n = 0;
  VariancePair variance;
  double std_error = 0.0; // sqrt(canonical / n)
  Interval ci;
  double alpha = 0.05;
};

/// Plug-in estimate with plug-in standard error and normal CI.
EstimateReport estimate_report(const EmpiricalPmf &emp, Measure measure, double alpha);

} // namespace jointinfo

#endif // JOINTINFO_ASYMPTOTICS_HPP_
