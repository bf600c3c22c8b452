#ifndef JOINTINFO_PMF_HPP_
#define JOINTINFO_PMF_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "jointinfo/encoding.hpp"

namespace jointinfo {

/// Maximum |sum - 1| accepted when constructing a p.m.f.
inline constexpr double kNormalizationTolerance = 1e-9;

struct PmfOptions {
  /// Reject zero cells (every p_{i,j} > 0).
  bool strict = false;
  /// Divide by the sum instead of enforcing the normalization tolerance.
  bool renormalize = false;
};

/// The r x s table p_{i,j} = P(X = x_i, Y = y_j), stored row-major.
class JointPmf {
public:
  JointPmf(PairShape shape, std::vector<double> row_major, PmfOptions options = {});

  static JointPmf from_rows(const std::vector<std::vector<double>> &rows, PmfOptions options = {});

  const PairShape &shape() const noexcept { return shape_; }
  std::span<const double> probs() const noexcept { return probs_; }
  /// 1-based access.
  double at(std::size_t row, std::size_t col) const;

  friend bool operator==(const JointPmf &, const JointPmf &) = default;

private:
  PairShape shape_;
  std::vector<double> probs_;
};

/// Flattened view p_{Z,k} = P(Z = z_k), k in [1, rs]. probs()[k-1] holds p_{Z,k}.
class ZPmf {
public:
  ZPmf(PairShape shape, std::vector<double> probs, PmfOptions options = {});

  const PairShape &shape() const noexcept { return shape_; }
  std::span<const double> probs() const noexcept { return probs_; }
  std::size_t size() const noexcept { return probs_.size(); }
  /// 1-based access.
  double at(std::size_t k) const;
  /// True when every cell is strictly positive.
  bool all_positive() const noexcept;

  friend bool operator==(const ZPmf &, const ZPmf &) = default;

private:
  PairShape shape_;
  std::vector<double> probs_;
};

/// Cell counts of an i.i.d. sample of Z. Frequencies are derived on demand.
class EmpiricalPmf {
public:
  EmpiricalPmf(PairShape shape, std::vector<std::uint64_t> counts);

  const PairShape &shape() const noexcept { return shape_; }
  std::span<const std::uint64_t> counts() const noexcept { return counts_; }
  std::uint64_t n() const noexcept { return n_; }

  /// count_k / n for each cell, in Z order.
  std::vector<double> freqs() const;
  /// The plug-in p.m.f. built from freqs().
  ZPmf to_zpmf() const;

  friend bool operator==(const EmpiricalPmf &, const EmpiricalPmf &) = default;

private:
  PairShape shape_;
  std::vector<std::uint64_t> counts_;
  std::uint64_t n_ = 0;
};

/// Category names for X and Y, in index order.
class LabeledAlphabets {
public:
  LabeledAlphabets(std::vector<std::string> x_labels, std::vector<std::string> y_labels);

  const std::vector<std::string> &x_labels() const noexcept { return x_labels_; }
  const std::vector<std::string> &y_labels() const noexcept { return y_labels_; }
  PairShape shape() const { return PairShape(x_labels_.size(), y_labels_.size()); }

  friend bool operator==(const LabeledAlphabets &, const LabeledAlphabets &) = default;

private:
  std::vector<std::string> x_labels_;
  std::vector<std::string> y_labels_;
};

ZPmf z_view(const JointPmf &joint);
JointPmf joint_view(const ZPmf &z);

/// Counts the 1-based Z indices in `sample`.
/// Throws std::invalid_argument on an empty sample or an out-of-range symbol.
EmpiricalPmf estimate_pmf(std::span<const std::size_t> sample, const PairShape &shape);

/// Row sums p_{X,i}.
std::vector<double> marginal_x(const ZPmf &p);
/// Column sums p_{Y,j}.
std::vector<double> marginal_y(const ZPmf &p);

/// p_{x_i | y_j} for i in [1, r]. Throws std::domain_error if p_{Y,j} = 0.
std::vector<double> conditional_x_given_y(const ZPmf &p, std::size_t col);
/// p_{y_j | x_i} for j in [1, s]. Throws std::domain_error if p_{X,i} = 0.
std::vector<double> conditional_y_given_x(const ZPmf &p, std::size_t row);

/// The independent coupling p_{X,i} p_{Y,j} of the marginals of p.
ZPmf product_of_marginals(const ZPmf &p);

} // namespace jointinfo

#endif // JOINTINFO_PMF_HPP_
