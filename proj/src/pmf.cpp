#include "jointinfo/pmf.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace jointinfo {

namespace {

std::vector<double> validated(const PairShape &shape, std::vector<double> probs,
                              const PmfOptions &options) {
  if (probs.size() != shape.cells()) {
    throw std::invalid_argument("expected " + std::to_string(shape.cells()) +
                                " probabilities, got " + std::to_string(probs.size()));
  }
  double total = 0.0;
  for (std::size_t k = 0; k < probs.size(); ++k) {
    const double v = probs[k];
    if (!std::isfinite(v) || v < 0.0) {
      throw std::invalid_argument("probability at Z index " + std::to_string(k + 1) +
                                  " is negative or not finite");
    }
    if (options.strict && v == 0.0) {
      throw std::invalid_argument("strictly positive p.m.f. required: cell " +
                                  std::to_string(k + 1) + " is zero");
    }
    total += v;
  }
  if (options.renormalize) {
    if (!(total > 0.0)) {
      throw std::invalid_argument("cannot renormalize a table with zero total mass");
    }
    for (double &v : probs) {
      v /= total;
    }
  } else if (std::abs(total - 1.0) > kNormalizationTolerance) {
    throw std::invalid_argument("probabilities sum to " + std::to_string(total) + ", not 1");
  }
  return probs;
}

} // namespace

JointPmf::JointPmf(PairShape shape, std::vector<double> row_major, PmfOptions options)
    : shape_(shape), probs_(validated(shape, std::move(row_major), options)) {}

JointPmf JointPmf::from_rows(const std::vector<std::vector<double>> &rows, PmfOptions options) {
  if (rows.empty()) {
    throw std::invalid_argument("joint table has no rows");
  }
  const std::size_t cols = rows.front().size();
  std::vector<double> flat;
  flat.reserve(rows.size() * cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) {
      throw std::invalid_argument("joint table row " + std::to_string(i + 1) + " has " +
                                  std::to_string(rows[i].size()) + " entries, expected " +
                                  std::to_string(cols));
    }
    flat.insert(flat.end(), rows[i].begin(), rows[i].end());
  }
  return JointPmf(PairShape(rows.size(), cols), std::move(flat), options);
}

double JointPmf::at(std::size_t row, std::size_t col) const {
  return probs_[encode_pair(row, col, shape_) - 1];
}

ZPmf::ZPmf(PairShape shape, std::vector<double> probs, PmfOptions options)
    : shape_(shape), probs_(validated(shape, std::move(probs), options)) {}

double ZPmf::at(std::size_t k) const {
  decode_index(k, shape_); // range check
  return probs_[k - 1];
}

bool ZPmf::all_positive() const noexcept {
  for (double v : probs_) {
    if (!(v > 0.0)) {
      return false;
    }
  }
  return true;
}

EmpiricalPmf::EmpiricalPmf(PairShape shape, std::vector<std::uint64_t> counts)
    : shape_(shape), counts_(std::move(counts)) {
  if (counts_.size() != shape_.cells()) {
    throw std::invalid_argument("expected " + std::to_string(shape_.cells()) + " counts, got " +
                                std::to_string(counts_.size()));
  }
  n_ = std::accumulate(counts_.begin(), counts_.end(), std::uint64_t{0});
  if (n_ == 0) {
    throw std::invalid_argument("empty sample: n = 0");
  }
}

std::vector<double> EmpiricalPmf::freqs() const {
  std::vector<double> out(counts_.size());
  const double n = static_cast<double>(n_);
  for (std::size_t k = 0; k < counts_.size(); ++k) {
    out[k] = static_cast<double>(counts_[k]) / n;
  }
  return out;
}

ZPmf EmpiricalPmf::to_zpmf() const { return ZPmf(shape_, freqs()); }

LabeledAlphabets::LabeledAlphabets(std::vector<std::string> x_labels,
                                   std::vector<std::string> y_labels)
    : x_labels_(std::move(x_labels)), y_labels_(std::move(y_labels)) {
  auto check_distinct = [](const std::vector<std::string> &labels, const char *axis) {
    if (labels.empty()) {
      throw std::invalid_argument(std::string(axis) + " alphabet is empty");
    }
    for (std::size_t a = 0; a < labels.size(); ++a) {
      for (std::size_t b = a + 1; b < labels.size(); ++b) {
        if (labels[a] == labels[b]) {
          throw std::invalid_argument(std::string(axis) + " label '" + labels[a] +
                                      "' appears twice");
        }
      }
    }
  };
  check_distinct(x_labels_, "X");
  check_distinct(y_labels_, "Y");
}

ZPmf z_view(const JointPmf &joint) {
  const PairShape &shape = joint.shape();
  std::vector<double> z(shape.cells());
  for (std::size_t i = 1; i <= shape.rows(); ++i) {
    for (std::size_t j = 1; j <= shape.cols(); ++j) {
      z[encode_pair(i, j, shape) - 1] = joint.at(i, j);
    }
  }
  return ZPmf(shape, std::move(z));
}

JointPmf joint_view(const ZPmf &z) {
  const PairShape &shape = z.shape();
  std::vector<double> table(shape.cells());
  for (std::size_t k = 1; k <= shape.cells(); ++k) {
    const Cell c = decode_index(k, shape);
    table[(c.row - 1) * shape.cols() + (c.col - 1)] = z.at(k);
  }
  return JointPmf(shape, std::move(table));
}

EmpiricalPmf estimate_pmf(std::span<const std::size_t> sample, const PairShape &shape) {
  if (sample.empty()) {
    throw std::invalid_argument("empty sample: n = 0");
  }
  std::vector<std::uint64_t> counts(shape.cells(), 0);
  for (std::size_t pos = 0; pos < sample.size(); ++pos) {
    const std::size_t k = sample[pos];
    if (k < 1 || k > shape.cells()) {
      throw std::invalid_argument("sample position " + std::to_string(pos + 1) + ": symbol " +
                                  std::to_string(k) + " out of range [1, " +
                                  std::to_string(shape.cells()) + "]");
    }
    ++counts[k - 1];
  }
  return EmpiricalPmf(shape, std::move(counts));
}

std::vector<double> marginal_x(const ZPmf &p) {
  const std::size_t r = p.shape().rows();
  const std::size_t s = p.shape().cols();
  const auto probs = p.probs();
  std::vector<double> out(r, 0.0);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < s; ++j) {
      out[i] += probs[s * i + j];
    }
  }
  return out;
}

std::vector<double> marginal_y(const ZPmf &p) {
  const std::size_t r = p.shape().rows();
  const std::size_t s = p.shape().cols();
  const auto probs = p.probs();
  std::vector<double> out(s, 0.0);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < s; ++j) {
      out[j] += probs[s * i + j];
    }
  }
  return out;
}

std::vector<double> conditional_x_given_y(const ZPmf &p, std::size_t col) {
  const PairShape &shape = p.shape();
  encode_pair(1, col, shape);
  const double py = marginal_y(p)[col - 1];
  if (!(py > 0.0)) {
    throw std::domain_error("conditioning event has probability zero (Y = y_" +
                            std::to_string(col) + ")");
  }
  std::vector<double> out(shape.rows());
  for (std::size_t i = 1; i <= shape.rows(); ++i) {
    out[i - 1] = p.at(encode_pair(i, col, shape)) / py;
  }
  return out;
}

std::vector<double> conditional_y_given_x(const ZPmf &p, std::size_t row) {
  const PairShape &shape = p.shape();
  encode_pair(row, 1, shape);
  const double px = marginal_x(p)[row - 1];
  if (!(px > 0.0)) {
    throw std::domain_error("conditioning event has probability zero (X = x_" +
                            std::to_string(row) + ")");
  }
  std::vector<double> out(shape.cols());
  for (std::size_t j = 1; j <= shape.cols(); ++j) {
    out[j - 1] = p.at(encode_pair(row, j, shape)) / px;
  }
  return out;
}

ZPmf product_of_marginals(const ZPmf &p) {
  const auto px = marginal_x(p);
  const auto py = marginal_y(p);
  const PairShape &shape = p.shape();
  std::vector<double> out(shape.cells());
  for (std::size_t i = 0; i < shape.rows(); ++i) {
    for (std::size_t j = 0; j < shape.cols(); ++j) {
      out[shape.cols() * i + j] = px[i] * py[j];
    }
  }
  return ZPmf(shape, std::move(out));
}

} // namespace jointinfo
