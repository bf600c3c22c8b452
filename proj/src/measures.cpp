#include "jointinfo/measures.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace jointinfo {

namespace {

void check_probability_vector(std::span<const double> p, const char *name) {
  double total = 0.0;
  for (double v : p) {
    if (!std::isfinite(v) || v < 0.0) {
      throw std::invalid_argument(std::string(name) + " has a negative or non-finite entry");
    }
    total += v;
  }
  if (p.empty() || std::abs(total - 1.0) > kNormalizationTolerance) {
    throw std::invalid_argument(std::string(name) + " is not a probability vector");
  }
}

double neg_plogp_sum(std::span<const double> p) {
  double h = 0.0;
  for (double v : p) {
    if (v > 0.0) {
      h -= v * std::log(v);
    }
  }
  return h;
}

} // namespace

double entropy(std::span<const double> p) {
  check_probability_vector(p, "p");
  return neg_plogp_sum(p);
}

double joint_entropy(const ZPmf &p) { return neg_plogp_sum(p.probs()); }

double mutual_information(const ZPmf &p) {
  const auto px = marginal_x(p);
  const auto py = marginal_y(p);
  const std::size_t s = p.shape().cols();
  const auto probs = p.probs();
  double mi = 0.0;
  for (std::size_t i = 0; i < px.size(); ++i) {
    for (std::size_t j = 0; j < s; ++j) {
      const double pij = probs[s * i + j];
      if (pij > 0.0) {
        mi += pij * std::log(pij / (px[i] * py[j]));
      }
    }
  }
  return mi;
}

double kl_divergence(std::span<const double> p, std::span<const double> q) {
  if (p.size() != q.size()) {
    throw std::invalid_argument("kl_divergence: length mismatch (" + std::to_string(p.size()) +
                                " vs " + std::to_string(q.size()) + ")");
  }
  check_probability_vector(p, "p");
  check_probability_vector(q, "q");
  double d = 0.0;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (p[k] > 0.0) {
      if (!(q[k] > 0.0)) {
        throw std::invalid_argument("q vanishes where p does not (index " +
                                    std::to_string(k + 1) + ")");
      }
      d += p[k] * std::log(p[k] / q[k]);
    }
  }
  return d;
}

std::string_view to_string(Measure measure) noexcept {
  return measure == Measure::JointEntropy ? "entropy" : "mi";
}

Measure parse_measure(std::string_view name) {
  if (name == "entropy") {
    return Measure::JointEntropy;
  }
  if (name == "mi") {
    return Measure::MutualInformation;
  }
  throw std::invalid_argument("unknown measure '" + std::string(name) +
                              "' (expected entropy or mi)");
}

double evaluate(Measure measure, const ZPmf &p) {
  return measure == Measure::JointEntropy ? joint_entropy(p) : mutual_information(p);
}

} // namespace jointinfo
