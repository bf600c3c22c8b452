#include "jointinfo/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace jointinfo {

namespace {

void require_positive(const ZPmf &p, const char *what) {
  if (!p.all_positive()) {
    throw std::invalid_argument(std::string(what) +
                                ": strictly positive p.m.f. required (a cell is zero)");
  }
}

// sum p w^2 - (sum p w)^2 in centred form; cells with p = 0 are skipped.
double centred_variance(std::span<const double> p, std::span<const double> w) {
  double mean = 0.0;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (p[k] > 0.0) {
      mean += p[k] * w[k];
    }
  }
  double var = 0.0;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (p[k] > 0.0) {
      const double d = w[k] - mean;
      var += p[k] * d * d;
    }
  }
  return var;
}

double three_halves_form(std::span<const double> p, std::span<const double> w) {
  double diag = 0.0;
  for (std::size_t k = 0; k < p.size(); ++k) {
    diag += p[k] * (1.0 - p[k]) * w[k] * w[k];
  }
  double cross = 0.0;
  for (std::size_t k = 0; k < p.size(); ++k) {
    for (std::size_t l = 0; l < p.size(); ++l) {
      if (k != l) {
        cross += std::pow(p[k] * p[l], 1.5) * w[k] * w[l];
      }
    }
  }
  return diag - 2.0 * cross;
}

std::vector<double> mi_weights(const ZPmf &p) {
  const auto px = marginal_x(p);
  const auto py = marginal_y(p);
  const std::size_t s = p.shape().cols();
  const auto probs = p.probs();
  std::vector<double> b(probs.size(), 0.0);
  for (std::size_t i = 0; i < px.size(); ++i) {
    for (std::size_t j = 0; j < s; ++j) {
      const double pij = probs[s * i + j];
      if (pij > 0.0) {
        b[s * i + j] = std::log(pij / (px[i] * py[j]));
      }
    }
  }
  return b;
}

} // namespace

double rate_constant(const ZPmf &p) {
  require_positive(p, "rate_constant");
  double a = 0.0;
  for (double v : p.probs()) {
    a += std::abs(1.0 + std::log(v));
  }
  return a;
}

VariancePair entropy_variance(const ZPmf &p) {
  const auto probs = p.probs();
  std::vector<double> w(probs.size(), 0.0);
  for (std::size_t k = 0; k < probs.size(); ++k) {
    if (probs[k] > 0.0) {
      w[k] = 1.0 + std::log(probs[k]);
    }
  }
  VariancePair out;
  out.canonical = centred_variance(probs, w);
  if (p.all_positive()) {
    out.three_halves = three_halves_form(probs, w);
  }
  return out;
}

VariancePair mi_variance(const ZPmf &p) {
  const auto probs = p.probs();
  const auto b = mi_weights(p);
  VariancePair out;
  out.canonical = centred_variance(probs, b);
  if (p.all_positive()) {
    out.three_halves = three_halves_form(probs, b);
  }
  return out;
}

VariancePair diagonal_mi_variance(const ZPmf &p) {
  const PairShape &shape = p.shape();
  if (!shape.is_square()) {
    throw std::domain_error("diagonal variance requires a square shape (r = " +
                            std::to_string(shape.rows()) + ", s = " +
                            std::to_string(shape.cols()) + ")");
  }
  const auto b_all = mi_weights(p);
  const std::size_t s = shape.cols();
  std::vector<double> pd(s), bd(s);
  bool positive = true;
  for (std::size_t i = 1; i <= s; ++i) {
    const std::size_t k = diagonal_index(i, shape);
    pd[i - 1] = p.at(k);
    bd[i - 1] = b_all[k - 1];
    positive = positive && pd[i - 1] > 0.0;
  }
  // The diagonal mass need not be 1, so no centring here.
  double m1 = 0.0, m2 = 0.0;
  for (std::size_t i = 0; i < s; ++i) {
    m1 += pd[i] * bd[i];
    m2 += pd[i] * bd[i] * bd[i];
  }
  VariancePair out;
  out.canonical = std::max(0.0, m2 - m1 * m1);
  if (positive && p.all_positive()) {
    out.three_halves = three_halves_form(pd, bd);
  }
  return out;
}

VariancePair marginal_variance(const ZPmf &p, Axis axis, std::size_t index) {
  const PairShape &shape = p.shape();
  std::vector<double> cells;
  if (axis == Axis::X) {
    encode_pair(index, 1, shape);
    for (std::size_t j = 1; j <= shape.cols(); ++j) {
      cells.push_back(p.at(encode_pair(index, j, shape)));
    }
  } else {
    encode_pair(1, index, shape);
    for (std::size_t i = 1; i <= shape.rows(); ++i) {
      cells.push_back(p.at(encode_pair(i, index, shape)));
    }
  }
  double m = 0.0;
  for (double v : cells) {
    m += v;
  }
  const std::vector<double> ones(cells.size(), 1.0);
  VariancePair out;
  out.canonical = m * (1.0 - m);
  out.three_halves = three_halves_form(cells, ones);
  return out;
}

Eigen::MatrixXd multinomial_covariance(const ZPmf &p) {
  require_positive(p, "multinomial_covariance");
  const auto probs = p.probs();
  const auto n = static_cast<Eigen::Index>(probs.size());
  Eigen::MatrixXd sigma(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    for (Eigen::Index l = 0; l < n; ++l) {
      sigma(k, l) = k == l ? 1.0 - probs[k] : -std::sqrt(probs[k] * probs[l]);
    }
  }
  return sigma;
}

Interval confidence_interval(double estimate, double variance, std::uint64_t n, double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw std::invalid_argument("alpha must lie in (0, 1), got " + std::to_string(alpha));
  }
  if (!(variance >= 0.0)) {
    throw std::invalid_argument("variance must be >= 0");
  }
  if (n == 0) {
    throw std::invalid_argument("n must be >= 1");
  }
  const double half =
      normal_quantile(1.0 - alpha / 2.0) * std::sqrt(variance / static_cast<double>(n));
  return Interval{estimate - half, estimate + half};
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

double normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw std::invalid_argument("normal_quantile: p must lie in (0, 1)");
  }
  // Acklam's rational approximation (relative error < 1.15e-9).
  static constexpr double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                 -2.759285104469687e+02, 1.383577518672690e+02,
                                 -3.066479806614716e+01, 2.506628277459239e+00};
  static constexpr double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                 -1.556989798598866e+02, 6.680131188771972e+01,
                                 -1.328068155288572e+01};
  static constexpr double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                 -2.400758277161838e+00, -2.549732539343734e+00,
                                 4.374664141464968e+00,  2.938163982698783e+00};
  static constexpr double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                                 2.445134137142996e+00, 3.754408661907416e+00};
  constexpr double p_low = 0.02425;

  double x;
  if (p < p_low) {
    const double q = std::sqrt(-2.0 * std::log(p));
    x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  } else if (p <= 1.0 - p_low) {
    const double q = p - 0.5;
    const double r = q * q;
    x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
        (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
  } else {
    const double q = std::sqrt(-2.0 * std::log1p(-p));
    x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }

  // Halley refinement.
  const double e = normal_cdf(x) - p;
  const double u = e * std::sqrt(2.0 * std::numbers::pi) * std::exp(0.5 * x * x);
  return x - u / (1.0 + 0.5 * x * u);
}

EstimateReport estimate_report(const EmpiricalPmf &emp, Measure measure, double alpha) {
  const ZPmf p = emp.to_zpmf();
  EstimateReport report;
  report.measure = measure;
  report.n = emp.n();
  report.alpha = alpha;
  if (measure == Measure::JointEntropy) {
    report.estimate = joint_entropy(p);
    report.variance = entropy_variance(p);
  } else {
    report.estimate = std::max(0.0, mutual_information(p));
    report.variance = mi_variance(p);
  }
  report.std_error = std::sqrt(report.variance.canonical / static_cast<double>(emp.n()));
  report.ci = confidence_interval(report.estimate, report.variance.canonical, emp.n(), alpha);
  return report;
}

} // namespace jointinfo
