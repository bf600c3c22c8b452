#include "jointinfo/inference.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "jointinfo/asymptotics.hpp"
#include "jointinfo/measures.hpp"

namespace jointinfo {

namespace {

constexpr int kMaxIterations = 1000;
constexpr double kEps = 1e-16;

// log(x^a e^{-x} / Gamma(a))
double log_prefactor(double a, double x) { return a * std::log(x) - x - std::lgamma(a); }

double gamma_p_series(double a, double x) {
  double ap = a;
  double term = 1.0 / a;
  double sum = term;
  for (int it = 0; it < kMaxIterations; ++it) {
    ap += 1.0;
    term *= x / ap;
    sum += term;
    if (std::abs(term) < std::abs(sum) * kEps) {
      break;
    }
  }
  return sum * std::exp(log_prefactor(a, x));
}

double gamma_q_continued_fraction(double a, double x) {
  constexpr double tiny = std::numeric_limits<double>::min() / kEps;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= kMaxIterations; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) {
      d = tiny;
    }
    c = b + an / c;
    if (std::abs(c) < tiny) {
      c = tiny;
    }
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < kEps) {
      break;
    }
  }
  return std::exp(log_prefactor(a, x)) * h;
}

void check_gamma_args(double a, double x) {
  if (!(a > 0.0)) {
    throw std::invalid_argument("incomplete gamma: shape must be > 0");
  }
  if (!(x >= 0.0)) {
    throw std::invalid_argument("incomplete gamma: x must be >= 0");
  }
}

void check_chi_args(double x, unsigned df) {
  if (df == 0) {
    throw std::invalid_argument("chi-square: degrees of freedom must be >= 1");
  }
  if (!(x >= 0.0)) {
    throw std::invalid_argument("chi-square: x must be >= 0");
  }
}

double chi_square_pdf(double x, unsigned df) {
  const double k = 0.5 * df;
  if (x <= 0.0) {
    return df == 1 ? std::numeric_limits<double>::infinity() : (df == 2 ? 0.5 : 0.0);
  }
  return std::exp((k - 1.0) * std::log(x) - 0.5 * x - k * std::numbers::ln2 - std::lgamma(k));
}

} // namespace

double regularized_gamma_p(double a, double x) {
  check_gamma_args(a, x);
  if (x == 0.0) {
    return 0.0;
  }
  if (std::isinf(x)) {
    return 1.0;
  }
  return x < a + 1.0 ? gamma_p_series(a, x) : 1.0 - gamma_q_continued_fraction(a, x);
}

double regularized_gamma_q(double a, double x) {
  check_gamma_args(a, x);
  if (x == 0.0) {
    return 1.0;
  }
  if (std::isinf(x)) {
    return 0.0;
  }
  return x < a + 1.0 ? 1.0 - gamma_p_series(a, x) : gamma_q_continued_fraction(a, x);
}

double chi_square_cdf(double x, unsigned df) {
  check_chi_args(x, df);
  return regularized_gamma_p(0.5 * df, 0.5 * x);
}

double chi_square_sf(double x, unsigned df) {
  check_chi_args(x, df);
  return regularized_gamma_q(0.5 * df, 0.5 * x);
}

double chi_square_quantile(double p, unsigned df) {
  if (!(p > 0.0 && p < 1.0)) {
    throw std::invalid_argument("chi-square quantile: p must lie in (0, 1), got " +
                                std::to_string(p));
  }
  if (df == 0) {
    throw std::invalid_argument("chi-square: degrees of freedom must be >= 1");
  }
  if (df == 2) {
    return -2.0 * std::log1p(-p);
  }

  // Residual cdf(x) - p, taken from whichever tail is more accurate.
  const auto residual = [&](double x) {
    return p < 0.5 ? chi_square_cdf(x, df) - p : (1.0 - p) - chi_square_sf(x, df);
  };

  double lo = 0.0;
  double hi = std::max(1.0, 2.0 * df);
  while (residual(hi) < 0.0) {
    lo = hi;
    hi *= 2.0;
  }

  // Wilson-Hilferty starting point, used when it falls inside the bracket.
  const double k = static_cast<double>(df);
  const double v = 2.0 / (9.0 * k);
  const double wh = k * std::pow(1.0 - v + normal_quantile(p) * std::sqrt(v), 3.0);
  double x = (wh > lo && wh < hi) ? wh : 0.5 * (lo + hi);

  for (int it = 0; it < 200; ++it) {
    const double f = residual(x);
    if (f == 0.0) {
      return x;
    }
    if (f < 0.0) {
      lo = x;
    } else {
      hi = x;
    }
    double next = x - f / chi_square_pdf(x, df);
    if (!(next > lo && next < hi)) {
      next = 0.5 * (lo + hi);
    }
    if (std::abs(next - x) <= 1e-15 * std::max(1.0, x) || hi - lo <= 1e-300) {
      return next;
    }
    x = next;
  }
  return x;
}

double lrt_statistic(const EmpiricalPmf &emp) {
  return 2.0 * static_cast<double>(emp.n()) * mutual_information(emp.to_zpmf());
}

TestReport independence_test(const EmpiricalPmf &emp, double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw std::invalid_argument("alpha must lie in (0, 1), got " + std::to_string(alpha));
  }
  const PairShape &shape = emp.shape();
  if (shape.rows() < 2 || shape.cols() < 2) {
    throw std::invalid_argument("test undefined for degenerate alphabet (r = " +
                                std::to_string(shape.rows()) + ", s = " +
                                std::to_string(shape.cols()) + ")");
  }
  TestReport report;
  report.alpha = alpha;
  report.n = emp.n();
  report.df = static_cast<unsigned>((shape.rows() - 1) * (shape.cols() - 1));
  report.mi_estimate = mutual_information(emp.to_zpmf());
  report.gamma_sq = 2.0 * static_cast<double>(emp.n()) * report.mi_estimate;
  report.threshold = chi_square_quantile(1.0 - alpha, report.df);
  report.mi_threshold = report.threshold / (2.0 * static_cast<double>(emp.n()));
  report.p_value = chi_square_sf(std::max(0.0, report.gamma_sq), report.df);
  report.reject = report.gamma_sq > report.threshold;
  return report;
}

} // namespace jointinfo
