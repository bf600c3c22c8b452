#ifndef JOINTINFO_INFERENCE_HPP_
#define JOINTINFO_INFERENCE_HPP_

#include <cstdint>

#include "jointinfo/pmf.hpp"

namespace jointinfo {

/// Regularized lower incomplete gamma P(a, x), a > 0, x >= 0.
/// Series for x < a + 1, Lentz continued fraction otherwise.
double regularized_gamma_p(double a, double x);
/// Regularized upper incomplete gamma Q(a, x) = 1 - P(a, x), without cancellation.
double regularized_gamma_q(double a, double x);

/// P(df/2, x/2). Throws std::invalid_argument for x < 0 or df == 0.
double chi_square_cdf(double x, unsigned df);
/// Upper tail 1 - chi_square_cdf(x, df).
double chi_square_sf(double x, unsigned df);
/// x with chi_square_cdf(x, df) = p, for 0 < p < 1. Newton iterations kept
/// inside a bisection bracket.
double chi_square_quantile(double p, unsigned df);

/// Likelihood-ratio statistic 2 n MI(p_n). Not clamped.
double lrt_statistic(const EmpiricalPmf &emp);

struct TestReport {
  double gamma_sq = 0.0;
  double mi_estimate = 0.0;
  unsigned df = 0;
  double threshold = 0.0;    // (1 - alpha) quantile of chi^2_df
  double mi_threshold = 0.0; // threshold / (2n)
  double p_value = 1.0;
  bool reject = false;
  double alpha = 0.05;
  std::uint64_t n = 0;
};

/// Independence test: reject when gamma_sq exceeds the chi^2_{(r-1)(s-1)}
/// quantile at 1 - alpha. df stays (r-1)(s-1) even when the sample leaves a
/// row or column empty. Throws std::invalid_argument when r or s is 1.
TestReport independence_test(const EmpiricalPmf &emp, double alpha);

} // namespace jointinfo

#endif // JOINTINFO_INFERENCE_HPP_
