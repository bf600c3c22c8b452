#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "jointinfo/asymptotics.hpp"
#include "jointinfo/inference.hpp"
#include "jointinfo/montecarlo.hpp"
#include "oracles/oracles.hpp"

namespace jointinfo {
namespace {

ZPmf table() { return ZPmf(PairShape(2, 2), oracle::kTable); }

std::vector<std::uint64_t> default_sizes() {
  std::vector<std::uint64_t> sizes;
  for (std::uint64_t n = 100; n <= 30000; n += 100) {
    sizes.push_back(n);
  }
  return sizes;
}

TEST(Rng, GoldenValues) {
  // Pinned so that any change to seeding or the generator is caught.
  // First SplitMix64 output for seed 0.
  EXPECT_EQ(mix64(0x9e3779b97f4a7c15ULL), 0xe220a8397b1dcdafULL);
  EXPECT_EQ(RngSpec{0}.stream_seed(0), 0x4e96155e5f0a1c3fULL);
  Xoshiro256 engine(RngSpec{0}.stream_seed(0));
  EXPECT_EQ(engine(), 0x6d07c1b1feb84c00ULL);
  EXPECT_EQ(engine(), 0xc72d8dfa17b344c9ULL);
  EXPECT_EQ(engine(), 0x98c002abac8cfe0aULL);
}

TEST(Rng, StreamsAreDistinct) {
  const RngSpec rng{7};
  EXPECT_NE(rng.stream_seed(0), rng.stream_seed(1));
  EXPECT_NE(RngSpec{8}.stream_seed(0), rng.stream_seed(0));
  auto a = rng.engine(3);
  auto b = rng.engine(3);
  for (int i = 0; i < 100; ++i) {
    ASSERT_EQ(a(), b());
  }
}

TEST(Sampler, DegenerateAlwaysSameCell) {
  const auto draws = sample_z(ZPmf(PairShape(2, 2), {1, 0, 0, 0}), 1000, RngSpec{1}, 0);
  EXPECT_TRUE(std::all_of(draws.begin(), draws.end(), [](std::size_t k) { return k == 1; }));
  const auto inner = sample_z(ZPmf(PairShape(2, 2), {0, 0, 1, 0}), 1000, RngSpec{1}, 0);
  EXPECT_TRUE(std::all_of(inner.begin(), inner.end(), [](std::size_t k) { return k == 3; }));
}

TEST(Sampler, NeverDrawsEmptyCells) {
  const ZPmf p(PairShape(2, 3), {0.0, 0.3, 0.0, 0.3, 0.4, 0.0});
  const EmpiricalPmf emp = sample_counts(p, 100000, RngSpec{3}, 0);
  EXPECT_EQ(emp.counts()[0], 0u);
  EXPECT_EQ(emp.counts()[2], 0u);
  EXPECT_EQ(emp.counts()[5], 0u);
}

TEST(Sampler, Deterministic) {
  const RngSpec rng{42};
  EXPECT_EQ(sample_z(table(), 5000, rng, 9), sample_z(table(), 5000, rng, 9));
  EXPECT_NE(sample_z(table(), 5000, rng, 9), sample_z(table(), 5000, rng, 10));
  const auto draws = sample_z(table(), 5000, rng, 9);
  EXPECT_EQ(estimate_pmf(draws, PairShape(2, 2)), sample_counts(table(), 5000, rng, 9));
  EXPECT_THROW(sample_z(table(), 0, rng, 0), std::invalid_argument);
}

TEST(Sampler, UniformConvergence) {
  const auto draws = sample_z(table(), 1'000'000, RngSpec{99}, 0);
  const auto f = estimate_pmf(draws, PairShape(2, 2)).freqs();
  for (std::size_t k = 0; k < 4; ++k) {
    EXPECT_LE(std::abs(f[k] - oracle::kTable[k]), 0.002);
  }
}

TEST(Trace, ConvergesOnTable) {
  const auto sizes = default_sizes();
  const ConvergenceTrace h = convergence_trace(table(), sizes, Measure::JointEntropy, RngSpec{7});
  ASSERT_EQ(h.estimates.size(), sizes.size());
  ASSERT_EQ(h.ratio.size(), sizes.size());
  EXPECT_NEAR(h.true_value, 1.2798542258336674, 1e-15);
  EXPECT_LE(h.abs_errors.back(), 0.01);
  for (std::size_t t = 0; t < sizes.size(); ++t) {
    ASSERT_TRUE(std::isfinite(h.ratio[t]));
    ASSERT_NEAR(h.abs_errors[t], std::abs(h.estimates[t] - h.true_value), 1e-15);
  }
  // Empirical check of the a.s. bound limsup ratio <= A(p).
  EXPECT_LE(h.ratio.back(), 1.25 * rate_constant(table()));

  const ConvergenceTrace m =
      convergence_trace(table(), sizes, Measure::MutualInformation, RngSpec{7});
  EXPECT_LE(m.abs_errors.back(), 0.002);
}

TEST(Trace, DegenerateIsExact) {
  const std::vector<std::uint64_t> sizes = {1, 10, 100};
  const ConvergenceTrace t =
      convergence_trace(ZPmf(PairShape(1, 1), {1.0}), sizes, Measure::JointEntropy, RngSpec{});
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    EXPECT_EQ(t.estimates[i], 0.0);
    EXPECT_EQ(t.abs_errors[i], 0.0);
    EXPECT_EQ(t.a_zn[i], 0.0);
    EXPECT_EQ(t.ratio[i], 0.0);
  }
}

TEST(Trace, RejectsBadSizes) {
  const std::vector<std::uint64_t> unsorted = {10, 10};
  EXPECT_THROW(convergence_trace(table(), unsorted, Measure::JointEntropy, RngSpec{}),
               std::invalid_argument);
  const std::vector<std::uint64_t> zero = {0, 10};
  EXPECT_THROW(convergence_trace(table(), zero, Measure::JointEntropy, RngSpec{}),
               std::invalid_argument);
}

TEST(Studies, ThreadCountDoesNotChangeResults) {
  const auto sizes = default_sizes();
  const auto t1 = convergence_trace(table(), sizes, Measure::MutualInformation, RngSpec{5}, {1});
  const auto t4 = convergence_trace(table(), sizes, Measure::MutualInformation, RngSpec{5}, {4});
  EXPECT_EQ(t1.estimates, t4.estimates);
  EXPECT_EQ(t1.ratio, t4.ratio);

  const auto s1 = normality_study(table(), 2000, 300, Measure::JointEntropy, RngSpec{5}, {1});
  const auto s3 = normality_study(table(), 2000, 300, Measure::JointEntropy, RngSpec{5}, {3});
  EXPECT_EQ(s1.t_values, s3.t_values);
  EXPECT_EQ(s1.histogram.counts, s3.histogram.counts);

  EXPECT_EQ(rejection_rate(table(), 1000, 200, 0.05, RngSpec{5}, {1}),
            rejection_rate(table(), 1000, 200, 0.05, RngSpec{5}, {4}));
}

TEST(Normality, MutualInformationOnTable) {
  const NormalityStudy s =
      normality_study(table(), 20000, 2000, Measure::MutualInformation, RngSpec{11});
  EXPECT_LE(std::abs(s.mean), 0.1);
  EXPECT_LE(std::abs(s.variance - 1.0), 0.15);
  EXPECT_EQ(s.t_values.size(), 2000u);
  EXPECT_NEAR(s.sigma, std::sqrt(0.007908305183178352), 1e-15);
}

TEST(Normality, EntropyOnTable) {
  const NormalityStudy s =
      normality_study(table(), 20000, 2000, Measure::JointEntropy, RngSpec{12});
  EXPECT_LE(s.ks_distance, 0.05);
  const auto total = std::accumulate(s.histogram.counts.begin(), s.histogram.counts.end(),
                                     std::uint64_t{0});
  EXPECT_EQ(total, 2000u);
  EXPECT_EQ(s.histogram.edges.size(), 41u);
  EXPECT_DOUBLE_EQ(s.histogram.edges.front(), -4.0);
  EXPECT_DOUBLE_EQ(s.histogram.edges.back(), 4.0);
  EXPECT_TRUE(std::is_sorted(s.qq_observed.begin(), s.qq_observed.end()));
  EXPECT_TRUE(std::is_sorted(s.qq_theoretical.begin(), s.qq_theoretical.end()));
  EXPECT_NEAR(s.qq_theoretical.front(), -s.qq_theoretical.back(), 1e-12);
}

TEST(Normality, Preconditions) {
  const ZPmf uniform(PairShape(2, 2), {0.25, 0.25, 0.25, 0.25});
  try {
    normality_study(uniform, 5000, 200, Measure::JointEntropy, RngSpec{});
    FAIL();
  } catch (const std::invalid_argument &e) {
    EXPECT_NE(std::string(e.what()).find("degenerate CLT"), std::string::npos);
  }
  EXPECT_THROW(normality_study(table(), 999, 200, Measure::JointEntropy, RngSpec{}),
               std::invalid_argument);
  EXPECT_THROW(normality_study(table(), 5000, 99, Measure::JointEntropy, RngSpec{}),
               std::invalid_argument);
}

TEST(Histogram, ClampsOutliers) {
  const std::vector<double> v = {-10.0, -4.0, -0.1, 0.0, 3.99, 4.0, 50.0};
  const Histogram h = make_histogram(v);
  EXPECT_EQ(h.counts.front(), 2u);
  EXPECT_EQ(h.counts.back(), 3u);
  EXPECT_EQ(h.counts[19], 1u);
  EXPECT_EQ(h.counts[20], 1u);
  EXPECT_THROW(make_histogram(v, 0), std::invalid_argument);
}

TEST(KsDistance, ExactQuantilesGiveHalfStep) {
  const std::size_t m = 400;
  std::vector<double> v(m);
  for (std::size_t i = 0; i < m; ++i) {
    v[i] = normal_quantile((i + 0.5) / m);
  }
  EXPECT_NEAR(ks_distance_to_normal(v), 0.5 / m, 1e-12);
  std::reverse(v.begin(), v.end());
  EXPECT_NEAR(ks_distance_to_normal(v), 0.5 / m, 1e-12);
  std::vector<double> shifted = v;
  for (double &x : shifted) {
    x += 10.0;
  }
  EXPECT_GT(ks_distance_to_normal(shifted), 0.99);
}

TEST(RejectionRate, PowerOnTable) {
  EXPECT_GE(rejection_rate(table(), 30000, 200, 0.05, RngSpec{21}), 0.99);
}

TEST(RejectionRate, MatchesTestContract) {
  EXPECT_THROW(rejection_rate(ZPmf(PairShape(1, 2), {0.5, 0.5}), 100, 10, 0.05, RngSpec{}),
               std::invalid_argument);
  // One row of mass: every sample is empirically independent, so the test never rejects.
  const ZPmf one_row(PairShape(2, 2), {0.5, 0.5, 0.0, 0.0});
  const RngSpec rng{4};
  std::size_t direct = 0;
  for (std::size_t i = 0; i < 50; ++i) {
    direct += independence_test(sample_counts(one_row, 500, rng, i), 0.05).reject;
  }
  EXPECT_EQ(rejection_rate(one_row, 500, 50, 0.05, rng), double(direct) / 50.0);
  EXPECT_EQ(direct, 0u);
}

TEST(VarianceCheck, TableBothMeasures) {
  const VarianceCheck h = variance_check(table(), 20000, 2000, Measure::JointEntropy, RngSpec{31});
  EXPECT_NEAR(h.empirical / 0.180920, 1.0, 0.10);
  EXPECT_NEAR(h.canonical, 0.18092168665391806, 1e-13);
  ASSERT_TRUE(h.three_halves.has_value());
  const VarianceCheck m =
      variance_check(table(), 20000, 2000, Measure::MutualInformation, RngSpec{32});
  EXPECT_NEAR(m.empirical / 0.007908, 1.0, 0.10);
}

// At an independent table 2n MI ~ chi^2_df, so Var(sqrt(n) MI) ~ df / (2n) -> 0.
TEST(VarianceCheck, ProductIsSuperefficient) {
  const ZPmf prod(PairShape(2, 2), {0.18, 0.42, 0.12, 0.28});
  double previous = INFINITY;
  for (std::uint64_t n : {2000u, 20000u}) {
    const VarianceCheck v = variance_check(prod, n, 4000, Measure::MutualInformation, RngSpec{n});
    EXPECT_NEAR(v.empirical * 2.0 * double(n), 1.0, 0.25) << n;
    EXPECT_LT(v.empirical, previous);
    EXPECT_NEAR(v.canonical, 0.0, 1e-14);
    previous = v.empirical;
  }
}

} // namespace
} // namespace jointinfo
