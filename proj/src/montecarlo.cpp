#include "jointinfo/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>

#include "jointinfo/asymptotics.hpp"
#include "jointinfo/inference.hpp"

namespace jointinfo {

namespace {

// Runs body(i) for i in [0, count). Each index is handled exactly once; the
// first exception thrown by any worker is rethrown on the caller's thread.
void parallel_for(std::size_t count, unsigned threads,
                  const std::function<void(std::size_t)> &body) {
  if (threads == 0) {
    threads = std::max(1u, std::thread::hardware_concurrency());
  }
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) {
      body(i);
    }
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  {
    std::vector<std::jthread> workers;
    workers.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
      workers.emplace_back([&] {
        for (std::size_t i = next++; i < count && !failed; i = next++) {
          try {
            body(i);
          } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!error) {
              error = std::current_exception();
            }
            failed = true;
          }
        }
      });
    }
  }
  if (error) {
    std::rethrow_exception(error);
  }
}

double sup_deviation(const EmpiricalPmf &emp, const ZPmf &p) {
  const auto freqs = emp.freqs();
  const auto probs = p.probs();
  double sup = 0.0;
  for (std::size_t k = 0; k < probs.size(); ++k) {
    sup = std::max(sup, std::abs(freqs[k] - probs[k]));
  }
  return sup;
}

double canonical_variance(const ZPmf &p, Measure measure) {
  return measure == Measure::JointEntropy ? entropy_variance(p).canonical
                                          : mi_variance(p).canonical;
}

// Plug-in estimates for `replicates` independent samples of size n.
std::vector<double> replicate_estimates(const ZPmf &p, std::uint64_t n, std::size_t replicates,
                                        Measure measure, const RngSpec &rng,
                                        StudyOptions options) {
  std::vector<double> out(replicates);
  parallel_for(replicates, options.threads, [&](std::size_t i) {
    out[i] = evaluate(measure, sample_counts(p, n, rng, i).to_zpmf());
  });
  return out;
}

double mean_of(std::span<const double> v) {
  double m = 0.0;
  for (double x : v) {
    m += x;
  }
  return m / static_cast<double>(v.size());
}

double sample_variance(std::span<const double> v) {
  const double m = mean_of(v);
  double ss = 0.0;
  for (double x : v) {
    ss += (x - m) * (x - m);
  }
  return ss / static_cast<double>(v.size() - 1);
}

} // namespace

CategoricalSampler::CategoricalSampler(const ZPmf &p) : cumulative_(p.size()) {
  const auto probs = p.probs();
  double acc = 0.0;
  std::size_t last_positive = 0;
  for (std::size_t k = 0; k < probs.size(); ++k) {
    acc += probs[k];
    cumulative_[k] = acc;
    if (probs[k] > 0.0) {
      last_positive = k;
    }
  }
  // Close the table at exactly 1 so rounding in the running sum never
  // lets a uniform draw fall past the last cell with mass.
  for (std::size_t k = last_positive; k < cumulative_.size(); ++k) {
    cumulative_[k] = 1.0;
  }
}

std::size_t CategoricalSampler::draw(Xoshiro256 &engine) const {
  const double u = engine.uniform();
  const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
  return static_cast<std::size_t>(it - cumulative_.begin()) + 1;
}

std::vector<std::size_t> sample_z(const ZPmf &p, std::uint64_t n, const RngSpec &rng,
                                  std::uint64_t stream) {
  if (n == 0) {
    throw std::invalid_argument("sample size must be >= 1");
  }
  const CategoricalSampler sampler(p);
  auto engine = rng.engine(stream);
  std::vector<std::size_t> out(n);
  for (auto &z : out) {
    z = sampler.draw(engine);
  }
  return out;
}

EmpiricalPmf sample_counts(const ZPmf &p, std::uint64_t n, const RngSpec &rng,
                           std::uint64_t stream) {
  if (n == 0) {
    throw std::invalid_argument("sample size must be >= 1");
  }
  const CategoricalSampler sampler(p);
  auto engine = rng.engine(stream);
  std::vector<std::uint64_t> counts(p.size(), 0);
  for (std::uint64_t l = 0; l < n; ++l) {
    ++counts[sampler.draw(engine) - 1];
  }
  return EmpiricalPmf(p.shape(), std::move(counts));
}

ConvergenceTrace convergence_trace(const ZPmf &p, std::span<const std::uint64_t> sizes,
                                   Measure measure, const RngSpec &rng, StudyOptions options) {
  for (std::size_t t = 0; t < sizes.size(); ++t) {
    if (sizes[t] == 0 || (t > 0 && sizes[t] <= sizes[t - 1])) {
      throw std::invalid_argument("trace sizes must be >= 1 and strictly increasing");
    }
  }
  ConvergenceTrace trace;
  trace.measure = measure;
  trace.true_value = evaluate(measure, p);
  trace.sizes.assign(sizes.begin(), sizes.end());
  const std::size_t m = sizes.size();
  trace.estimates.resize(m);
  trace.abs_errors.resize(m);
  trace.a_zn.resize(m);
  trace.ratio.resize(m);
  parallel_for(m, options.threads, [&](std::size_t t) {
    const EmpiricalPmf emp = sample_counts(p, sizes[t], rng, t);
    const double est = evaluate(measure, emp.to_zpmf());
    const double err = std::abs(est - trace.true_value);
    const double a = sup_deviation(emp, p);
    trace.estimates[t] = est;
    trace.abs_errors[t] = err;
    trace.a_zn[t] = a;
    trace.ratio[t] = a > 0.0 ? err / a : 0.0;
  });
  return trace;
}

Histogram make_histogram(std::span<const double> values, std::size_t bins, double lo, double hi) {
  if (bins == 0 || !(hi > lo)) {
    throw std::invalid_argument("histogram needs bins >= 1 and hi > lo");
  }
  Histogram h;
  const double width = (hi - lo) / static_cast<double>(bins);
  h.edges.resize(bins + 1);
  for (std::size_t b = 0; b <= bins; ++b) {
    h.edges[b] = lo + width * static_cast<double>(b);
  }
  h.counts.assign(bins, 0);
  for (double v : values) {
    const double pos = std::floor((v - lo) / width);
    const auto b = static_cast<std::size_t>(std::clamp(pos, 0.0, static_cast<double>(bins - 1)));
    ++h.counts[b];
  }
  return h;
}

double ks_distance_to_normal(std::span<const double> values) {
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  const double m = static_cast<double>(sorted.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double f = normal_cdf(sorted[i]);
    d = std::max({d, static_cast<double>(i + 1) / m - f, f - static_cast<double>(i) / m});
  }
  return d;
}

NormalityStudy normality_study(const ZPmf &p, std::uint64_t n, std::size_t replicates,
                               Measure measure, const RngSpec &rng, StudyOptions options) {
  if (n < 1000) {
    throw std::invalid_argument("normality study needs n >= 1000, got " + std::to_string(n));
  }
  if (replicates < 100) {
    throw std::invalid_argument("normality study needs >= 100 replicates, got " +
                                std::to_string(replicates));
  }
  const double var = canonical_variance(p, measure);
  if (!(var > 0.0)) {
    throw std::invalid_argument("degenerate CLT: canonical variance of " +
                                std::string(to_string(measure)) + " is zero");
  }
  NormalityStudy study;
  study.measure = measure;
  study.n = n;
  study.replicates = replicates;
  study.true_value = evaluate(measure, p);
  study.sigma = std::sqrt(var);

  study.t_values = replicate_estimates(p, n, replicates, measure, rng, options);
  const double scale = std::sqrt(static_cast<double>(n)) / study.sigma;
  for (double &t : study.t_values) {
    t = scale * (t - study.true_value);
  }
  study.mean = mean_of(study.t_values);
  study.variance = sample_variance(study.t_values);
  study.ks_distance = ks_distance_to_normal(study.t_values);
  study.histogram = make_histogram(study.t_values);
  study.qq_observed = study.t_values;
  std::sort(study.qq_observed.begin(), study.qq_observed.end());
  study.qq_theoretical.resize(replicates);
  for (std::size_t i = 0; i < replicates; ++i) {
    study.qq_theoretical[i] =
        normal_quantile((static_cast<double>(i) + 0.5) / static_cast<double>(replicates));
  }
  return study;
}

double rejection_rate(const ZPmf &p, std::uint64_t n, std::size_t replicates, double alpha,
                      const RngSpec &rng, StudyOptions options) {
  if (replicates == 0) {
    throw std::invalid_argument("rejection rate needs >= 1 replicate");
  }
  if (n == 0) {
    throw std::invalid_argument("sample size must be >= 1");
  }
  std::vector<char> rejected(replicates, 0);
  parallel_for(replicates, options.threads, [&](std::size_t i) {
    rejected[i] = independence_test(sample_counts(p, n, rng, i), alpha).reject ? 1 : 0;
  });
  const auto hits = std::count(rejected.begin(), rejected.end(), 1);
  return static_cast<double>(hits) / static_cast<double>(replicates);
}

VarianceCheck variance_check(const ZPmf &p, std::uint64_t n, std::size_t replicates,
                             Measure measure, const RngSpec &rng, StudyOptions options) {
  if (n == 0 || replicates < 2) {
    throw std::invalid_argument("variance check needs n >= 1 and >= 2 replicates");
  }
  auto est = replicate_estimates(p, n, replicates, measure, rng, options);
  const double root_n = std::sqrt(static_cast<double>(n));
  for (double &e : est) {
    e *= root_n;
  }
  const VariancePair vp = measure == Measure::JointEntropy ? entropy_variance(p) : mi_variance(p);
  return VarianceCheck{sample_variance(est), vp.canonical, vp.three_halves};
}

} // namespace jointinfo
