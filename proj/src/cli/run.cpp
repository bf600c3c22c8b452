#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <utility>

#include <CLI11.hpp>

#include "jointinfo/asymptotics.hpp"
#include "jointinfo/cli.hpp"
#include "jointinfo/inference.hpp"
#include "jointinfo/measures.hpp"
#include "jointinfo/montecarlo.hpp"
#include "report.hpp"

namespace jointinfo::cli {

namespace {

struct Dataset {
  LabeledAlphabets alphabets;
  EmpiricalPmf emp;
};

Dataset load_input(const RunConfig &config) {
  std::ifstream file;
  std::istream *in = &std::cin;
  if (config.input != "-") {
    file.open(config.input);
    if (!file) {
      throw InputError("cannot open input file '" + config.input + "'");
    }
    in = &file;
  }
  if (config.format == "counts") {
    auto data = parse_counts_csv(*in, config.header);
    return Dataset{std::move(data.alphabets), std::move(data.emp)};
  }
  auto data = parse_pairs_csv(*in, config.header);
  const PairShape shape = data.alphabets.shape();
  return Dataset{std::move(data.alphabets), estimate_pmf(data.sample, shape)};
}

// Truth for the simulation commands: the normalized input table, or the 2x2
// example table (0.2, 0.4, 0.1, 0.3) when no input is given.
std::pair<LabeledAlphabets, ZPmf> study_pmf(const RunConfig &config) {
  if (config.input.empty()) {
    return {LabeledAlphabets({"x1", "x2"}, {"y1", "y2"}),
            ZPmf(PairShape(2, 2), {0.2, 0.4, 0.1, 0.3})};
  }
  Dataset data = load_input(config);
  return {std::move(data.alphabets), data.emp.to_zpmf()};
}

void validate(const RunConfig &config) {
  static const std::vector<std::string> commands = {"estimate", "test", "trace", "normality",
                                                    "power"};
  if (std::find(commands.begin(), commands.end(), config.command) == commands.end()) {
    throw InputError("unknown command '" + config.command + "'");
  }
  if (config.format != "pairs" && config.format != "counts") {
    throw InputError("format must be pairs or counts, got '" + config.format + "'");
  }
  if (config.output_format != "json" && config.output_format != "csv") {
    throw InputError("output format must be json or csv, got '" + config.output_format + "'");
  }
  if (config.output_format == "csv" && config.command != "trace" &&
      config.command != "normality") {
    throw InputError("csv output is only available for trace and normality");
  }
  if (!(config.alpha > 0.0 && config.alpha < 1.0)) {
    throw InputError("alpha must lie in (0, 1)");
  }
  if ((config.command == "estimate" || config.command == "test") && config.input.empty()) {
    throw InputError(config.command + " requires --input");
  }
  if (config.n == 0 || config.replicates == 0) {
    throw InputError("n and replicates must be >= 1");
  }
  try {
    parse_measure(config.measure);
  } catch (const std::invalid_argument &e) {
    throw InputError(e.what());
  }
  if (config.command == "trace") {
    parse_sizes(config.sizes);
  }
}

std::string execute(const RunConfig &config) {
  const StudyOptions options{config.threads};
  const RngSpec rng{config.seed};
  const Measure measure = parse_measure(config.measure);

  if (config.command == "estimate") {
    const Dataset data = load_input(config);
    Json results;
    results["joint_entropy"] =
        to_json(estimate_report(data.emp, Measure::JointEntropy, config.alpha));
    results["mutual_information"] =
        to_json(estimate_report(data.emp, Measure::MutualInformation, config.alpha));
    return make_report(config, data.alphabets, std::move(results)).dump(2) + "\n";
  }
  if (config.command == "test") {
    const Dataset data = load_input(config);
    Json results;
    results["independence_test"] = to_json(independence_test(data.emp, config.alpha));
    return make_report(config, data.alphabets, std::move(results)).dump(2) + "\n";
  }

  const auto [alphabets, truth] = study_pmf(config);
  if (config.command == "trace") {
    const auto sizes = parse_sizes(config.sizes);
    const ConvergenceTrace trace = convergence_trace(truth, sizes, measure, rng, options);
    if (config.output_format == "csv") {
      return trace_csv(config, trace);
    }
    Json body = to_json(trace);
    body["rate_constant"] = truth.all_positive() ? number(rate_constant(truth)) : Json(nullptr);
    Json results;
    results["trace"] = std::move(body);
    return make_report(config, alphabets, std::move(results)).dump(2) + "\n";
  }
  if (config.command == "normality") {
    const NormalityStudy study =
        normality_study(truth, config.n, config.replicates, measure, rng, options);
    if (config.output_format == "csv") {
      return normality_csv(config, study);
    }
    const VariancePair vp =
        measure == Measure::JointEntropy ? entropy_variance(truth) : mi_variance(truth);
    Json body = to_json(study);
    body["empirical_variance"] = number(study.variance * study.sigma * study.sigma);
    body["canonical_variance"] = number(vp.canonical);
    body["three_halves_variance"] = vp.three_halves ? number(*vp.three_halves) : Json(nullptr);
    Json results;
    results["normality"] = std::move(body);
    return make_report(config, alphabets, std::move(results)).dump(2) + "\n";
  }
  // power
  const double rate =
      rejection_rate(truth, config.n, config.replicates, config.alpha, rng, options);
  const unsigned df =
      static_cast<unsigned>((truth.shape().rows() - 1) * (truth.shape().cols() - 1));
  Json body;
  body["n"] = config.n;
  body["replicates"] = config.replicates;
  body["alpha"] = number(config.alpha);
  body["df"] = df;
  body["threshold"] = number(chi_square_quantile(1.0 - config.alpha, df));
  body["true_mutual_information"] = number(mutual_information(truth));
  body["rejection_rate"] = number(rate);
  Json results;
  results["power"] = std::move(body);
  return make_report(config, alphabets, std::move(results)).dump(2) + "\n";
}

} // namespace

int run(const RunConfig &config, std::ostream &out, std::ostream &err) {
  try {
    validate(config);
    const std::string text = execute(config);
    if (config.output == "-") {
      out << text;
    } else {
      std::ofstream file(config.output, std::ios::binary);
      if (!file || !(file << text)) {
        throw InputError("cannot write output file '" + config.output + "'");
      }
      err << "jointinfo: wrote " << config.command << " report to " << config.output << '\n';
    }
    return kExitOk;
  } catch (const std::exception &e) {
    err << "jointinfo: error: " << e.what() << '\n';
    return kExitInputError;
  }
}

int main_entry(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
  CLI::App app{"Plug-in joint entropy and mutual information for paired categorical data",
               "jointinfo"};
  app.require_subcommand(1, 1);

  RunConfig config;
  const auto add_common = [&config](CLI::App *sub) {
    sub->add_option("--input", config.input, "Input CSV path ('-' for stdin)");
    sub->add_option("--format", config.format, "Input format")
        ->check(CLI::IsMember({"pairs", "counts"}))
        ->capture_default_str();
    sub->add_flag("--header", config.header, "Skip the first row of the input");
    sub->add_option("--alpha", config.alpha, "Significance level")->capture_default_str();
    sub->add_option("--seed", config.seed, "Master RNG seed")->capture_default_str();
    sub->add_option("--n", config.n, "Sample size per replicate")->capture_default_str();
    sub->add_option("--replicates", config.replicates, "Monte Carlo replicates")
        ->capture_default_str();
    sub->add_option("--sizes", config.sizes, "Trace sizes start:stop:step")
        ->capture_default_str();
    sub->add_option("--measure", config.measure, "entropy or mi")
        ->check(CLI::IsMember({"entropy", "mi"}))
        ->capture_default_str();
    sub->add_option("--output", config.output, "Report path ('-' for stdout)")
        ->capture_default_str();
    sub->add_option("--output-format", config.output_format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    sub->add_option("--threads", config.threads, "Worker threads (0 = all cores)")
        ->capture_default_str();
  };
  const std::pair<const char *, const char *> commands[] = {
      {"estimate", "Joint entropy and mutual information with confidence intervals"},
      {"test", "Likelihood-ratio test of independence"},
      {"trace", "Estimates along increasing sample sizes"},
      {"normality", "Standardized replicate statistics, histogram and QQ data"},
      {"power", "Rejection rate of the independence test"},
  };
  for (const auto &[name, description] : commands) {
    add_common(app.add_subcommand(name, description));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError &e) {
    err << "jointinfo: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }
  config.command = app.get_subcommands().front()->get_name();
  return run(config, out, err);
}

} // namespace jointinfo::cli
