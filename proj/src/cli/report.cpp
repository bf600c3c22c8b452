#include "report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace jointinfo::cli {

Json number(double v) {
  if (!std::isfinite(v)) {
    return nullptr;
  }
  // nlohmann prints the shortest round-trip form, so a value rounded to 9
  // significant digits never prints more than 9.
  return std::strtod(format_number(v).c_str(), nullptr);
}

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

namespace {

Json optional_number(const std::optional<double> &v) {
  return v ? number(*v) : Json(nullptr);
}

Json variance_json(const VariancePair &v) {
  Json j;
  j["canonical"] = number(v.canonical);
  j["three_halves"] = optional_number(v.three_halves);
  j["discrepancy"] = optional_number(v.discrepancy());
  return j;
}

std::string provenance_lines(const RunConfig &config) {
  return "# schema_version=" + std::to_string(kSchemaVersion) +
         "\n# config=" + to_json(config).dump() + "\n";
}

} // namespace

Json to_json(const RunConfig &config) {
  Json j;
  j["command"] = config.command;
  j["input"] = config.input;
  j["format"] = config.format;
  j["header"] = config.header;
  j["alpha"] = number(config.alpha);
  j["seed"] = config.seed;
  j["n"] = config.n;
  j["replicates"] = config.replicates;
  j["sizes"] = config.sizes;
  j["measure"] = config.measure;
  j["output"] = config.output;
  j["output_format"] = config.output_format;
  return j;
}

Json to_json(const LabeledAlphabets &alphabets) {
  Json j;
  j["x"] = alphabets.x_labels();
  j["y"] = alphabets.y_labels();
  return j;
}

Json to_json(const EstimateReport &report) {
  Json j;
  j["measure"] = std::string(to_string(report.measure));
  j["estimate"] = number(report.estimate);
  j["n"] = report.n;
  j["variance"] = variance_json(report.variance);
  j["std_error"] = number(report.std_error);
  j["ci_lower"] = number(report.ci.lower);
  j["ci_upper"] = number(report.ci.upper);
  j["alpha"] = number(report.alpha);
  return j;
}

Json to_json(const TestReport &report) {
  Json j;
  j["gamma_sq"] = number(report.gamma_sq);
  j["mi_estimate"] = number(std::max(0.0, report.mi_estimate));
  j["df"] = report.df;
  j["threshold"] = number(report.threshold);
  j["mi_threshold"] = number(report.mi_threshold);
  j["p_value"] = number(report.p_value);
  j["reject"] = report.reject;
  j["alpha"] = number(report.alpha);
  j["n"] = report.n;
  return j;
}

Json to_json(const ConvergenceTrace &trace) {
  Json j;
  j["measure"] = std::string(to_string(trace.measure));
  j["true_value"] = number(trace.true_value);
  Json rows = Json::array();
  for (std::size_t t = 0; t < trace.sizes.size(); ++t) {
    Json row;
    row["size"] = trace.sizes[t];
    row["estimate"] = number(trace.estimates[t]);
    row["abs_error"] = number(trace.abs_errors[t]);
    row["a_zn"] = number(trace.a_zn[t]);
    row["ratio"] = number(trace.ratio[t]);
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  return j;
}

Json to_json(const NormalityStudy &study) {
  const auto numbers = [](const std::vector<double> &v) {
    Json a = Json::array();
    for (double x : v) {
      a.push_back(number(x));
    }
    return a;
  };
  Json j;
  j["measure"] = std::string(to_string(study.measure));
  j["n"] = study.n;
  j["replicates"] = study.replicates;
  j["true_value"] = number(study.true_value);
  j["sigma"] = number(study.sigma);
  j["mean"] = number(study.mean);
  j["variance"] = number(study.variance);
  j["ks_distance"] = number(study.ks_distance);
  j["histogram"]["edges"] = numbers(study.histogram.edges);
  j["histogram"]["counts"] = study.histogram.counts;
  j["qq"]["theoretical"] = numbers(study.qq_theoretical);
  j["qq"]["observed"] = numbers(study.qq_observed);
  j["t_values"] = numbers(study.t_values);
  return j;
}

Json make_report(const RunConfig &config, const LabeledAlphabets &alphabets, Json results) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["config"] = to_json(config);
  j["alphabets"] = to_json(alphabets);
  j["results"] = std::move(results);
  return j;
}

std::string trace_csv(const RunConfig &config, const ConvergenceTrace &trace) {
  std::ostringstream os;
  os << provenance_lines(config) << "size,estimate,abs_error,a_zn,ratio\n";
  for (std::size_t t = 0; t < trace.sizes.size(); ++t) {
    os << trace.sizes[t] << ',' << format_number(trace.estimates[t]) << ','
       << format_number(trace.abs_errors[t]) << ',' << format_number(trace.a_zn[t]) << ','
       << format_number(trace.ratio[t]) << '\n';
  }
  return os.str();
}

std::string normality_csv(const RunConfig &config, const NormalityStudy &study) {
  std::ostringstream os;
  os << provenance_lines(config) << "replicate,t_value,qq_theoretical,qq_observed\n";
  for (std::size_t i = 0; i < study.t_values.size(); ++i) {
    os << i + 1 << ',' << format_number(study.t_values[i]) << ','
       << format_number(study.qq_theoretical[i]) << ',' << format_number(study.qq_observed[i])
       << '\n';
  }
  return os.str();
}

} // namespace jointinfo::cli
