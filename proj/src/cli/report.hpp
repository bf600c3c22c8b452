#ifndef JOINTINFO_CLI_REPORT_HPP_
#define JOINTINFO_CLI_REPORT_HPP_

#include <string>

#include <json.hpp>

#include "jointinfo/asymptotics.hpp"
#include "jointinfo/cli.hpp"
#include "jointinfo/inference.hpp"
#include "jointinfo/montecarlo.hpp"

namespace jointinfo::cli {

using Json = nlohmann::ordered_json;

/// Rounds to 9 significant digits; non-finite values become null.
Json number(double v);
/// "%.9g" text, for CSV cells.
std::string format_number(double v);

Json to_json(const RunConfig &config);
Json to_json(const LabeledAlphabets &alphabets);
Json to_json(const EstimateReport &report);
Json to_json(const TestReport &report);
Json to_json(const ConvergenceTrace &trace);
Json to_json(const NormalityStudy &study);

/// Top-level report {schema_version, config, alphabets, results}.
Json make_report(const RunConfig &config, const LabeledAlphabets &alphabets, Json results);

std::string trace_csv(const RunConfig &config, const ConvergenceTrace &trace);
std::string normality_csv(const RunConfig &config, const NormalityStudy &study);

} // namespace jointinfo::cli

#endif // JOINTINFO_CLI_REPORT_HPP_
