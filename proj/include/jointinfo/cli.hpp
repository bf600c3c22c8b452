#ifndef JOINTINFO_CLI_HPP_
#define JOINTINFO_CLI_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "jointinfo/pmf.hpp"

namespace jointinfo::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitUsage = 64;

inline constexpr int kSchemaVersion = 1;

/// Malformed input or an unsatisfied precondition; maps to exit code 2.
class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct PairsData {
  LabeledAlphabets alphabets;
  std::vector<std::size_t> sample; // 1-based Z indices
};

struct CountsData {
  LabeledAlphabets alphabets;
  EmpiricalPmf emp;
};

/// Rows "x_label,y_label". Labels are indexed in order of first appearance.
/// Blank lines are skipped; `header` drops the first non-blank line.
PairsData parse_pairs_csv(std::istream &in, bool header = false);

/// Rows "x_label,y_label,count". Cells without a row count as 0.
CountsData parse_counts_csv(std::istream &in, bool header = false);

/// One row per cell (zeros included) in Z order; parse_counts_csv inverts it.
std::string serialize_counts_csv(const EmpiricalPmf &emp, const LabeledAlphabets &alphabets);

/// "start:stop:step" -> start, start+step, ... <= stop. A bare integer is a single size.
std::vector<std::uint64_t> parse_sizes(const std::string &spec);

struct RunConfig {
  std::string command;          // estimate | test | trace | normality | power
  std::string input;            // path, "-" for stdin, empty for none
  std::string format = "pairs"; // pairs | counts
  bool header = false;
  double alpha = 0.05;
  std::uint64_t seed = 0;
  std::uint64_t n = 20000;
  std::size_t replicates = 2000;
  std::string sizes = "100:30000:100";
  std::string measure = "entropy";
  std::string output = "-";
  std::string output_format = "json"; // json | csv
  /// Replicate-level worker threads. Reports do not depend on it and do not record it.
  unsigned threads = 1;
};

/// Executes one command and writes its report to `out` (or to config.output).
/// Returns kExitOk or kExitInputError; diagnostics go to `err`.
int run(const RunConfig &config, std::ostream &out, std::ostream &err);

/// Parses command-line arguments (argv[0] is the program name) and calls run.
/// Unknown commands or flags print usage to `err` and return kExitUsage.
int main_entry(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace jointinfo::cli

#endif // JOINTINFO_CLI_HPP_
