#include <algorithm>
#include <charconv>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "jointinfo/cli.hpp"

namespace jointinfo::cli {

namespace {

std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
  while (!s.empty() && is_space(s.front())) {
    s.remove_prefix(1);
  }
  while (!s.empty() && is_space(s.back())) {
    s.remove_suffix(1);
  }
  return s;
}

struct Row {
  std::size_t line = 0;
  std::vector<std::string> fields;
};

// Non-blank rows with their 1-based physical line numbers.
std::vector<Row> read_rows(std::istream &in, std::size_t expected_fields, bool header) {
  std::vector<Row> rows;
  std::string line;
  std::size_t line_no = 0;
  bool header_pending = header;
  while (std::getline(in, line)) {
    ++line_no;
    if (line_no == 1 && line.starts_with("\xEF\xBB\xBF")) {
      line.erase(0, 3);
    }
    if (trim(line).empty()) {
      continue;
    }
    std::vector<std::string> fields;
    std::string_view rest(line);
    for (;;) {
      const auto comma = rest.find(',');
      fields.emplace_back(trim(rest.substr(0, comma)));
      if (comma == std::string_view::npos) {
        break;
      }
      rest.remove_prefix(comma + 1);
    }
    if (fields.size() != expected_fields) {
      throw InputError("line " + std::to_string(line_no) + ": expected " +
                       std::to_string(expected_fields) + " fields, found " +
                       std::to_string(fields.size()));
    }
    if (header_pending) {
      header_pending = false;
      continue;
    }
    for (std::size_t f = 0; f < 2; ++f) {
      if (fields[f].empty()) {
        throw InputError("line " + std::to_string(line_no) + ": empty label in field " +
                         std::to_string(f + 1));
      }
    }
    rows.push_back(Row{line_no, std::move(fields)});
  }
  if (rows.empty()) {
    throw InputError("empty input: no data rows");
  }
  return rows;
}

// Assigns 1-based indices to labels in order of first appearance.
class LabelIndex {
public:
  std::size_t index_of(const std::string &label) {
    const auto [it, inserted] = index_.try_emplace(label, labels_.size() + 1);
    if (inserted) {
      labels_.push_back(label);
    }
    return it->second;
  }
  std::vector<std::string> take() { return std::move(labels_); }

private:
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<std::string> labels_;
};

} // namespace

PairsData parse_pairs_csv(std::istream &in, bool header) {
  const auto rows = read_rows(in, 2, header);
  LabelIndex xs, ys;
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  cells.reserve(rows.size());
  for (const Row &row : rows) {
    cells.emplace_back(xs.index_of(row.fields[0]), ys.index_of(row.fields[1]));
  }
  LabeledAlphabets alphabets(xs.take(), ys.take());
  const PairShape shape = alphabets.shape();
  std::vector<std::size_t> sample;
  sample.reserve(cells.size());
  for (const auto &[i, j] : cells) {
    sample.push_back(encode_pair(i, j, shape));
  }
  return PairsData{std::move(alphabets), std::move(sample)};
}

CountsData parse_counts_csv(std::istream &in, bool header) {
  const auto rows = read_rows(in, 3, header);
  LabelIndex xs, ys;
  struct Entry {
    std::size_t i, j;
    std::uint64_t count;
  };
  std::vector<Entry> entries;
  entries.reserve(rows.size());
  for (const Row &row : rows) {
    const std::string &text = row.fields[2];
    std::uint64_t count = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), count);
    if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
      throw InputError("line " + std::to_string(row.line) + ": count '" + text +
                       "' is not a nonnegative integer");
    }
    entries.push_back(Entry{xs.index_of(row.fields[0]), ys.index_of(row.fields[1]), count});
  }
  LabeledAlphabets alphabets(xs.take(), ys.take());
  const PairShape shape = alphabets.shape();
  std::vector<std::uint64_t> counts(shape.cells(), 0);
  std::vector<bool> seen(shape.cells(), false);
  for (std::size_t r = 0; r < entries.size(); ++r) {
    const std::size_t k = encode_pair(entries[r].i, entries[r].j, shape) - 1;
    if (seen[k]) {
      throw InputError("line " + std::to_string(rows[r].line) + ": duplicate cell (" +
                       rows[r].fields[0] + ", " + rows[r].fields[1] + ")");
    }
    seen[k] = true;
    counts[k] = entries[r].count;
  }
  if (std::all_of(counts.begin(), counts.end(), [](std::uint64_t c) { return c == 0; })) {
    throw InputError("all counts are zero");
  }
  return CountsData{std::move(alphabets), EmpiricalPmf(shape, std::move(counts))};
}

std::string serialize_counts_csv(const EmpiricalPmf &emp, const LabeledAlphabets &alphabets) {
  if (!(alphabets.shape() == emp.shape())) {
    throw std::invalid_argument("alphabet sizes do not match the table shape");
  }
  std::ostringstream os;
  const PairShape &shape = emp.shape();
  for (std::size_t k = 1; k <= shape.cells(); ++k) {
    const Cell c = decode_index(k, shape);
    os << alphabets.x_labels()[c.row - 1] << ',' << alphabets.y_labels()[c.col - 1] << ','
       << emp.counts()[k - 1] << '\n';
  }
  return os.str();
}

std::vector<std::uint64_t> parse_sizes(const std::string &spec) {
  std::vector<std::uint64_t> parts;
  std::string_view rest(spec);
  for (;;) {
    const auto colon = rest.find(':');
    const std::string_view tok = trim(rest.substr(0, colon));
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw InputError("sizes: '" + spec + "' is not start:stop:step");
    }
    parts.push_back(v);
    if (colon == std::string_view::npos) {
      break;
    }
    rest.remove_prefix(colon + 1);
  }
  if (parts.size() == 1) {
    parts = {parts[0], parts[0], 1};
  }
  if (parts.size() != 3 || parts[0] == 0 || parts[2] == 0 || parts[1] < parts[0]) {
    throw InputError("sizes: '" + spec + "' must be start:stop:step with 1 <= start <= stop, step >= 1");
  }
  std::vector<std::uint64_t> sizes;
  for (std::uint64_t v = parts[0]; v <= parts[1]; v += parts[2]) {
    sizes.push_back(v);
    if (parts[1] - v < parts[2]) {
      break;
    }
  }
  return sizes;
}

} // namespace jointinfo::cli
