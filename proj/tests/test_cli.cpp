#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "jointinfo/cli.hpp"

namespace jointinfo::cli {
namespace {

const std::string kData = JOINTINFO_TEST_DATA_DIR;

std::string message_of(auto &&fn) {
  try {
    fn();
  } catch (const std::exception &e) {
    return e.what();
  }
  return {};
}

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

Invocation invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "jointinfo");
  std::vector<const char *> argv;
  for (const auto &a : args) {
    argv.push_back(a.c_str());
  }
  std::ostringstream out;
  std::ostringstream err;
  const int code = main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

TEST(PairsCsv, LabelsInFirstAppearanceOrder) {
  std::istringstream in("a,p\na,q\nb,p\n");
  const PairsData d = parse_pairs_csv(in);
  EXPECT_EQ(d.alphabets.x_labels(), (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(d.alphabets.y_labels(), (std::vector<std::string>{"p", "q"}));
  EXPECT_EQ(d.sample, (std::vector<std::size_t>{1, 2, 3}));
}

TEST(PairsCsv, HeaderAndBlankLines) {
  std::istringstream in("x,y\n\nu,v\r\n\nw,v\n");
  const PairsData d = parse_pairs_csv(in, true);
  EXPECT_EQ(d.alphabets.x_labels(), (std::vector<std::string>{"u", "w"}));
  EXPECT_EQ(d.sample, (std::vector<std::size_t>{1, 2}));

  std::ifstream file(kData + "/table_pairs_header.csv");
  const PairsData t = parse_pairs_csv(file, true);
  EXPECT_EQ(t.sample.size(), 10u);
}

TEST(PairsCsv, Errors) {
  std::ifstream ragged(kData + "/ragged_pairs.csv");
  EXPECT_NE(message_of([&] { parse_pairs_csv(ragged); }).find("line 7: expected 2 fields"),
            std::string::npos);
  std::istringstream empty("x,y\n\n");
  EXPECT_NE(message_of([&] { parse_pairs_csv(empty, true); }).find("empty input"),
            std::string::npos);
  std::istringstream blank_label("a,\n");
  EXPECT_THROW(parse_pairs_csv(blank_label), InputError);
}

TEST(CountsCsv, ParsesAndFillsMissingCells) {
  std::istringstream in("a,p,5\nb,q,7\n");
  const CountsData d = parse_counts_csv(in);
  const std::vector<std::uint64_t> counts(d.emp.counts().begin(), d.emp.counts().end());
  EXPECT_EQ(counts, (std::vector<std::uint64_t>{5, 0, 0, 7}));
  EXPECT_EQ(d.emp.n(), 12u);
}

TEST(CountsCsv, Errors) {
  std::istringstream dup("a,p,1\na,p,2\n");
  EXPECT_NE(message_of([&] { parse_counts_csv(dup); }).find("line 2: duplicate cell (a, p)"),
            std::string::npos);
  std::istringstream neg("a,p,-1\n");
  EXPECT_NE(message_of([&] { parse_counts_csv(neg); }).find("not a nonnegative integer"),
            std::string::npos);
  std::istringstream frac("a,p,1.5\n");
  EXPECT_THROW(parse_counts_csv(frac), InputError);
  std::istringstream zeros("a,p,0\nb,q,0\n");
  EXPECT_NE(message_of([&] { parse_counts_csv(zeros); }).find("all counts are zero"),
            std::string::npos);
}

TEST(CountsCsv, SerializeRoundTrip) {
  std::mt19937_64 gen(17);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t r = 1 + gen() % 5;
    const std::size_t s = 1 + gen() % 5;
    std::vector<std::string> xs;
    std::vector<std::string> ys;
    for (std::size_t i = 0; i < r; ++i) {
      xs.push_back("x" + std::to_string(i));
    }
    for (std::size_t j = 0; j < s; ++j) {
      ys.push_back("y" + std::to_string(j));
    }
    std::vector<std::uint64_t> counts(r * s);
    for (auto &c : counts) {
      c = gen() % 4;
    }
    counts[gen() % counts.size()] += 1;
    const LabeledAlphabets labels(xs, ys);
    const EmpiricalPmf emp(labels.shape(), counts);
    std::istringstream in(serialize_counts_csv(emp, labels));
    const CountsData back = parse_counts_csv(in);
    ASSERT_EQ(back.alphabets, labels);
    ASSERT_EQ(back.emp, emp);
  }
}

TEST(Sizes, Parse) {
  const auto sizes = parse_sizes("100:30000:100");
  EXPECT_EQ(sizes.size(), 300u);
  EXPECT_EQ(sizes.front(), 100u);
  EXPECT_EQ(sizes.back(), 30000u);
  EXPECT_EQ(parse_sizes("50"), (std::vector<std::uint64_t>{50}));
  EXPECT_THROW(parse_sizes("0:10:1"), InputError);
  EXPECT_THROW(parse_sizes("10:5:1"), InputError);
  EXPECT_THROW(parse_sizes("1:5:0"), InputError);
  EXPECT_THROW(parse_sizes("a:b:c"), InputError);
}

TEST(MainEntry, UsageErrors) {
  const Invocation bad_cmd = invoke({"frobnicate"});
  EXPECT_EQ(bad_cmd.code, kExitUsage);
  EXPECT_FALSE(bad_cmd.err.empty());
  EXPECT_EQ(invoke({"estimate", "--bogus"}).code, kExitUsage);
  EXPECT_EQ(invoke({}).code, kExitUsage);
}

TEST(MainEntry, InputErrors) {
  const Invocation ragged = invoke({"estimate", "--input", kData + "/ragged_pairs.csv"});
  EXPECT_EQ(ragged.code, kExitInputError);
  EXPECT_NE(ragged.err.find("line 7"), std::string::npos);
  EXPECT_EQ(invoke({"estimate", "--input", kData + "/does_not_exist.csv"}).code, kExitInputError);
  EXPECT_EQ(invoke({"estimate"}).code, kExitInputError);
  EXPECT_EQ(invoke({"power", "--alpha", "1.5"}).code, kExitInputError);
}

TEST(MainEntry, TestOnTableCounts) {
  const Invocation r = invoke(
      {"test", "--input", kData + "/table_counts.csv", "--format", "counts", "--alpha", "0.05"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("\"reject\": false"), std::string::npos);
  EXPECT_NE(r.out.find("\"schema_version\": 1"), std::string::npos);
  EXPECT_NE(r.out.find("\"config\""), std::string::npos);
  EXPECT_NE(r.out.find("\"df\": 1"), std::string::npos);

  const Invocation big = invoke(
      {"test", "--input", kData + "/table_counts_1e5.csv", "--format", "counts"});
  ASSERT_EQ(big.code, kExitOk) << big.err;
  EXPECT_NE(big.out.find("\"reject\": true"), std::string::npos);
}

TEST(MainEntry, PairsAndCountsAgree) {
  const Invocation pairs =
      invoke({"estimate", "--input", kData + "/table_pairs_header.csv", "--header"});
  const Invocation counts =
      invoke({"estimate", "--input", kData + "/table_counts.csv", "--format", "counts"});
  ASSERT_EQ(pairs.code, kExitOk) << pairs.err;
  ASSERT_EQ(counts.code, kExitOk) << counts.err;
  const auto results = [](const std::string &s) { return s.substr(s.find("\"results\"")); };
  EXPECT_EQ(results(pairs.out), results(counts.out));
}

TEST(MainEntry, ReportsAreReproducible) {
  const std::vector<std::string> trace = {"trace", "--seed", "3", "--sizes", "100:2000:100",
                                          "--measure", "mi"};
  const Invocation a = invoke(trace);
  ASSERT_EQ(a.code, kExitOk) << a.err;
  EXPECT_EQ(a.out, invoke(trace).out);
  auto threaded = trace;
  threaded.insert(threaded.end(), {"--threads", "3"});
  EXPECT_EQ(a.out, invoke(threaded).out);

  const std::vector<std::string> normality = {"normality", "--seed", "3", "--n", "1000",
                                              "--replicates", "200"};
  const Invocation b = invoke(normality);
  ASSERT_EQ(b.code, kExitOk) << b.err;
  EXPECT_EQ(b.out, invoke(normality).out);
  EXPECT_NE(b.out.find("\"ks_distance\""), std::string::npos);
}

TEST(MainEntry, CsvOutput) {
  const Invocation t = invoke({"trace", "--sizes", "100:300:100", "--output-format", "csv"});
  ASSERT_EQ(t.code, kExitOk) << t.err;
  EXPECT_EQ(t.out.rfind("# schema_version=1\n# config=", 0), 0u);
  EXPECT_NE(t.out.find("\nsize,estimate,abs_error,a_zn,ratio\n"), std::string::npos);
  EXPECT_EQ(invoke({"estimate", "--input", kData + "/table_counts.csv", "--format", "counts",
                    "--output-format", "csv"})
                .code,
            kExitInputError);
}

TEST(MainEntry, WritesOutputFile) {
  const auto path = std::filesystem::temp_directory_path() / "jointinfo_cli_output.json";
  std::filesystem::remove(path);
  const Invocation r = invoke({"power", "--n", "500", "--replicates", "20", "--output",
                               path.string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  const std::string body((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  EXPECT_NE(body.find("\"rejection_rate\""), std::string::npos);
  std::filesystem::remove(path);
}

} // namespace
} // namespace jointinfo::cli
