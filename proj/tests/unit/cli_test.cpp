#include <gtest/gtest.h>

#include <sstream>

#include "commands.hpp"
#include "specgraph/bounds.hpp"
#include "specgraph/census.hpp"
#include "specgraph/indices.hpp"
#include "specgraph/multipartite.hpp"

using namespace specgraph;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, IndicesOfTriangle) {
  const CliRun r = run({"indices", "Bw"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("gap 3.000000"), std::string::npos);
  EXPECT_NE(r.out.find("ind 2.000000"), std::string::npos);
  EXPECT_NE(r.out.find("pow 4.000000"), std::string::npos);
}

TEST(Cli, SpectrumMatchesLibrary) {
  const CliRun r = run({"spectrum", "Ch"});
  std::string want;
  for (double v : eigen_sym(families::path(4))) want += format_fixed(v) + "\n";
  EXPECT_EQ(r.out, want);
}

TEST(Cli, VerifyPropTwoA) {
  const CliRun r = run({"verify", "--check", "prop2a", "--order", "6"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("PASS"), std::string::npos);
}

TEST(Cli, ApproxCountNine) {
  const CliRun r = run({"approx-count", "--order", "9"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "approx 261080.000000\nknown 261080\nrelative_error 0.000000\n");
}

TEST(Cli, MultipartiteModes) {
  const CliRun a = run({"multipartite", "--parts", "1,2,3", "--analytic"});
  EXPECT_EQ(a.code, 0);
  std::ostringstream want;
  want << "value,multiplicity,provenance\n";
  for (const auto& e : multipartite_spectrum(Partition({1, 2, 3})).entries())
    want << format_fixed(e.value) << ',' << e.multiplicity << ',' << provenance_name(e.provenance) << '\n';
  EXPECT_EQ(a.out, want.str());
  const CliRun b = run({"multipartite", "--parts", "3,3"});
  EXPECT_EQ(b.code, 0);
  EXPECT_NE(b.out.find("max_deviation"), std::string::npos);
  EXPECT_EQ(run({"multipartite", "--parts", "1,2", "--analytic", "--numeric"}).code, 2);
  EXPECT_EQ(run({"multipartite", "--parts", "4"}).code, 2);
}

TEST(Cli, PerturbedMatchesReport) {
  const CliRun r = run({"perturbed", "--family", "kmm-minus-e", "--m", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("gap " + format_fixed(kmm_minus_e_report(3).gap)), std::string::npos);
  EXPECT_EQ(run({"perturbed", "--family", "kmm", "--m", "3"}).code, 2);
}

TEST(Cli, ExtremalAndDensity) {
  const CliRun e = run({"extremal", "--order", "4", "--index", "gap", "--dir", "min"});
  EXPECT_EQ(e.code, 0);
  EXPECT_EQ(e.out.rfind("value 1.236068\nwitnesses 1\n", 0), 0u);
  const CliRun d = run({"density", "--delta", "0.1", "--gamma", "0.5"});
  EXPECT_EQ(d.code, 0);
  EXPECT_NE(d.out.find("m2 2\n"), std::string::npos);
  EXPECT_EQ(run({"density", "--delta", "0.5", "--gamma", "0.1"}).code, 2);
}

TEST(Cli, CensusWritesFiles) {
  const auto dir = std::filesystem::temp_directory_path() / "specgraph_cli_census";
  std::filesystem::remove_all(dir);
  const CliRun r = run({"census", "--order", "5", "--out", dir.string(), "--threads", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("count 21"), std::string::npos);
  EXPECT_TRUE(std::filesystem::exists(dir / "stats.csv"));
}

TEST(Cli, ByteStable) {
  const std::vector<std::string> args = {"extremal", "--order", "6", "--index", "ind", "--dir", "min"};
  EXPECT_EQ(run(args).out, run(args).out);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"indices", "B!"}).code, 2);
  EXPECT_EQ(run({"census", "--order", "8"}).code, 2);
  EXPECT_EQ(run({"verify", "--check", "prop9", "--order", "5"}).code, 2);
}
