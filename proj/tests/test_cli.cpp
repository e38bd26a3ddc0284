#include <gtest/gtest.h>

#include <filesystem>
#include <json.hpp>
#include <sstream>

#include "cli.hpp"
#include "test_support.hpp"

using dfl::testing::fixturePath;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = dfl::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

bool hasLine(const std::string& text, const std::string& line) {
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) {
    if (l == line) return true;
  }
  return false;
}

std::vector<std::string> columns(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string c; in >> c;) out.push_back(c);
  return out;
}

std::vector<std::string> rowFor(const std::string& table, const std::string& literal) {
  std::istringstream in(table);
  for (std::string l; std::getline(in, l);) {
    auto c = columns(l);
    if (!c.empty() && c[0] == literal) return c;
  }
  return {};
}

}  // namespace

TEST(Cli, DeriveExample1) {
  const Result r = run({"derive", fixturePath("example1.dfl"), "--ambiguity", "block", "--team-defeat",
                        "on", "--semantics", "kunen"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(hasLine(r.out, "~antimilitary d +")) << r.out;
  EXPECT_TRUE(hasLine(r.out, "pacifist d -"));
  const Result u = run({"derive", fixturePath("example1.dfl"), "--unicode"});
  EXPECT_TRUE(hasLine(u.out, "~antimilitary ∂ +")) << u.out;
}

TEST(Cli, DeriveLoopUnderWellFounded) {
  const Result r = run({"derive", fixturePath("loop.dfl"), "--semantics", "wfs", "--unicode"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(hasLine(r.out, "p ∂ −")) << r.out;
  const Result k = run({"derive", fixturePath("loop.dfl")});
  EXPECT_TRUE(hasLine(k.out, "p d ?"));
}

TEST(Cli, QueryFiltersRows) {
  const Result r = run({"derive", fixturePath("example2.dfl"), "--query", "~q"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "~q D -\n~q d -\n~q S +\n");
  EXPECT_EQ(run({"derive", fixturePath("example2.dfl"), "--query", "a :"}).code, 1);
}

TEST(Cli, InputErrorsExitOne) {
  const Result cycle = run({"derive", fixturePath("bad_cycle.dfl")});
  EXPECT_EQ(cycle.code, 1);
  EXPECT_NE(cycle.err.find("SuperiorityCycle"), std::string::npos);
  EXPECT_EQ(run({"derive", fixturePath("missing.dfl")}).code, 1);
  EXPECT_EQ(run({"derive", fixturePath("example1.dfl"), "--ambiguity", "maybe"}).code, 1);
  EXPECT_EQ(run({}).code, 1);

  const auto bad = std::filesystem::temp_directory_path() / "dfl_cli_syntax.dfl";
  std::ofstream(bad) << "r1: p => .\n";
  const Result syntax = run({"derive", bad.string()});
  EXPECT_EQ(syntax.code, 1);
  EXPECT_NE(syntax.err.find("1:10: SyntaxError"), std::string::npos) << syntax.err;
}

TEST(Cli, OutputIsByteIdentical) {
  const std::vector<std::string> args = {"compare", fixturePath("example1.dfl")};
  EXPECT_EQ(run(args).out, run(args).out);
  const std::vector<std::string> d = {"derive", fixturePath("example2.dfl"), "--format", "json"};
  EXPECT_EQ(run(d).out, run(d).out);
}

TEST(Cli, CompareExample2) {
  const Result r = run({"compare", fixturePath("example2.dfl")});
  ASSERT_EQ(r.code, 0);
  const auto header = columns(r.out.substr(0, r.out.find('\n')));
  const auto q = rowFor(r.out, "q");
  ASSERT_EQ(q.size(), header.size());
  auto cell = [&](const std::string& name) {
    return q[std::find(header.begin(), header.end(), name) - header.begin()];
  };
  EXPECT_EQ(cell("d(block,off,kunen)"), "+");
  EXPECT_EQ(cell("d(block,on,kunen)"), "-");
  EXPECT_EQ(header.size(), 11u);
}

TEST(Cli, CompareExample1) {
  const Result r = run({"compare", fixturePath("example1.dfl")});
  const auto header = columns(r.out.substr(0, r.out.find('\n')));
  const auto row = rowFor(r.out, "~antimilitary");
  auto cell = [&](const std::string& name) {
    return row[std::find(header.begin(), header.end(), name) - header.begin()];
  };
  EXPECT_EQ(cell("d(block,on,kunen)"), "+");
  EXPECT_EQ(cell("d(propagate,on,kunen)"), "-");
}

TEST(Cli, CompareFactsOnly) {
  const Result r = run({"compare", fixturePath("facts_only.dfl")});
  for (const std::string lit : {"bird", "~penguin"}) {
    const auto row = rowFor(r.out, lit);
    ASSERT_EQ(row.size(), 11u);
    for (std::size_t i = 1; i < row.size(); ++i) EXPECT_EQ(row[i], "+") << lit;
  }
}

TEST(Cli, DeriveJsonFollowsSchema) {
  const Result r = run({"derive", fixturePath("example1.dfl"), "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["config"]["ambiguity"], "block");
  EXPECT_EQ(j["config"]["teamDefeat"], "on");
  EXPECT_EQ(j["config"]["semantics"], "kunen");
  ASSERT_EQ(j["conclusions"].size(), 10u * 3u);
  bool found = false;
  for (const auto& row : j["conclusions"]) {
    ASSERT_EQ(row.size(), 3u);
    EXPECT_TRUE(row["tag"] == "delta" || row["tag"] == "partial" || row["tag"] == "support");
    EXPECT_TRUE(row["verdict"] == "positive" || row["verdict"] == "negative" || row["verdict"] == "undecided");
    found = found || (row["literal"] == "~antimilitary" && row["tag"] == "partial" && row["verdict"] == "positive");
  }
  EXPECT_TRUE(found);
}

TEST(Cli, VerifySneg) {
  const Result r = run({"verify-sneg", "--unicode"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "±Δ: match\n±∂: match\n");
  const Result j = run({"verify-sneg", "--format", "json"});
  EXPECT_EQ(nlohmann::json::parse(j.out)["entries"][1]["match"], true);
}

TEST(Cli, Proptest) {
  const Result r = run({"proptest", "--suite", "thm1diff", "--count", "500", "--seed", "7"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(r.out, "thm1diff: 500 checked, 0 violations\n");
  const Result c = run({"proptest", "--suite", "coherence", "--count", "200"});
  EXPECT_EQ(c.code, 0);
  const Result j = run({"proptest", "--suite", "semanticsOracle", "--count", "20", "--format", "json"});
  EXPECT_EQ(nlohmann::json::parse(j.out)["suites"][0]["violations"], 0);
  EXPECT_EQ(run({"proptest", "--suite", "nope"}).code, 1);
}

TEST(Cli, ExportLp) {
  const Result r = run({"export-lp", fixturePath("loop.dfl")});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("defeasibly(p) :- defeasibly(p), not definitely(~p), not overruled(r, p)."),
            std::string::npos);
  const Result e = run({"export-lp", fixturePath("loop.dfl"), "--explicit"});
  EXPECT_NE(e.out.find("defeasible(r, p, [p])."), std::string::npos) << e.out;
}
