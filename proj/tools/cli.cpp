#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <future>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "dfl/conclusions.hpp"
#include "dfl/parser.hpp"
#include "dfl/properties.hpp"
#include "dfl/sneg.hpp"

namespace dfl::cli {

namespace {

using nlohmann::ordered_json;

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string file;
  std::string ambiguity = "block";
  std::string teamDefeat = "on";
  std::string semantics = "kunen";
  std::string format = "text";
  std::string query;
  bool unicode = false;
  bool explicitDatabase = false;

  std::string suite = "all";
  std::size_t count = 100;
  std::uint64_t seed = 0;
  std::size_t maxAtoms = 8;
  std::size_t maxRules = 12;
  bool firstOrder = false;
  std::string outDir = ".";
};

VariantConfig configOf(const Options& o) {
  VariantConfig cfg;
  cfg.ambiguity = o.ambiguity == "propagate" ? Ambiguity::Propagating : Ambiguity::Blocking;
  cfg.teamDefeat = o.teamDefeat == "off" ? TeamDefeat::Off : TeamDefeat::On;
  cfg.failure = o.semantics == "wfs" ? Failure::WellFounded : Failure::Kunen;
  return cfg;
}

std::string_view tagName(Tag t) {
  switch (t) {
    case Tag::Delta: return "delta";
    case Tag::Partial: return "partial";
    case Tag::Support: return "support";
  }
  return "?";
}

std::string_view verdictName(Verdict v) {
  switch (v) {
    case Verdict::ProvedPositive: return "positive";
    case Verdict::ProvedNegative: return "negative";
    case Verdict::Undecided: return "undecided";
  }
  return "?";
}

ordered_json configJson(const VariantConfig& cfg) {
  return {{"ambiguity", toString(cfg.ambiguity)},
          {"teamDefeat", toString(cfg.teamDefeat)},
          {"semantics", toString(cfg.failure)}};
}

Theory loadTheory(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  Theory t;
  try {
    t = parseTheoryText(buf.str());
  } catch (const ParseError& e) {
    throw InputError(path + ":" + e.what());
  }
  try {
    validateTheory(t);
  } catch (const TheoryError& e) {
    throw InputError(path + ": " + e.what());
  }
  return t;
}

std::optional<Literal> queryLiteral(const std::string& text) {
  if (text.empty()) return std::nullopt;
  Theory t;
  try {
    t = parseTheoryText(text + ".");
  } catch (const ParseError& e) {
    throw InputError("--query: " + e.detail());
  }
  if (t.facts.size() != 1 || !t.rules.empty() || !t.superiority.empty()) {
    throw InputError("--query expects a single ground literal");
  }
  return t.facts.front();
}

int cmdDerive(const Options& o, std::ostream& out) {
  const Theory theory = loadTheory(o.file);
  const VariantConfig cfg = configOf(o);
  const auto query = queryLiteral(o.query);
  const ConclusionSet cs = conclude(theory, cfg);

  if (o.format == "json") {
    ordered_json rows = ordered_json::array();
    for (const auto& [key, verdict] : cs.entries()) {
      if (query && key.first != *query) continue;
      rows.push_back({{"literal", toString(key.first)},
                      {"tag", tagName(key.second)},
                      {"verdict", verdictName(verdict)}});
    }
    out << ordered_json{{"config", configJson(cfg)}, {"conclusions", rows}}.dump(2) << "\n";
    return kExitOk;
  }
  for (const auto& [key, verdict] : cs.entries()) {
    if (query && key.first != *query) continue;
    out << toString(key.first) << ' ' << tagSymbol(key.second, o.unicode) << ' '
        << verdictSymbol(verdict, o.unicode) << "\n";
  }
  return kExitOk;
}

int cmdCompare(const Options& o, std::ostream& out) {
  const Theory theory = loadTheory(o.file);
  const auto configs = allVariants();
  std::vector<std::future<ConclusionSet>> jobs;
  for (const VariantConfig& cfg : configs) {
    jobs.push_back(std::async(std::launch::async, [&theory, cfg] { return conclude(theory, cfg); }));
  }
  std::vector<ConclusionSet> results;
  for (auto& j : jobs) results.push_back(j.get());
  const ConclusionSet& dl = results.front();

  if (o.format == "json") {
    ordered_json cfgs = ordered_json::array();
    for (const auto& cfg : configs) cfgs.push_back(toString(cfg));
    ordered_json rows = ordered_json::array();
    for (const Literal& l : dl.literals()) {
      ordered_json partial = ordered_json::object();
      for (std::size_t i = 0; i < configs.size(); ++i) {
        partial[toString(configs[i])] = verdictName(results[i].verdict(l, Tag::Partial));
      }
      rows.push_back({{"literal", toString(l)},
                      {"delta", verdictName(dl.verdict(l, Tag::Delta))},
                      {"support", verdictName(dl.verdict(l, Tag::Support))},
                      {"partial", partial}});
    }
    out << ordered_json{{"configs", cfgs}, {"rows", rows}}.dump(2) << "\n";
    return kExitOk;
  }

  std::vector<std::string> header = {"literal", std::string(tagSymbol(Tag::Delta, o.unicode))};
  for (const auto& cfg : configs) header.push_back(std::string(tagSymbol(Tag::Partial, o.unicode)) + "(" + toString(cfg) + ")");
  header.push_back(std::string(tagSymbol(Tag::Support, o.unicode)));

  std::vector<std::vector<std::string>> table = {header};
  for (const Literal& l : dl.literals()) {
    std::vector<std::string> row = {toString(l), std::string(verdictSymbol(dl.verdict(l, Tag::Delta), o.unicode))};
    for (const auto& r : results) row.emplace_back(verdictSymbol(r.verdict(l, Tag::Partial), o.unicode));
    row.emplace_back(verdictSymbol(dl.verdict(l, Tag::Support), o.unicode));
    table.push_back(std::move(row));
  }
  // Widths in code points so Unicode symbols align.
  auto width = [](const std::string& s) {
    return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char c) {
      return (static_cast<unsigned char>(c) & 0xC0) != 0x80;
    }));
  };
  std::vector<std::size_t> widths(header.size(), 0);
  for (const auto& row : table) {
    for (std::size_t i = 0; i < row.size(); ++i) widths[i] = std::max(widths[i], width(row[i]));
  }
  for (const auto& row : table) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      line += row[i];
      if (i + 1 < row.size()) line += std::string(widths[i] - width(row[i]) + 2, ' ');
    }
    out << line << "\n";
  }
  return kExitOk;
}

std::string writeCounterexample(const Options& o, Suite suite, const Violation& v) {
  namespace fs = std::filesystem;
  fs::create_directories(o.outDir);
  const std::string ext = suite == Suite::SemanticsOracle ? ".lp" : ".dfl";
  const fs::path path =
      fs::path(o.outDir) / ("counterexample-" + std::string(toString(suite)) + "-" + std::to_string(v.index) + ext);
  std::ofstream(path) << v.counterexample;
  return path.string();
}

int cmdProptest(const Options& o, std::ostream& out) {
  std::vector<Suite> suites;
  if (o.suite == "all") {
    suites.assign(kAllSuites.begin(), kAllSuites.end());
  } else if (auto s = parseSuite(o.suite)) {
    suites.push_back(*s);
  } else {
    throw InputError("unknown suite '" + o.suite + "'");
  }
  GeneratorParams p;
  p.seed = o.seed;
  p.maxAtoms = o.maxAtoms;
  p.maxRules = o.maxRules;
  p.firstOrder = o.firstOrder;

  bool violated = false;
  ordered_json summary = ordered_json::array();
  for (Suite s : suites) {
    const SuiteReport report = runSuite(s, p, o.count);
    ordered_json entry = {{"suite", toString(s)},
                          {"checked", report.checked},
                          {"violations", report.violations.size()}};
    ordered_json files = ordered_json::array();
    std::vector<std::string> paths;
    if (!report.ok()) {
      violated = true;
      for (const Violation& v : report.violations) paths.push_back(writeCounterexample(o, s, v));
    }
    if (o.format == "json") {
      for (std::size_t i = 0; i < paths.size(); ++i) {
        files.push_back({{"index", report.violations[i].index},
                         {"seed", report.violations[i].seed},
                         {"detail", report.violations[i].detail},
                         {"counterexample", paths[i]}});
      }
      entry["failures"] = files;
      summary.push_back(entry);
    } else {
      out << report.toText();
      for (const auto& path : paths) out << "  counterexample: " << path << "\n";
    }
  }
  if (o.format == "json") {
    out << ordered_json{{"seed", o.seed}, {"count", o.count}, {"suites", summary}}.dump(2) << "\n";
  }
  return violated ? kExitViolation : kExitOk;
}

int cmdVerifySneg(const Options& o, std::ostream& out) {
  const SnegReport report = verifyStrongNegation();
  if (o.format == "json") {
    ordered_json entries = ordered_json::array();
    for (const auto& e : report.entries) {
      ordered_json j = {{"tag", tagName(e.tag)}, {"match", !e.mismatch}};
      if (e.mismatch) {
        j["clause"] = e.mismatch->clause;
        j["expected"] = e.mismatch->expected;
        j["actual"] = e.mismatch->actual;
      }
      entries.push_back(j);
    }
    out << ordered_json{{"entries", entries}}.dump(2) << "\n";
  } else {
    out << report.toText(o.unicode);
  }
  return report.allMatch() ? kExitOk : kExitViolation;
}

int cmdExportLp(const Options& o, std::ostream& out) {
  const Theory theory = loadTheory(o.file);
  MetaProgramOptions mo;
  mo.staticResolution = !o.explicitDatabase;
  const Evaluation ev = evaluateTheory(theory, configOf(o), mo);
  out << "% " << toString(configOf(o)) << ": " << ev.program.atomCount() << " atoms, "
      << ev.program.clauseCount() << " clauses\n";
  out << ev.program.toText();
  return kExitOk;
}

void addConfigFlags(CLI::App* cmd, Options& o) {
  cmd->add_option("--ambiguity", o.ambiguity, "Ambiguity handling")
      ->check(CLI::IsMember({"block", "propagate"}));
  cmd->add_option("--team-defeat", o.teamDefeat, "Team defeat")->check(CLI::IsMember({"on", "off"}));
  cmd->add_option("--semantics", o.semantics, "Failure semantics")
      ->check(CLI::IsMember({"kunen", "wfs"}));
}

void addFormatFlags(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  cmd->add_flag("--unicode", o.unicode, "Render tags as Unicode symbols");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Defeasible logic inference and cross-checking", "dfl"};
  app.require_subcommand(1);

  auto* derive = app.add_subcommand("derive", "Print every (literal, tag) verdict of a theory");
  derive->add_option("file", o.file, "Theory file")->required();
  addConfigFlags(derive, o);
  addFormatFlags(derive, o);
  derive->add_option("--query", o.query, "Only rows for this literal");

  auto* compare = app.add_subcommand("compare", "Defeasible verdicts under all eight configurations");
  compare->add_option("file", o.file, "Theory file")->required();
  addFormatFlags(compare, o);

  auto* proptest = app.add_subcommand("proptest", "Run property suites on random instances");
  proptest->add_option("--suite", o.suite, "Suite name or 'all'");
  proptest->add_option("--count", o.count, "Instances per suite");
  proptest->add_option("--seed", o.seed, "Base seed");
  proptest->add_option("--max-atoms", o.maxAtoms, "Atoms per theory");
  proptest->add_option("--max-rules", o.maxRules, "Rules per theory");
  proptest->add_flag("--first-order", o.firstOrder, "Unary predicates with rule variables");
  proptest->add_option("--out", o.outDir, "Directory for counterexample files");
  proptest->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));

  auto* sneg = app.add_subcommand("verify-sneg", "Check the proof conditions against strong negation");
  addFormatFlags(sneg, o);

  auto* exportLp = app.add_subcommand("export-lp", "Print the instantiated meta-program");
  exportLp->add_option("file", o.file, "Theory file")->required();
  addConfigFlags(exportLp, o);
  exportLp->add_flag("--explicit", o.explicitDatabase, "Keep database atoms as program clauses");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (derive->parsed()) return cmdDerive(o, out);
    if (compare->parsed()) return cmdCompare(o, out);
    if (proptest->parsed()) return cmdProptest(o, out);
    if (sneg->parsed()) return cmdVerifySneg(o, out);
    if (exportLp->parsed()) return cmdExportLp(o, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const TheoryError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace dfl::cli
