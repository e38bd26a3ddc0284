#include "dfl/properties.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "dfl/conclusions.hpp"
#include "dfl/direct_engine.hpp"
#include "dfl/grounder.hpp"
#include "dfl/parser.hpp"

namespace dfl {

namespace {

class Random {
 public:
  explicit Random(std::uint64_t seed) : rng_(seed) {}

  std::size_t below(std::size_t n) {
    if (n <= 1) return 0;
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_);
  }
  bool chance(double p) { return std::uniform_real_distribution<double>(0.0, 1.0)(rng_) < p; }
  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t seedFor(std::uint64_t base, std::size_t index) {
  return splitmix(splitmix(base) + index);
}

Theory randomTheory(const GeneratorParams& p) {
  Random rnd(p.seed);
  const std::size_t atoms = 1 + rnd.below(std::max<std::size_t>(p.maxAtoms, 1));
  const std::vector<std::string> constants = {"c0", "c1"};

  auto predicate = [&] { return "p" + std::to_string(rnd.below(atoms)); };
  auto polarity = [&] { return rnd.chance(0.5) ? Polarity::Negative : Polarity::Positive; };
  auto groundLiteral = [&] {
    std::vector<Term> args;
    if (p.firstOrder) args.push_back(Term{constants[rnd.below(constants.size())]});
    std::string pred = predicate();
    return Literal(std::move(pred), std::move(args), polarity());
  };
  auto ruleLiteral = [&] {
    std::vector<Term> args;
    if (p.firstOrder) {
      args.push_back(rnd.chance(0.6) ? Term{"X"} : Term{constants[rnd.below(constants.size())]});
    }
    std::string pred = predicate();
    return Literal(std::move(pred), std::move(args), polarity());
  };

  Theory t;
  for (std::size_t i = 0; i < atoms; ++i) {
    if (rnd.chance(p.factRatio)) t.addFact(groundLiteral());
  }

  const std::size_t rules = rnd.below(p.maxRules + 1);
  for (std::size_t i = 0; i < rules; ++i) {
    Rule r;
    r.label = "r" + std::to_string(i + 1);
    const double u = std::uniform_real_distribution<double>(0.0, 1.0)(rnd.engine());
    r.kind = u < p.strictRatio                     ? RuleKind::Strict
             : u < p.strictRatio + p.defeaterRatio ? RuleKind::Defeater
                                                   : RuleKind::Defeasible;
    const std::size_t len = rnd.below(p.maxBodyLen + 1);
    for (std::size_t k = 0; k < len; ++k) r.antecedent.push_back(ruleLiteral());
    r.consequent = ruleLiteral();
    t.addRule(std::move(r));
  }

  std::vector<std::size_t> rank(t.rules.size());
  std::iota(rank.begin(), rank.end(), 0);
  std::shuffle(rank.begin(), rank.end(), rnd.engine());
  for (std::size_t i = 0; i < t.rules.size(); ++i) {
    for (std::size_t j = i + 1; j < t.rules.size(); ++j) {
      const Literal& a = t.rules[i].consequent;
      const Literal& b = t.rules[j].consequent;
      if (a.predicate != b.predicate || a.polarity == b.polarity) continue;
      if (!rnd.chance(p.supRatio)) continue;
      if (rank[i] > rank[j]) {
        t.addSuperiority(t.rules[i].label, t.rules[j].label);
      } else {
        t.addSuperiority(t.rules[j].label, t.rules[i].label);
      }
    }
  }
  return t;
}

NormalProgram randomProgram(std::uint64_t seed, std::size_t maxAtoms) {
  Random rnd(seed);
  NormalProgram prog;
  prog.atomCount = 1 + rnd.below(std::max<std::size_t>(maxAtoms, 1));
  const std::size_t clauses = rnd.below(2 * prog.atomCount + 1);
  for (std::size_t i = 0; i < clauses; ++i) {
    NormalClause c;
    c.head = static_cast<AtomId>(rnd.below(prog.atomCount));
    const std::size_t pos = rnd.below(3);
    const std::size_t neg = rnd.below(3);
    for (std::size_t k = 0; k < pos; ++k) c.positive.push_back(static_cast<AtomId>(rnd.below(prog.atomCount)));
    for (std::size_t k = 0; k < neg; ++k) c.negative.push_back(static_cast<AtomId>(rnd.below(prog.atomCount)));
    prog.clauses.push_back(std::move(c));
  }
  return prog;
}

// ---------------------------------------------------------------------------

namespace {

void requireOracleSize(const NormalProgram& program) {
  if (program.atomCount > kOracleAtomLimit) {
    throw std::length_error("brute-force oracle limited to " + std::to_string(kOracleAtomLimit) +
                            " atoms, got " + std::to_string(program.atomCount));
  }
}

std::vector<std::vector<std::size_t>> clausesByHead(const NormalProgram& program) {
  std::vector<std::vector<std::size_t>> out(program.atomCount);
  for (std::size_t i = 0; i < program.clauses.size(); ++i) out[program.clauses[i].head].push_back(i);
  return out;
}

// Truth values as 0 = false, 1 = undefined, 2 = true; Kleene conjunction is
// min, disjunction max, negation 2 - v.
int bodyValue(const NormalClause& c, const std::vector<int>& v) {
  int value = 2;
  for (AtomId a : c.positive) value = std::min(value, v[a]);
  for (AtomId a : c.negative) value = std::min(value, 2 - v[a]);
  return value;
}

Truth truthOf(int v) { return v == 2 ? Truth::True : v == 0 ? Truth::False : Truth::Undefined; }

}  // namespace

ThreeValuedModel bruteForceKunen(const NormalProgram& program) {
  requireOracleSize(program);
  const std::size_t n = program.atomCount;
  const auto byHead = clausesByHead(program);
  std::vector<int> v(n, 0);
  std::vector<bool> alwaysTrue(n, true), alwaysFalse(n, true);
  bool anyModel = false;

  auto satisfiesCompletion = [&] {
    for (std::size_t a = 0; a < n; ++a) {
      int rhs = 0;
      for (std::size_t ci : byHead[a]) rhs = std::max(rhs, bodyValue(program.clauses[ci], v));
      if (rhs != v[a]) return false;
    }
    return true;
  };

  while (true) {
    if (satisfiesCompletion()) {
      anyModel = true;
      for (std::size_t a = 0; a < n; ++a) {
        if (v[a] != 2) alwaysTrue[a] = false;
        if (v[a] != 0) alwaysFalse[a] = false;
      }
    }
    std::size_t pos = 0;
    while (pos < n && v[pos] == 2) v[pos++] = 0;
    if (pos == n) break;
    ++v[pos];
  }
  if (!anyModel) throw std::logic_error("completion without a three-valued model");

  ThreeValuedModel out(n, Truth::Undefined);
  for (std::size_t a = 0; a < n; ++a) {
    if (alwaysTrue[a]) out.set(static_cast<AtomId>(a), Truth::True);
    if (alwaysFalse[a]) out.set(static_cast<AtomId>(a), Truth::False);
  }
  return out;
}

ThreeValuedModel bruteForceWfs(const NormalProgram& program) {
  requireOracleSize(program);
  const std::size_t n = program.atomCount;
  const auto byHead = clausesByHead(program);
  std::vector<int> v(n, 1);

  auto unfounded = [&](std::uint32_t set) {
    for (std::size_t a = 0; a < n; ++a) {
      if (!(set >> a & 1U)) continue;
      for (std::size_t ci : byHead[a]) {
        const NormalClause& c = program.clauses[ci];
        bool blocked = false;
        for (AtomId b : c.positive) blocked = blocked || v[b] == 0 || (set >> b & 1U);
        for (AtomId b : c.negative) blocked = blocked || v[b] == 2;
        if (!blocked) return false;
      }
    }
    return true;
  };

  while (true) {
    std::vector<int> next(n, 1);
    std::uint32_t greatest = 0;
    for (std::uint32_t set = 1; set < (1U << n); ++set) {
      if ((set | greatest) != greatest && unfounded(set)) greatest |= set;
    }
    for (std::size_t a = 0; a < n; ++a) {
      if (greatest >> a & 1U) next[a] = 0;
    }
    for (const NormalClause& c : program.clauses) {
      if (bodyValue(c, v) == 2) {
        if (next[c.head] == 0) throw std::logic_error("atom both derived and unfounded");
        next[c.head] = 2;
      }
    }
    if (next == v) break;
    v = std::move(next);
  }

  ThreeValuedModel out(n);
  for (std::size_t a = 0; a < n; ++a) out.set(static_cast<AtomId>(a), truthOf(v[a]));
  return out;
}

// ---------------------------------------------------------------------------

std::string_view toString(Suite s) {
  switch (s) {
    case Suite::Coherence: return "coherence";
    case Suite::Consistency: return "consistency";
    case Suite::Chain: return "chain";
    case Suite::Duality: return "duality";
    case Suite::Thm1Diff: return "thm1diff";
    case Suite::SemanticsOracle: return "semanticsOracle";
  }
  return "?";
}

std::optional<Suite> parseSuite(std::string_view name) {
  for (Suite s : kAllSuites) {
    if (toString(s) == name) return s;
  }
  return std::nullopt;
}

std::string_view chainLevelName(std::size_t level) {
  static constexpr std::string_view names[] = {
      "D", "d(propagate,off)", "d(propagate,on)", "d(block,on)", "S(block,on)"};
  return level < 5 ? names[level] : "?";
}

ChainSets chainSets(const Theory& theory) {
  const VariantConfig propOff{Ambiguity::Propagating, TeamDefeat::Off, Failure::Kunen};
  const VariantConfig propOn{Ambiguity::Propagating, TeamDefeat::On, Failure::Kunen};
  const ConclusionSet dl = conclude(theory, kDefaultLogic);
  const ConclusionSet po = conclude(theory, propOff);
  const ConclusionSet pn = conclude(theory, propOn);
  ChainSets out;
  out.positive = {dl.positive(Tag::Delta), po.positive(Tag::Partial), pn.positive(Tag::Partial),
                  dl.positive(Tag::Partial), dl.positive(Tag::Support)};
  out.negative = {dl.negative(Tag::Delta), po.negative(Tag::Partial), pn.negative(Tag::Partial),
                  dl.negative(Tag::Partial), dl.negative(Tag::Support)};
  return out;
}

bool isStrictAt(const ChainSets& sets, std::size_t inclusion) {
  const auto& sub = sets.positive[inclusion];
  const auto& super = sets.positive[inclusion + 1];
  return sub.size() < super.size() && std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

namespace {

std::optional<Literal> firstOutside(const std::set<Literal>& sub, const std::set<Literal>& super) {
  for (const Literal& l : sub) {
    if (!super.count(l)) return l;
  }
  return std::nullopt;
}

std::optional<std::string> checkCoherence(const Theory& theory) {
  for (const VariantConfig& cfg : allVariants()) {
    const ConclusionSet cs = conclude(theory, cfg);
    for (Tag tag : kAllTags) {
      const auto pos = cs.positive(tag);
      for (const Literal& l : cs.negative(tag)) {
        if (pos.count(l)) {
          return "+" + std::string(tagSymbol(tag)) + " and -" + std::string(tagSymbol(tag)) + " " +
                 toString(l) + " under " + toString(cfg);
        }
      }
    }
  }
  const auto derived = deriveAll(ground(theory));
  for (const TaggedLiteral& tl : derived) {
    if (tl.sign != Sign::Plus) continue;
    TaggedLiteral opposite = tl;
    opposite.sign = Sign::Minus;
    if (derived.count(opposite)) return "direct engine derives " + toString(tl) + " and " + toString(opposite);
  }
  return std::nullopt;
}

std::optional<std::string> checkConsistency(const Theory& theory) {
  for (const VariantConfig& cfg : kunenVariants()) {
    const ConclusionSet cs = conclude(theory, cfg);
    for (const Literal& l : cs.positive(Tag::Partial)) {
      const Literal c = complement(l);
      if (l.negative() || !cs.provedPositive(c, Tag::Partial)) continue;
      if (!cs.provedPositive(l, Tag::Delta) || !cs.provedPositive(c, Tag::Delta)) {
        return "+d " + toString(l) + " and +d " + toString(c) + " without +D of both under " +
               toString(cfg);
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> checkChain(const Theory& theory, bool negative) {
  const ChainSets sets = chainSets(theory);
  for (std::size_t i = 0; i < kChainInclusions; ++i) {
    if (!negative) {
      if (auto l = firstOutside(sets.positive[i], sets.positive[i + 1])) {
        return "+" + std::string(chainLevelName(i)) + " " + toString(*l) + " but not +" +
               std::string(chainLevelName(i + 1));
      }
    } else if (auto l = firstOutside(sets.negative[i + 1], sets.negative[i])) {
      return "-" + std::string(chainLevelName(i + 1)) + " " + toString(*l) + " but not -" +
             std::string(chainLevelName(i));
    }
  }
  return std::nullopt;
}

std::optional<std::string> checkThm1(const Theory& theory) {
  const Theory g = ground(theory);
  const ConclusionSet direct = toConclusionSet(deriveAll(g), literalDomain(g));
  const ConclusionSet meta = conclude(theory, kDefaultLogic);
  for (const Literal& l : literalDomain(g)) {
    for (Tag tag : {Tag::Delta, Tag::Partial}) {
      const Verdict a = direct.verdict(l, tag);
      const Verdict b = meta.verdict(l, tag);
      if (a != b) {
        return toString(l) + " " + std::string(tagSymbol(tag)) + ": direct " +
               std::string(verdictSymbol(a)) + ", meta-program " + std::string(verdictSymbol(b));
      }
    }
  }
  return std::nullopt;
}

std::vector<Theory> theoryReductions(const Theory& t) {
  std::vector<Theory> out;
  for (std::size_t i = 0; i < t.rules.size(); ++i) {
    Theory r = t;
    const std::string label = r.rules[i].label;
    r.rules.erase(r.rules.begin() + static_cast<std::ptrdiff_t>(i));
    std::erase_if(r.superiority,
                  [&](const Superiority& s) { return s.superior == label || s.inferior == label; });
    out.push_back(std::move(r));
  }
  for (std::size_t i = 0; i < t.facts.size(); ++i) {
    Theory r = t;
    r.facts.erase(r.facts.begin() + static_cast<std::ptrdiff_t>(i));
    out.push_back(std::move(r));
  }
  for (std::size_t i = 0; i < t.superiority.size(); ++i) {
    Theory r = t;
    r.superiority.erase(r.superiority.begin() + static_cast<std::ptrdiff_t>(i));
    out.push_back(std::move(r));
  }
  for (std::size_t i = 0; i < t.rules.size(); ++i) {
    for (std::size_t k = 0; k < t.rules[i].antecedent.size(); ++k) {
      Theory r = t;
      auto& body = r.rules[i].antecedent;
      body.erase(body.begin() + static_cast<std::ptrdiff_t>(k));
      out.push_back(std::move(r));
    }
  }
  return out;
}

Theory shrinkWhile(Theory t, const std::function<bool(const Theory&)>& keeps) {
  bool progress = true;
  while (progress) {
    progress = false;
    for (Theory& candidate : theoryReductions(t)) {
      if (keeps(candidate)) {
        t = std::move(candidate);
        progress = true;
        break;
      }
    }
  }
  return t;
}

bool violates(Suite suite, const Theory& t) {
  try {
    return checkTheory(suite, t).has_value();
  } catch (const std::exception&) {
    return true;
  }
}

}  // namespace

std::optional<std::string> checkTheory(Suite suite, const Theory& theory) {
  switch (suite) {
    case Suite::Coherence: return checkCoherence(theory);
    case Suite::Consistency: return checkConsistency(theory);
    case Suite::Chain: return checkChain(theory, false);
    case Suite::Duality: return checkChain(theory, true);
    case Suite::Thm1Diff: return checkThm1(theory);
    case Suite::SemanticsOracle: break;
  }
  throw std::invalid_argument("suite semanticsOracle checks programs, not theories");
}

std::optional<std::string> checkProgram(const NormalProgram& program) {
  const ThreeValuedModel kunen = kunenEval(program);
  const ThreeValuedModel wfs = wfsEval(program);
  auto describe = [](const ThreeValuedModel& m) {
    std::string s;
    for (Truth t : m.values()) s += truthSymbol(t);
    return s;
  };
  const ThreeValuedModel kunenOracle = bruteForceKunen(program);
  if (!(kunen == kunenOracle)) {
    return "kunen " + describe(kunen) + " vs oracle " + describe(kunenOracle);
  }
  const ThreeValuedModel wfsOracle = bruteForceWfs(program);
  if (!(wfs == wfsOracle)) return "wfs " + describe(wfs) + " vs oracle " + describe(wfsOracle);
  if (!kunen.knowledgeBelow(wfs)) {
    return "wfs " + describe(wfs) + " does not extend kunen " + describe(kunen);
  }
  return std::nullopt;
}

Theory shrinkTheory(Suite suite, const Theory& theory) {
  return shrinkWhile(theory, [suite](const Theory& t) { return violates(suite, t); });
}

Theory shrinkTheory(const Theory& theory, const std::function<bool(const Theory&)>& keeps) {
  return shrinkWhile(theory, keeps);
}

NormalProgram shrinkProgram(const NormalProgram& program) {
  auto fails = [](const NormalProgram& p) {
    try {
      return checkProgram(p).has_value();
    } catch (const std::exception&) {
      return true;
    }
  };
  NormalProgram p = program;
  bool progress = true;
  while (progress) {
    progress = false;
    std::vector<NormalProgram> candidates;
    for (std::size_t i = 0; i < p.clauses.size(); ++i) {
      NormalProgram c = p;
      c.clauses.erase(c.clauses.begin() + static_cast<std::ptrdiff_t>(i));
      candidates.push_back(std::move(c));
      for (std::size_t k = 0; k < p.clauses[i].positive.size(); ++k) {
        NormalProgram d = p;
        auto& body = d.clauses[i].positive;
        body.erase(body.begin() + static_cast<std::ptrdiff_t>(k));
        candidates.push_back(std::move(d));
      }
      for (std::size_t k = 0; k < p.clauses[i].negative.size(); ++k) {
        NormalProgram d = p;
        auto& body = d.clauses[i].negative;
        body.erase(body.begin() + static_cast<std::ptrdiff_t>(k));
        candidates.push_back(std::move(d));
      }
    }
    for (auto& c : candidates) {
      if (fails(c)) {
        p = std::move(c);
        progress = true;
        break;
      }
    }
  }
  return p;
}

std::string programText(const NormalProgram& program) {
  std::ostringstream os;
  os << "% atoms " << program.atomCount << "\n";
  for (const NormalClause& c : program.clauses) {
    os << 'a' << c.head;
    const char* sep = " :- ";
    for (AtomId a : c.positive) {
      os << sep << 'a' << a;
      sep = ", ";
    }
    for (AtomId a : c.negative) {
      os << sep << "not a" << a;
      sep = ", ";
    }
    os << ".\n";
  }
  return os.str();
}

std::string SuiteReport::toText() const {
  std::ostringstream os;
  os << toString(suite) << ": " << checked << " checked, " << violations.size() << " violation"
     << (violations.size() == 1 ? "" : "s") << "\n";
  for (const Violation& v : violations) {
    os << "  #" << v.index << " seed " << v.seed << ": " << v.detail << "\n";
  }
  return os.str();
}

SuiteReport runSuite(Suite suite, const GeneratorParams& p, std::size_t count) {
  SuiteReport report;
  report.suite = suite;
  for (std::size_t i = 0; i < count; ++i) {
    const std::uint64_t seed = seedFor(p.seed, i);
    ++report.checked;
    if (suite == Suite::SemanticsOracle) {
      const NormalProgram prog = randomProgram(seed, std::min<std::size_t>(12, kOracleAtomLimit));
      std::optional<std::string> detail;
      try {
        detail = checkProgram(prog);
      } catch (const std::exception& e) {
        detail = e.what();
      }
      if (detail) report.violations.push_back({i, seed, *detail, programText(shrinkProgram(prog))});
      continue;
    }
    GeneratorParams q = p;
    q.seed = seed;
    const Theory t = randomTheory(q);
    std::optional<std::string> detail;
    try {
      detail = checkTheory(suite, t);
    } catch (const std::exception& e) {
      detail = e.what();
    }
    if (detail) report.violations.push_back({i, seed, *detail, serializeTheory(shrinkTheory(suite, t))});
  }
  return report;
}

std::optional<Theory> findStrictnessWitness(std::size_t inclusion, const GeneratorParams& p,
                                            std::size_t tries) {
  if (inclusion >= kChainInclusions) throw std::out_of_range("no such chain inclusion");
  auto strict = [inclusion](const Theory& t) { return isStrictAt(chainSets(t), inclusion); };
  for (std::size_t i = 0; i < tries; ++i) {
    GeneratorParams q = p;
    q.seed = seedFor(p.seed, i);
    const Theory t = randomTheory(q);
    if (strict(t)) return shrinkWhile(t, strict);
  }
  return std::nullopt;
}

}  // namespace dfl
