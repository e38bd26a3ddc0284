#include "dfl/sneg.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace dfl {

PureAtom complementOf(const PureAtom& atom) {
  PureAtom out = atom;
  switch (atom.kind) {
    case PureAtom::Kind::InFacts: out.kind = PureAtom::Kind::NotInFacts; break;
    case PureAtom::Kind::NotInFacts: out.kind = PureAtom::Kind::InFacts; break;
    case PureAtom::Kind::Superior: out.kind = PureAtom::Kind::NotSuperior; break;
    case PureAtom::Kind::NotSuperior: out.kind = PureAtom::Kind::Superior; break;
  }
  return out;
}

Formula Formula::member(Sign sign, Tag tag, LitExpr lit, std::string clause) {
  Formula f;
  f.kind = Kind::Member;
  f.sign = sign;
  f.tag = tag;
  f.lit = std::move(lit);
  f.clause = std::move(clause);
  return f;
}

Formula Formula::conj(std::vector<Formula> children, std::string clause) {
  Formula f;
  f.kind = Kind::And;
  f.children = std::move(children);
  f.clause = std::move(clause);
  return f;
}

Formula Formula::disj(std::vector<Formula> children, std::string clause) {
  Formula f = conj(std::move(children), std::move(clause));
  f.kind = Kind::Or;
  return f;
}

Formula Formula::exists(std::string var, RuleRange range, Formula body, std::string clause) {
  Formula f;
  f.kind = Kind::Exists;
  f.var = std::move(var);
  f.range = std::move(range);
  f.children.push_back(std::move(body));
  f.clause = std::move(clause);
  return f;
}

Formula Formula::forall(std::string var, RuleRange range, Formula body, std::string clause) {
  Formula f = exists(std::move(var), std::move(range), std::move(body), std::move(clause));
  f.kind = Kind::Forall;
  return f;
}

Formula Formula::negation(Formula body, std::string clause) {
  Formula f;
  f.kind = Kind::Not;
  f.children.push_back(std::move(body));
  f.clause = std::move(clause);
  return f;
}

Formula Formula::pureAtom(PureAtom atom, std::string clause) {
  Formula f;
  f.kind = Kind::Pure;
  f.pure = std::move(atom);
  f.clause = std::move(clause);
  return f;
}

bool isPure(const Formula& f) {
  if (f.kind == Formula::Kind::Member) return false;
  return std::all_of(f.children.begin(), f.children.end(), [](const Formula& c) { return isPure(c); });
}

std::size_t formulaSize(const Formula& f) {
  std::size_t n = 1;
  for (const auto& c : f.children) n += formulaSize(c);
  return n;
}

namespace {

std::string litText(const LitExpr& e, bool unicode) {
  if (!e.complemented) return e.var;
  return (unicode ? "∼" : "~") + e.var;
}

std::string rangeText(const RuleRange& r, bool unicode) {
  switch (r.kind) {
    case RuleRange::Kind::StrictFor: return "Rs[" + litText(r.lit, unicode) + "]";
    case RuleRange::Kind::SupportiveFor: return "Rsd[" + litText(r.lit, unicode) + "]";
    case RuleRange::Kind::AllFor: return "R[" + litText(r.lit, unicode) + "]";
    case RuleRange::Kind::Antecedent: return "A(" + r.ruleVar + ")";
  }
  return "?";
}

std::string pureText(const PureAtom& p, bool unicode) {
  switch (p.kind) {
    case PureAtom::Kind::InFacts: return litText(p.lit, unicode) + (unicode ? " ∈ F" : " in F");
    case PureAtom::Kind::NotInFacts:
      return litText(p.lit, unicode) + (unicode ? " ∉ F" : " notin F");
    case PureAtom::Kind::Superior: return p.lhs + " > " + p.rhs;
    case PureAtom::Kind::NotSuperior: return p.lhs + (unicode ? " ≯ " : " !> ") + p.rhs;
  }
  return "?";
}

}  // namespace

std::string toString(const Formula& f, bool unicode) {
  using K = Formula::Kind;
  switch (f.kind) {
    case K::Member: {
      std::string s = f.sign == Sign::Plus ? "+" : (unicode ? "−" : "-");
      s += tagSymbol(f.tag, unicode);
      s += unicode ? "" : " ";
      s += litText(f.lit, unicode);
      s += unicode ? " ∈ P" : " in P";
      return s;
    }
    case K::And:
    case K::Or: {
      const char* op = f.kind == K::And ? (unicode ? " ∧ " : " & ") : (unicode ? " ∨ " : " | ");
      std::string s = "(";
      for (std::size_t i = 0; i < f.children.size(); ++i) {
        if (i != 0) s += op;
        s += toString(f.children[i], unicode);
      }
      return s + ")";
    }
    case K::Exists:
    case K::Forall: {
      std::string q = f.kind == K::Exists ? (unicode ? "∃" : "exists ") : (unicode ? "∀" : "forall ");
      return q + f.var + (unicode ? " ∈ " : " in ") + rangeText(f.range, unicode) + ": " +
             toString(f.children.front(), unicode);
    }
    case K::Not: return (unicode ? "¬" : "not ") + toString(f.children.front(), unicode);
    case K::Pure: return pureText(f.pure, unicode);
  }
  return "?";
}

Formula sneg(const Formula& f) {
  using K = Formula::Kind;
  if (isPure(f)) {
    Formula out = Formula::negation(f, f.clause);
    return out;
  }
  Formula out = f;
  switch (f.kind) {
    case K::Member: out.sign = f.sign == Sign::Plus ? Sign::Minus : Sign::Plus; return out;
    case K::And: out.kind = K::Or; break;
    case K::Or: out.kind = K::And; break;
    case K::Exists: out.kind = K::Forall; break;
    case K::Forall: out.kind = K::Exists; break;
    case K::Not: break;
    case K::Pure: break;  // unreachable: pure formulas handled above
  }
  for (auto& c : out.children) c = sneg(c);
  return out;
}

namespace {

using K = Formula::Kind;

// Pushes a pending negation into pure subformulas; a negation over a
// formula with tagged literals stays in place.
Formula pushNegation(const Formula& f, bool negate) {
  if (f.kind == K::Not) {
    const Formula& body = f.children.front();
    if (isPure(body)) {
      Formula out = pushNegation(body, !negate);
      if (out.clause.empty()) out.clause = f.clause;
      return out;
    }
    if (negate) return pushNegation(body, false);
    Formula out = f;
    out.children.front() = pushNegation(body, false);
    return out;
  }
  if (negate && !isPure(f)) {
    return Formula::negation(pushNegation(f, false), f.clause);
  }
  Formula out = f;
  if (negate) {
    switch (f.kind) {
      case K::Pure: out.pure = complementOf(f.pure); return out;
      case K::And: out.kind = K::Or; break;
      case K::Or: out.kind = K::And; break;
      case K::Exists: out.kind = K::Forall; break;
      case K::Forall: out.kind = K::Exists; break;
      default: break;
    }
  }
  for (auto& c : out.children) c = pushNegation(c, negate);
  return out;
}

using Renaming = std::map<std::string, std::string>;

std::string renamed(const Renaming& env, const std::string& v) {
  auto it = env.find(v);
  return it == env.end() ? v : it->second;
}

Formula renameBound(const Formula& f, Renaming env, std::size_t depth) {
  Formula out = f;
  out.lit.var = renamed(env, f.lit.var);
  out.range.lit.var = renamed(env, f.range.lit.var);
  out.range.ruleVar = renamed(env, f.range.ruleVar);
  out.pure.lit.var = renamed(env, f.pure.lit.var);
  out.pure.lhs = renamed(env, f.pure.lhs);
  out.pure.rhs = renamed(env, f.pure.rhs);
  if (f.kind == K::Exists || f.kind == K::Forall) {
    out.var = "v" + std::to_string(depth);
    env[f.var] = out.var;
    ++depth;
  }
  for (auto& c : out.children) c = renameBound(c, env, depth);
  return out;
}

Formula flattenAndSort(const Formula& f) {
  Formula out = f;
  out.children.clear();
  for (const auto& c : f.children) {
    Formula nc = flattenAndSort(c);
    if ((f.kind == K::And || f.kind == K::Or) && nc.kind == f.kind) {
      for (auto& g : nc.children) out.children.push_back(std::move(g));
    } else {
      out.children.push_back(std::move(nc));
    }
  }
  if ((out.kind == K::And || out.kind == K::Or)) {
    if (out.children.size() == 1) {
      Formula only = std::move(out.children.front());
      if (only.clause.empty()) only.clause = out.clause;
      return only;
    }
    std::stable_sort(out.children.begin(), out.children.end(),
                     [](const Formula& a, const Formula& b) { return toString(a) < toString(b); });
  }
  return out;
}

std::optional<SnegMismatch> compareTrees(const Formula& e, const Formula& a,
                                         const std::string& ancestor) {
  const std::string here = !e.clause.empty() ? e.clause : !a.clause.empty() ? a.clause : ancestor;
  auto mismatch = [&]() {
    return SnegMismatch{here.empty() ? "(root)" : here, toString(e), toString(a)};
  };
  if (e.kind != a.kind) return mismatch();
  switch (e.kind) {
    case K::Member:
      if (e.sign != a.sign || e.tag != a.tag || e.lit != a.lit) return mismatch();
      return std::nullopt;
    case K::Pure:
      if (e.pure != a.pure) return mismatch();
      return std::nullopt;
    case K::Exists:
    case K::Forall:
      if (e.var != a.var || e.range != a.range) return mismatch();
      return compareTrees(e.children.front(), a.children.front(), here);
    case K::Not: return compareTrees(e.children.front(), a.children.front(), here);
    case K::And:
    case K::Or: break;
  }

  std::vector<bool> used(a.children.size(), false);
  std::vector<std::size_t> unmatchedE;
  for (std::size_t i = 0; i < e.children.size(); ++i) {
    bool found = false;
    for (std::size_t j = 0; j < a.children.size() && !found; ++j) {
      if (!used[j] && sameFormula(e.children[i], a.children[j])) {
        used[j] = true;
        found = true;
      }
    }
    if (!found) unmatchedE.push_back(i);
  }
  std::vector<std::size_t> unmatchedA;
  for (std::size_t j = 0; j < a.children.size(); ++j) {
    if (!used[j]) unmatchedA.push_back(j);
  }
  if (unmatchedE.empty() && unmatchedA.empty()) return std::nullopt;
  if (unmatchedE.size() == 1 && unmatchedA.size() == 1) {
    return compareTrees(e.children[unmatchedE.front()], a.children[unmatchedA.front()], here);
  }
  if (!unmatchedE.empty()) {
    const Formula& missing = e.children[unmatchedE.front()];
    return SnegMismatch{missing.clause.empty() ? here : missing.clause, toString(missing),
                        "(absent)"};
  }
  const Formula& extra = a.children[unmatchedA.front()];
  return SnegMismatch{extra.clause.empty() ? here : extra.clause, "(absent)", toString(extra)};
}

}  // namespace

Formula normalize(const Formula& f) {
  return flattenAndSort(renameBound(pushNegation(f, false), {}, 0));
}

bool sameFormula(const Formula& a, const Formula& b) {
  if (a.kind != b.kind || a.children.size() != b.children.size()) return false;
  switch (a.kind) {
    case K::Member:
      if (a.sign != b.sign || a.tag != b.tag || a.lit != b.lit) return false;
      break;
    case K::Pure:
      if (a.pure != b.pure) return false;
      break;
    case K::Exists:
    case K::Forall:
      if (a.var != b.var || a.range != b.range) return false;
      break;
    default: break;
  }
  for (std::size_t i = 0; i < a.children.size(); ++i) {
    if (!sameFormula(a.children[i], b.children[i])) return false;
  }
  return true;
}

std::optional<SnegMismatch> compareNormalized(const Formula& expected, const Formula& actual) {
  return compareTrees(normalize(expected), normalize(actual), "");
}

// ---------------------------------------------------------------------------

const Formula& EncodedConditions::get(Sign sign, Tag tag) const {
  if (tag == Tag::Delta) return sign == Sign::Plus ? plusDelta : minusDelta;
  if (tag == Tag::Partial) return sign == Sign::Plus ? plusPartial : minusPartial;
  throw std::invalid_argument("no encoded condition for the support tag");
}

Formula& EncodedConditions::get(Sign sign, Tag tag) {
  return const_cast<Formula&>(std::as_const(*this).get(sign, tag));
}

EncodedConditions encodedConditions() {
  using F = Formula;
  using RK = RuleRange::Kind;
  using PK = PureAtom::Kind;
  const LitExpr q{"q", false};
  const LitExpr notQ{"q", true};
  const LitExpr a{"a", false};
  auto range = [](RK kind, LitExpr lit) { return RuleRange{kind, std::move(lit), {}}; };
  auto body = [](const std::string& rule) { return RuleRange{RK::Antecedent, {}, rule}; };
  const Sign P = Sign::Plus;
  const Sign M = Sign::Minus;
  const Tag D = Tag::Delta;
  const Tag d = Tag::Partial;

  EncodedConditions c;
  c.plusDelta = F::disj({
      F::pureAtom({PK::InFacts, q, {}, {}}, "(1)"),
      F::exists("r", range(RK::StrictFor, q), F::forall("a", body("r"), F::member(P, D, a)), "(2)"),
  });
  c.minusDelta = F::conj({
      F::pureAtom({PK::NotInFacts, q, {}, {}}, "(1)"),
      F::forall("r", range(RK::StrictFor, q), F::exists("a", body("r"), F::member(M, D, a)), "(2)"),
  });
  c.plusPartial = F::disj({
      F::member(P, D, q, "(1)"),
      F::conj({
          F::exists("r", range(RK::SupportiveFor, q), F::forall("a", body("r"), F::member(P, d, a)),
                    "(2.1)"),
          F::member(M, D, notQ, "(2.2)"),
          F::forall("s", range(RK::AllFor, notQ),
                    F::disj({
                        F::exists("a", body("s"), F::member(M, d, a), "(2.3.1)"),
                        F::exists("t", range(RK::SupportiveFor, q),
                                  F::conj({F::forall("a", body("t"), F::member(P, d, a)),
                                           F::pureAtom({PK::Superior, {}, "t", "s"})}),
                                  "(2.3.2)"),
                    }),
                    "(2.3)"),
      }, "(2)"),
  });
  c.minusPartial = F::conj({
      F::member(M, D, q, "(1)"),
      F::disj({
          F::forall("r", range(RK::SupportiveFor, q), F::exists("a", body("r"), F::member(M, d, a)),
                    "(2.1)"),
          F::member(P, D, notQ, "(2.2)"),
          F::exists("s", range(RK::AllFor, notQ),
                    F::conj({
                        F::forall("a", body("s"), F::member(P, d, a), "(2.3.1)"),
                        F::forall("t", range(RK::SupportiveFor, q),
                                  F::disj({F::exists("a", body("t"), F::member(M, d, a)),
                                           F::pureAtom({PK::NotSuperior, {}, "t", "s"})}),
                                  "(2.3.2)"),
                    }),
                    "(2.3)"),
      }, "(2)"),
  });
  return c;
}

bool SnegReport::allMatch() const {
  return std::all_of(entries.begin(), entries.end(), [](const Entry& e) { return !e.mismatch; });
}

std::string SnegReport::toText(bool unicode) const {
  std::string out;
  for (const auto& e : entries) {
    out += unicode ? "±" : "+/-";
    out += tagSymbol(e.tag, unicode);
    out += ": ";
    if (!e.mismatch) {
      out += "match\n";
      continue;
    }
    out += "mismatch at " + e.mismatch->clause + "\n";
    out += "  expected: " + e.mismatch->expected + "\n";
    out += "  actual:   " + e.mismatch->actual + "\n";
  }
  return out;
}

SnegReport verifyStrongNegation(const EncodedConditions& conditions) {
  SnegReport report;
  for (Tag tag : {Tag::Delta, Tag::Partial}) {
    const Formula& pos = conditions.get(Sign::Plus, tag);
    const Formula& neg = conditions.get(Sign::Minus, tag);
    SnegReport::Entry entry{tag, compareNormalized(sneg(pos), neg)};
    if (!entry.mismatch) entry.mismatch = compareNormalized(sneg(neg), pos);
    report.entries.push_back(std::move(entry));
  }
  return report;
}

// ---------------------------------------------------------------------------

namespace {

void collectPaths(const Formula& f, std::vector<std::size_t>& path,
                  std::vector<std::vector<std::size_t>>& out) {
  out.push_back(path);
  for (std::size_t i = 0; i < f.children.size(); ++i) {
    path.push_back(i);
    collectPaths(f.children[i], path, out);
    path.pop_back();
  }
}

Formula& nodeAt(Formula& root, const std::vector<std::size_t>& path) {
  Formula* f = &root;
  for (std::size_t i : path) f = &f->children[i];
  return *f;
}

std::string nodeName(const Formula& root, const std::vector<std::size_t>& path) {
  const Formula* f = &root;
  std::string label;
  for (std::size_t i : path) {
    f = &f->children[i];
    if (!f->clause.empty()) label = f->clause;
  }
  return label.empty() ? "(root)" : label;
}

}  // namespace

std::vector<ConditionMutation> singleClauseMutations() {
  const EncodedConditions base = encodedConditions();
  std::vector<ConditionMutation> out;
  const std::pair<Sign, Tag> slots[] = {
      {Sign::Plus, Tag::Delta}, {Sign::Minus, Tag::Delta},
      {Sign::Plus, Tag::Partial}, {Sign::Minus, Tag::Partial}};
  for (const auto& [sign, tag] : slots) {
    const std::string which = std::string(sign == Sign::Plus ? "+" : "-") + std::string(tagSymbol(tag));
    std::vector<std::vector<std::size_t>> paths;
    std::vector<std::size_t> scratch;
    collectPaths(base.get(sign, tag), scratch, paths);
    for (const auto& path : paths) {
      const Formula& node = nodeAt(const_cast<Formula&>(base.get(sign, tag)), path);
      const std::string where = which + " " + nodeName(base.get(sign, tag), path);
      auto mutate = [&](const std::string& what, auto&& edit) {
        ConditionMutation m{what + " at " + where, base};
        edit(nodeAt(m.conditions.get(sign, tag), path));
        out.push_back(std::move(m));
      };
      switch (node.kind) {
        case K::And:
        case K::Or:
          if (node.children.size() >= 2) {
            for (std::size_t i = 0; i < node.children.size(); ++i) {
              const std::string child =
                  node.children[i].clause.empty() ? "#" + std::to_string(i) : node.children[i].clause;
              mutate("delete " + child, [i](Formula& f) {
                f.children.erase(f.children.begin() + static_cast<std::ptrdiff_t>(i));
              });
            }
            mutate("swap connective", [](Formula& f) { f.kind = f.kind == K::And ? K::Or : K::And; });
          }
          break;
        case K::Exists:
        case K::Forall:
          mutate("swap quantifier",
                 [](Formula& f) { f.kind = f.kind == K::Exists ? K::Forall : K::Exists; });
          break;
        case K::Member:
          mutate("flip sign", [](Formula& f) {
            f.sign = f.sign == Sign::Plus ? Sign::Minus : Sign::Plus;
          });
          mutate("complement literal", [](Formula& f) { f.lit.complemented = !f.lit.complemented; });
          break;
        case K::Pure:
          mutate("complement pure atom", [](Formula& f) { f.pure = complementOf(f.pure); });
          break;
        case K::Not: break;
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

struct Env {
  std::map<std::string, std::size_t> rules;
  std::map<std::string, Literal> literals;
};

class Evaluator {
 public:
  Evaluator(const RuleIndex& index, const Literal& query, const PrefixMembership& inPrefix)
      : index_(index), query_(query), inPrefix_(inPrefix) {}

  bool eval(const Formula& f, Env& env) const {
    switch (f.kind) {
      case K::Member: return inPrefix_(TaggedLiteral{f.sign, f.tag, resolve(f.lit, env)});
      case K::And:
        return std::all_of(f.children.begin(), f.children.end(),
                           [&](const Formula& c) { return eval(c, env); });
      case K::Or:
        return std::any_of(f.children.begin(), f.children.end(),
                           [&](const Formula& c) { return eval(c, env); });
      case K::Not: return !eval(f.children.front(), env);
      case K::Pure: return evalPure(f.pure, env);
      case K::Exists:
      case K::Forall: return evalQuantifier(f, env);
    }
    return false;
  }

 private:
  Literal resolve(const LitExpr& e, const Env& env) const {
    Literal base;
    if (e.var == "q") {
      base = query_;
    } else if (auto it = env.literals.find(e.var); it != env.literals.end()) {
      base = it->second;
    } else {
      throw std::invalid_argument("unbound literal variable '" + e.var + "'");
    }
    return e.complemented ? complement(base) : base;
  }

  std::size_t ruleOf(const std::string& var, const Env& env) const {
    auto it = env.rules.find(var);
    if (it == env.rules.end()) throw std::invalid_argument("unbound rule variable '" + var + "'");
    return it->second;
  }

  bool evalPure(const PureAtom& p, const Env& env) const {
    switch (p.kind) {
      case PureAtom::Kind::InFacts: return index_.theory().hasFact(resolve(p.lit, env));
      case PureAtom::Kind::NotInFacts: return !index_.theory().hasFact(resolve(p.lit, env));
      case PureAtom::Kind::Superior: return index_.superior(ruleOf(p.lhs, env), ruleOf(p.rhs, env));
      case PureAtom::Kind::NotSuperior:
        return !index_.superior(ruleOf(p.lhs, env), ruleOf(p.rhs, env));
    }
    return false;
  }

  bool evalQuantifier(const Formula& f, Env& env) const {
    const bool universal = f.kind == K::Forall;
    const Formula& body = f.children.front();
    if (f.range.kind == RuleRange::Kind::Antecedent) {
      const Rule& r = index_.rule(ruleOf(f.range.ruleVar, env));
      for (const auto& lit : r.antecedent) {
        Env inner = env;
        inner.literals[f.var] = lit;
        if (eval(body, inner) != universal) return !universal;
      }
      return universal;
    }
    const Literal target = resolve(f.range.lit, env);
    std::span<const std::size_t> rules;
    switch (f.range.kind) {
      case RuleRange::Kind::StrictFor: rules = index_.strictFor(target); break;
      case RuleRange::Kind::SupportiveFor: rules = index_.supportiveFor(target); break;
      default: rules = index_.rulesFor(target); break;
    }
    for (std::size_t r : rules) {
      Env inner = env;
      inner.rules[f.var] = r;
      if (eval(body, inner) != universal) return !universal;
    }
    return universal;
  }

  const RuleIndex& index_;
  const Literal& query_;
  const PrefixMembership& inPrefix_;
};

}  // namespace

bool holds(const Formula& condition, const RuleIndex& index, const Literal& query,
           const PrefixMembership& inPrefix) {
  Env env;
  return Evaluator(index, query, inPrefix).eval(condition, env);
}

}  // namespace dfl
