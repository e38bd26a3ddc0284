#include "dfl/metaprogram.hpp"

#include <set>

namespace dfl {

std::string_view toString(MetaPredicate p) {
  switch (p) {
    case MetaPredicate::Fact: return "fact";
    case MetaPredicate::Strict: return "strict";
    case MetaPredicate::Defeasible: return "defeasible";
    case MetaPredicate::Defeater: return "defeater";
    case MetaPredicate::Sup: return "sup";
    case MetaPredicate::Rule: return "rule";
    case MetaPredicate::SupportiveRule: return "supportive_rule";
    case MetaPredicate::Definitely: return "definitely";
    case MetaPredicate::Defeasibly: return "defeasibly";
    case MetaPredicate::Supported: return "supported";
    case MetaPredicate::Overruled: return "overruled";
    case MetaPredicate::Defeated: return "defeated";
    case MetaPredicate::Beaten: return "beaten";
  }
  return "?";
}

std::size_t arityOf(MetaPredicate p) {
  switch (p) {
    case MetaPredicate::Fact:
    case MetaPredicate::Definitely:
    case MetaPredicate::Defeasibly:
    case MetaPredicate::Supported: return 1;
    case MetaPredicate::Sup:
    case MetaPredicate::Overruled:
    case MetaPredicate::Defeated:
    case MetaPredicate::Beaten: return 2;
    case MetaPredicate::Strict:
    case MetaPredicate::Defeasible:
    case MetaPredicate::Defeater:
    case MetaPredicate::Rule:
    case MetaPredicate::SupportiveRule: return 3;
  }
  return 0;
}

bool isStaticPredicate(MetaPredicate p) {
  switch (p) {
    case MetaPredicate::Fact:
    case MetaPredicate::Strict:
    case MetaPredicate::Defeasible:
    case MetaPredicate::Defeater:
    case MetaPredicate::Sup:
    case MetaPredicate::Rule:
    case MetaPredicate::SupportiveRule: return true;
    default: return false;
  }
}

std::string toString(const MetaAtom& atom) {
  std::string out(toString(atom.predicate));
  out += '(';
  for (std::size_t i = 0; i < atom.args.size(); ++i) {
    if (i != 0) out += ", ";
    out += atom.args[i];
  }
  out += ')';
  return out;
}

MetaAtom definitelyAtom(const Literal& lit) {
  return {MetaPredicate::Definitely, {toString(lit)}};
}

MetaAtom defeasiblyAtom(const Literal& lit) {
  return {MetaPredicate::Defeasibly, {toString(lit)}};
}

MetaAtom supportedAtom(const Literal& lit) {
  return {MetaPredicate::Supported, {toString(lit)}};
}

std::string_view toString(ClauseSchema s) {
  switch (s) {
    case ClauseSchema::Database: return "db";
    case ClauseSchema::SupportiveFromStrict: return "supportive_rule/strict";
    case ClauseSchema::SupportiveFromDefeasible: return "supportive_rule/defeasible";
    case ClauseSchema::RuleFromSupportive: return "rule/supportive_rule";
    case ClauseSchema::RuleFromDefeater: return "rule/defeater";
    case ClauseSchema::C1: return "c1";
    case ClauseSchema::C2: return "c2";
    case ClauseSchema::C3: return "c3";
    case ClauseSchema::C4: return "c4";
    case ClauseSchema::C5: return "c5";
    case ClauseSchema::C6: return "c6";
    case ClauseSchema::C7: return "c7";
    case ClauseSchema::C8: return "c8";
    case ClauseSchema::C9: return "c9";
    case ClauseSchema::C10: return "c10";
    case ClauseSchema::C11: return "c11";
    case ClauseSchema::C12: return "c12";
    case ClauseSchema::C13: return "c13";
  }
  return "?";
}

std::vector<ClauseSchema> selectClauses(const VariantConfig& cfg, SupportClauses support) {
  using S = ClauseSchema;
  std::vector<S> out{S::SupportiveFromStrict, S::SupportiveFromDefeasible,
                     S::RuleFromSupportive,   S::RuleFromDefeater,
                     S::C1, S::C2, S::C3, S::C4};
  const bool propagate = cfg.ambiguity == Ambiguity::Propagating;
  if (cfg.teamDefeat == TeamDefeat::On) {
    out.push_back(propagate ? S::C11 : S::C5);
    out.push_back(S::C6);
  } else {
    out.push_back(propagate ? S::C13 : S::C12);
  }
  out.push_back(S::C7);
  if (support == SupportClauses::Refined) {
    out.push_back(S::C9);
    out.push_back(S::C10);
  } else {
    out.push_back(S::C8);
  }
  return out;
}

namespace {

std::string bodyList(const Rule& rule) {
  std::string out = "[";
  for (std::size_t i = 0; i < rule.antecedent.size(); ++i) {
    if (i != 0) out += ',';
    out += toString(rule.antecedent[i]);
  }
  out += ']';
  return out;
}

MetaAtom ruleAtom(MetaPredicate pred, const Rule& rule) {
  return {pred, {rule.label, toString(rule.consequent), bodyList(rule)}};
}

MetaPredicate kindPredicate(RuleKind kind) {
  switch (kind) {
    case RuleKind::Strict: return MetaPredicate::Strict;
    case RuleKind::Defeasible: return MetaPredicate::Defeasible;
    case RuleKind::Defeater: return MetaPredicate::Defeater;
  }
  return MetaPredicate::Defeasible;
}

MetaAtom supAtom(const Rule& hi, const Rule& lo) {
  return {MetaPredicate::Sup, {hi.label, lo.label}};
}

MetaAtom labelled(MetaPredicate pred, const Rule& rule, const Literal& lit) {
  return {pred, {rule.label, toString(lit)}};
}

struct Body {
  std::vector<MetaAtom> positive;
  std::vector<MetaAtom> negative;

  Body& pos(MetaAtom a) {
    positive.push_back(std::move(a));
    return *this;
  }
  Body& neg(MetaAtom a) {
    negative.push_back(std::move(a));
    return *this;
  }
  Body& each(MetaAtom (*make)(const Literal&), const std::vector<Literal>& lits) {
    for (const auto& l : lits) positive.push_back(make(l));
    return *this;
  }
};

class Builder {
 public:
  Builder(const Theory& ground, const MetaProgramOptions& options)
      : theory_(ground), index_(ground), domain_(literalDomain(ground)), options_(options) {
    for (const auto& atom : emitDatabase(ground)) database_.insert(atom);
    for (const auto& rule : ground.rules) {
      if (rule.isSupportive()) database_.insert(ruleAtom(MetaPredicate::SupportiveRule, rule));
      database_.insert(ruleAtom(MetaPredicate::Rule, rule));
    }
    for (const auto& lit : domain_) {
      program_.intern(definitelyAtom(lit));
      program_.intern(defeasiblyAtom(lit));
      program_.intern(supportedAtom(lit));
    }
  }

  GroundProgram build(const std::vector<ClauseSchema>& schemas) {
    if (!options_.staticResolution) {
      for (const auto& atom : emitDatabase(theory_)) emit(atom, {}, ClauseSchema::Database);
    }
    for (ClauseSchema s : schemas) instantiate(s);
    return std::move(program_);
  }

 private:
  // Rules that may bind a schema variable ranging over rules with head `lit`.
  // Static resolution only keeps the bindings that can succeed.
  std::vector<std::size_t> candidates(const Literal& lit, bool supportiveOnly) const {
    if (options_.staticResolution) {
      auto span = supportiveOnly ? index_.supportiveFor(lit) : index_.rulesFor(lit);
      return {span.begin(), span.end()};
    }
    auto span = index_.rulesFor(lit);
    return {span.begin(), span.end()};
  }

  const Rule& rule(std::size_t i) const { return theory_.rules[i]; }

  void emit(const MetaAtom& head, Body body, ClauseSchema schema) {
    const bool resolve = options_.staticResolution;
    if (resolve) {
      for (const auto& a : body.positive) {
        if (isStaticPredicate(a.predicate) && database_.count(a) == 0) return;
      }
      for (const auto& a : body.negative) {
        if (isStaticPredicate(a.predicate) && database_.count(a) != 0) return;
      }
    }
    std::vector<AtomId> pos, neg;
    for (const auto& a : body.positive) {
      if (!(resolve && isStaticPredicate(a.predicate))) pos.push_back(program_.intern(a));
    }
    for (const auto& a : body.negative) {
      if (!(resolve && isStaticPredicate(a.predicate))) neg.push_back(program_.intern(a));
    }
    program_.addClause(program_.intern(head), std::move(pos), std::move(neg), schema);
  }

  void instantiate(ClauseSchema schema) {
    using S = ClauseSchema;
    using P = MetaPredicate;
    switch (schema) {
      case S::Database: break;
      case S::SupportiveFromStrict:
      case S::SupportiveFromDefeasible:
      case S::RuleFromSupportive:
      case S::RuleFromDefeater:
        if (options_.staticResolution) break;  // resolved against the database
        for (const auto& r : theory_.rules) {
          const P from = schema == S::SupportiveFromStrict       ? P::Strict
                         : schema == S::SupportiveFromDefeasible ? P::Defeasible
                         : schema == S::RuleFromSupportive       ? P::SupportiveRule
                                                                 : P::Defeater;
          const P head =
              schema == S::RuleFromSupportive || schema == S::RuleFromDefeater ? P::Rule
                                                                               : P::SupportiveRule;
          emit(ruleAtom(head, r), Body{}.pos(ruleAtom(from, r)), schema);
        }
        break;

      case S::C1:
        for (const auto& x : domain_) {
          emit(definitelyAtom(x), Body{}.pos({P::Fact, {toString(x)}}), schema);
        }
        break;

      case S::C2:
        for (const auto& x : domain_) {
          for (std::size_t r : candidatesOfKind(x, RuleKind::Strict)) {
            emit(definitelyAtom(x),
                 Body{}.pos(ruleAtom(P::Strict, rule(r))).each(definitelyAtom, rule(r).antecedent),
                 schema);
          }
        }
        break;

      case S::C3:
        for (const auto& x : domain_) emit(defeasiblyAtom(x), Body{}.pos(definitelyAtom(x)), schema);
        break;

      case S::C4:
        for (const auto& x : domain_) {
          for (std::size_t r : candidates(x, true)) {
            const Rule& rr = rule(r);
            Body body;
            body.neg(definitelyAtom(complement(x)))
                .pos(ruleAtom(P::SupportiveRule, rr))
                .each(defeasiblyAtom, rr.antecedent)
                .neg(labelled(P::Overruled, rr, x));
            emit(defeasiblyAtom(x), std::move(body), schema);
          }
        }
        break;

      case S::C5:
      case S::C11:
      case S::C12:
      case S::C13: {
        const bool viaSupport = schema == S::C11 || schema == S::C13;
        const bool teamDefeat = schema == S::C5 || schema == S::C11;
        for (const auto& x : domain_) {
          const Literal notX = complement(x);
          for (std::size_t r : candidates(x, true)) {
            for (std::size_t s : candidates(notX, false)) {
              Body body;
              body.pos(ruleAtom(P::Rule, rule(s)))
                  .each(viaSupport ? supportedAtom : defeasiblyAtom, rule(s).antecedent);
              if (teamDefeat) {
                body.neg(labelled(P::Defeated, rule(s), notX));
              } else {
                body.neg(supAtom(rule(r), rule(s)));
              }
              emit(labelled(P::Overruled, rule(r), x), std::move(body), schema);
            }
          }
        }
        break;
      }

      case S::C6:
        for (const auto& x : domain_) {
          const Literal notX = complement(x);
          for (std::size_t s : candidates(notX, false)) {
            for (std::size_t t : candidates(x, true)) {
              Body body;
              body.pos(supAtom(rule(t), rule(s)))
                  .pos(ruleAtom(P::SupportiveRule, rule(t)))
                  .each(defeasiblyAtom, rule(t).antecedent);
              emit(labelled(P::Defeated, rule(s), notX), std::move(body), schema);
            }
          }
        }
        break;

      case S::C7:
        for (const auto& x : domain_) emit(supportedAtom(x), Body{}.pos(definitelyAtom(x)), schema);
        break;

      case S::C8:
      case S::C9:
        for (const auto& x : domain_) {
          for (std::size_t r : candidates(x, true)) {
            Body body;
            body.pos(ruleAtom(P::SupportiveRule, rule(r))).each(supportedAtom, rule(r).antecedent);
            if (schema == S::C9) body.neg(labelled(P::Beaten, rule(r), x));
            emit(supportedAtom(x), std::move(body), schema);
          }
        }
        break;

      case S::C10:
        for (const auto& x : domain_) {
          const Literal notX = complement(x);
          for (std::size_t r : candidates(x, true)) {
            for (std::size_t s : candidates(notX, false)) {
              Body body;
              body.pos(ruleAtom(P::Rule, rule(s)))
                  .each(defeasiblyAtom, rule(s).antecedent)
                  .pos(supAtom(rule(s), rule(r)));
              emit(labelled(P::Beaten, rule(r), x), std::move(body), schema);
            }
          }
        }
        break;
    }
  }

  std::vector<std::size_t> candidatesOfKind(const Literal& lit, RuleKind kind) const {
    if (options_.staticResolution) {
      auto span = kind == RuleKind::Strict ? index_.strictFor(lit) : index_.rulesFor(lit);
      return {span.begin(), span.end()};
    }
    auto span = index_.rulesFor(lit);
    return {span.begin(), span.end()};
  }

  const Theory& theory_;
  RuleIndex index_;
  std::set<Literal> domain_;
  MetaProgramOptions options_;
  std::set<MetaAtom> database_;
  GroundProgram program_;
};

}  // namespace

std::vector<MetaAtom> emitDatabase(const Theory& ground) {
  std::vector<MetaAtom> out;
  for (const auto& f : ground.facts) out.push_back({MetaPredicate::Fact, {toString(f)}});
  for (const auto& r : ground.rules) out.push_back(ruleAtom(kindPredicate(r.kind), r));
  for (const auto& s : ground.superiority) out.push_back({MetaPredicate::Sup, {s.superior, s.inferior}});
  return out;
}

AtomId GroundProgram::intern(const MetaAtom& atom) {
  auto [it, inserted] = ids_.emplace(atom, static_cast<AtomId>(atoms_.size()));
  if (inserted) {
    atoms_.push_back(atom);
    program_.addAtom();
  }
  return it->second;
}

std::optional<AtomId> GroundProgram::find(const MetaAtom& atom) const {
  auto it = ids_.find(atom);
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

void GroundProgram::addClause(AtomId head, std::vector<AtomId> positive,
                              std::vector<AtomId> negative, ClauseSchema schema) {
  program_.clauses.push_back(NormalClause{head, std::move(positive), std::move(negative)});
  schemas_.push_back(schema);
}

std::string GroundProgram::clauseText(std::size_t i) const {
  const auto& c = program_.clauses[i];
  std::string out = toString(atoms_[c.head]);
  if (!c.positive.empty() || !c.negative.empty()) {
    out += " :- ";
    bool first = true;
    for (AtomId a : c.positive) {
      if (!first) out += ", ";
      out += toString(atoms_[a]);
      first = false;
    }
    for (AtomId a : c.negative) {
      if (!first) out += ", ";
      out += "not " + toString(atoms_[a]);
      first = false;
    }
  }
  out += '.';
  return out;
}

std::string GroundProgram::toText() const {
  std::string out;
  for (std::size_t i = 0; i < program_.clauses.size(); ++i) {
    out += clauseText(i);
    out += '\n';
  }
  return out;
}

GroundProgram instantiate(const Theory& ground, const VariantConfig& cfg,
                          const MetaProgramOptions& options) {
  return Builder(ground, options).build(selectClauses(cfg, options.support));
}

}  // namespace dfl
