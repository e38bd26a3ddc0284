#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dfl/lp_eval.hpp"
#include "dfl/theory.hpp"
#include "dfl/variant.hpp"

namespace dfl {

enum class MetaPredicate {
  // Database predicates: encode the theory.
  Fact,
  Strict,
  Defeasible,
  Defeater,
  Sup,
  // Rule classes.
  Rule,
  SupportiveRule,
  // Proof predicates.
  Definitely,
  Defeasibly,
  Supported,
  Overruled,
  Defeated,
  Beaten,
};

std::string_view toString(MetaPredicate p);
std::size_t arityOf(MetaPredicate p);
/// fact, strict, defeasible, defeater, sup, rule, supportive_rule.
bool isStaticPredicate(MetaPredicate p);

/// A ground meta-atom. Object literals, rule labels and antecedent lists are
/// embedded as opaque ground terms: `~p(a)`, `r1`, `[q,~s]`.
struct MetaAtom {
  MetaPredicate predicate = MetaPredicate::Fact;
  std::vector<std::string> args;

  auto operator<=>(const MetaAtom&) const = default;
  bool operator==(const MetaAtom&) const = default;
};

std::string toString(const MetaAtom& atom);

MetaAtom definitelyAtom(const Literal& lit);
MetaAtom defeasiblyAtom(const Literal& lit);
MetaAtom supportedAtom(const Literal& lit);

/// The clause forms of the meta-program. The rule-class clauses define
/// supportive_rule from strict/defeasible and rule from supportive_rule/defeater.
enum class ClauseSchema {
  Database,
  SupportiveFromStrict,
  SupportiveFromDefeasible,
  RuleFromSupportive,
  RuleFromDefeater,
  C1,   // definitely(X) :- fact(X).
  C2,   // definitely(X) :- strict(R, X, [Y..]), definitely(Y)...
  C3,   // defeasibly(X) :- definitely(X).
  C4,   // defeasibly(X) :- not definitely(~X), supportive_rule(R, X, [Y..]),
        //                  defeasibly(Y)..., not overruled(R, X).
  C5,   // overruled(R, X) :- rule(S, ~X, [U..]), defeasibly(U)..., not defeated(S, ~X).
  C6,   // defeated(S, ~X) :- sup(T, S), supportive_rule(T, X, [V..]), defeasibly(V)...
  C7,   // supported(X) :- definitely(X).
  C8,   // supported(X) :- supportive_rule(R, X, [Y..]), supported(Y)...
  C9,   // supported(X) :- supportive_rule(R, X, [Y..]), supported(Y)..., not beaten(R, X).
  C10,  // beaten(R, X) :- rule(S, ~X, [W..]), defeasibly(W)..., sup(S, R).
  C11,  // overruled(R, X) :- rule(S, ~X, [U..]), supported(U)..., not defeated(S, ~X).
  C12,  // overruled(R, X) :- rule(S, ~X, [U..]), defeasibly(U)..., not sup(R, S).
  C13,  // overruled(R, X) :- rule(S, ~X, [U..]), supported(U)..., not sup(R, S).
};

std::string_view toString(ClauseSchema s);

/// Support clauses: the refined c9/c10 pair, or the naive c8 kept for
/// diagnostics only.
enum class SupportClauses { Refined, Naive };

/// The clause schemas for a configuration. Every set contains the rule-class
/// clauses, c1-c4, the overruling clauses of the variant and the support
/// clauses, so that support can be reported under every variant. The failure
/// semantics does not influence the result.
std::vector<ClauseSchema> selectClauses(const VariantConfig& cfg,
                                        SupportClauses support = SupportClauses::Refined);

/// The database of a ground theory: fact(p), strict/defeasible/defeater(r, p,
/// [q..]) and sup(r, s), in theory order.
std::vector<MetaAtom> emitDatabase(const Theory& ground);

struct MetaProgramOptions {
  /// Resolve database and rule-class atoms while instantiating. When false,
  /// the database and the rule-class clauses are emitted as program clauses
  /// and every schema keeps its database atoms in the body.
  bool staticResolution = true;
  SupportClauses support = SupportClauses::Refined;
};

/// A ground normal program over meta-atoms, with the schema each clause was
/// instantiated from.
class GroundProgram {
 public:
  AtomId intern(const MetaAtom& atom);
  std::optional<AtomId> find(const MetaAtom& atom) const;

  void addClause(AtomId head, std::vector<AtomId> positive, std::vector<AtomId> negative,
                 ClauseSchema schema);

  const MetaAtom& atom(AtomId id) const { return atoms_[id]; }
  std::size_t atomCount() const { return atoms_.size(); }
  std::size_t clauseCount() const { return program_.clauses.size(); }
  const NormalClause& clause(std::size_t i) const { return program_.clauses[i]; }
  ClauseSchema schema(std::size_t i) const { return schemas_[i]; }

  const NormalProgram& program() const { return program_; }

  /// `head :- a1, ..., not b1, ... .` or `head.`
  std::string clauseText(std::size_t i) const;
  /// Every clause, one per line, in instantiation order.
  std::string toText() const;

  bool operator==(const GroundProgram&) const = default;

 private:
  std::vector<MetaAtom> atoms_;
  std::map<MetaAtom, AtomId> ids_;
  NormalProgram program_;
  std::vector<ClauseSchema> schemas_;
};

/// Instantiates the clause schemas selected by `cfg` over a ground theory.
/// Body lists are flattened: every antecedent literal becomes its own body
/// atom. Atoms for definitely/defeasibly/supported of every literal in
/// literalDomain(ground) are always present.
GroundProgram instantiate(const Theory& ground, const VariantConfig& cfg,
                          const MetaProgramOptions& options = {});

}  // namespace dfl
