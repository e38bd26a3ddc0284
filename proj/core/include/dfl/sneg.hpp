#pragma once

#include <compare>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dfl/direct_engine.hpp"
#include "dfl/theory.hpp"

namespace dfl {

/// A literal expression inside a condition: the queried literal `q`, a bound
/// literal variable such as `a`, or the complement of either.
struct LitExpr {
  std::string var;
  bool complemented = false;

  auto operator<=>(const LitExpr&) const = default;
  bool operator==(const LitExpr&) const = default;
};

/// Quantifier ranges: R_s[l], R_sd[l], R[l], or A(r) for a bound rule r.
struct RuleRange {
  enum class Kind { StrictFor, SupportiveFor, AllFor, Antecedent };
  Kind kind = Kind::AllFor;
  LitExpr lit;          // for the *For kinds
  std::string ruleVar;  // for Antecedent

  auto operator<=>(const RuleRange&) const = default;
  bool operator==(const RuleRange&) const = default;
};

/// Pure atoms, each with a declared classical complement:
/// l ∈ F / l ∉ F, and t > s / t ≯ s.
struct PureAtom {
  enum class Kind { InFacts, NotInFacts, Superior, NotSuperior };
  Kind kind = Kind::InFacts;
  LitExpr lit;
  std::string lhs, rhs;

  auto operator<=>(const PureAtom&) const = default;
  bool operator==(const PureAtom&) const = default;
};

PureAtom complementOf(const PureAtom& atom);

/// Formulas over proof prefixes. `clause` carries the printed clause number
/// such as "(2.3.1)" for reporting; it is ignored by comparison.
struct Formula {
  enum class Kind { Member, And, Or, Exists, Forall, Not, Pure };
  Kind kind = Kind::And;

  // Member
  Sign sign = Sign::Plus;
  Tag tag = Tag::Delta;
  LitExpr lit;
  // Exists / Forall
  std::string var;
  RuleRange range;
  // Pure
  PureAtom pure;

  std::vector<Formula> children;
  std::string clause;

  static Formula member(Sign sign, Tag tag, LitExpr lit, std::string clause = {});
  static Formula conj(std::vector<Formula> children, std::string clause = {});
  static Formula disj(std::vector<Formula> children, std::string clause = {});
  static Formula exists(std::string var, RuleRange range, Formula body, std::string clause = {});
  static Formula forall(std::string var, RuleRange range, Formula body, std::string clause = {});
  static Formula negation(Formula body, std::string clause = {});
  static Formula pureAtom(PureAtom atom, std::string clause = {});
};

/// True iff the formula contains no tagged-literal membership.
bool isPure(const Formula& f);
std::size_t formulaSize(const Formula& f);
std::string toString(const Formula& f, bool unicode = false);

/// Strong negation: flips membership signs, swaps ∧/∨ and ∃/∀, commutes
/// with ¬, and classically negates pure subformulas.
Formula sneg(const Formula& f);

/// Canonical form for comparison: negations pushed into pure subformulas
/// and resolved through the complement table, double negations removed,
/// nested ∧/∨ flattened, singleton ∧/∨ collapsed, bound variables renamed
/// by binder depth, and ∧/∨ children sorted.
Formula normalize(const Formula& f);

/// Structural equality that ignores clause labels.
bool sameFormula(const Formula& a, const Formula& b);

/// The four inference conditions of the original logic as printed.
struct EncodedConditions {
  Formula plusDelta, minusDelta, plusPartial, minusPartial;

  const Formula& get(Sign sign, Tag tag) const;
  Formula& get(Sign sign, Tag tag);
};

EncodedConditions encodedConditions();

struct SnegMismatch {
  /// Clause label of the first differing subtree ("(2.2)"), or the nearest
  /// labelled ancestor.
  std::string clause;
  std::string expected;
  std::string actual;
};

/// Compares two formulas after normalization and locates the first
/// differing subtree.
std::optional<SnegMismatch> compareNormalized(const Formula& expected, const Formula& actual);

struct SnegReport {
  struct Entry {
    Tag tag = Tag::Delta;
    std::optional<SnegMismatch> mismatch;  // empty when the pair matches
  };
  std::vector<Entry> entries;

  bool allMatch() const;
  /// "+/-D: match" lines (Unicode: "±Δ: match"), mismatch details indented.
  std::string toText(bool unicode = false) const;
};

/// Checks, for ±Δ and ±∂, that the negative condition is the strong
/// negation of the positive one and vice versa. A mismatch reports the
/// strong negation as `expected` and the encoded condition as `actual`.
SnegReport verifyStrongNegation(const EncodedConditions& conditions = encodedConditions());

struct ConditionMutation {
  std::string description;
  EncodedConditions conditions;
};

/// Every single-clause mutation of the shipped conditions: deleting one
/// conjunct or disjunct, flipping one membership sign, swapping one
/// quantifier or connective, complementing one literal expression, or
/// complementing one pure atom.
std::vector<ConditionMutation> singleClauseMutations();

/// Membership oracle for tagged literals of the proof prefix.
using PrefixMembership = std::function<bool(const TaggedLiteral&)>;

/// Evaluates a condition for query literal `query` over a ground theory.
bool holds(const Formula& condition, const RuleIndex& index, const Literal& query,
           const PrefixMembership& inPrefix);

}  // namespace dfl
