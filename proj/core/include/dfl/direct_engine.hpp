#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "dfl/theory.hpp"
#include "dfl/variant.hpp"

namespace dfl {

enum class Sign { Plus, Minus };

/// +Δq, -Δq, +∂q or -∂q. Only Tag::Delta and Tag::Partial are used here.
struct TaggedLiteral {
  Sign sign = Sign::Plus;
  Tag tag = Tag::Delta;
  Literal literal;

  auto operator<=>(const TaggedLiteral&) const = default;
  bool operator==(const TaggedLiteral&) const = default;
};

TaggedLiteral plusDelta(Literal q);
TaggedLiteral minusDelta(Literal q);
TaggedLiteral plusPartial(Literal q);
TaggedLiteral minusPartial(Literal q);

/// "+D q" / "-d ~p"; with unicode "+Δq".
std::string toString(const TaggedLiteral& tl, bool unicode = false);

/// How one attacker s of q was dealt with, either discarded through one of
/// its antecedents or beaten by a superior applicable rule t for q.
struct AttackResolution {
  std::string attacker;
  std::optional<Literal> discardedBy;
  std::optional<std::string> beatenBy;

  bool operator==(const AttackResolution&) const = default;
};

/// The condition clause that admitted a line. `clause` is one of "+D(1)",
/// "+D(2)", "-D", "+d(1)", "+d(2)", "-d(2.1)", "-d(2.2)", "-d(2.3)".
struct Justification {
  std::string clause;
  /// r for +D(2) and +d(2); s for -d(2.3).
  std::optional<std::string> rule;
  /// Per attacker for +d(2); per defender t for -d(2.3) (with `attacker`
  /// holding t and discardedBy / beatenBy unused when t is not superior).
  std::vector<AttackResolution> attacks;
  /// Indices of the earlier lines this one relies on.
  std::vector<std::size_t> premises;
};

struct TraceLine {
  TaggedLiteral conclusion;
  Justification why;
};

using DerivationTrace = std::vector<TraceLine>;

/// Every derivable tagged literal of a ground theory, in derivation order.
class Derivation {
 public:
  const std::vector<TraceLine>& lines() const { return lines_; }
  bool contains(const TaggedLiteral& tl) const { return lineOf(tl).has_value(); }
  std::optional<std::size_t> lineOf(const TaggedLiteral& tl) const;
  std::set<TaggedLiteral> conclusions() const;

  /// The lines `tl` depends on, transitively, followed by `tl` itself, in
  /// derivation order with premises renumbered into the trace.
  std::optional<DerivationTrace> traceFor(const TaggedLiteral& tl) const;

 private:
  friend Derivation derive(const Theory& ground);
  std::vector<TraceLine> lines_;
  std::map<TaggedLiteral, std::size_t> index_;
};

/// Least set of tagged literals closed under the four proof conditions of
/// the original logic, computed with a FIFO worklist over literals and
/// per-rule applicability counters. `ground` must be ground and valid.
Derivation derive(const Theory& ground);

std::set<TaggedLiteral> deriveAll(const Theory& ground);

enum class Provability { Derivable, NotDerivable };

struct ProofResult {
  Provability status = Provability::NotDerivable;
  std::optional<DerivationTrace> trace;
};

ProofResult prove(const Theory& ground, const TaggedLiteral& goal);

/// Δ and ∂ verdicts over `domain` from a set of derived tagged literals.
ConclusionSet toConclusionSet(const std::set<TaggedLiteral>& derived,
                              const std::set<Literal>& domain);

}  // namespace dfl
