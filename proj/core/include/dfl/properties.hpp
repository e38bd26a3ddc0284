#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "dfl/lp_eval.hpp"
#include "dfl/theory.hpp"
#include "dfl/variant.hpp"

namespace dfl {

struct GeneratorParams {
  std::uint64_t seed = 0;
  std::size_t maxAtoms = 8;
  std::size_t maxRules = 12;
  std::size_t maxBodyLen = 3;
  double defeaterRatio = 0.15;
  double strictRatio = 0.15;
  double factRatio = 0.15;
  /// Probability that a pair of rules with complementary heads is ordered.
  double supRatio = 0.4;
  /// Unary predicates over the constants c0 and c1, with rule variables.
  bool firstOrder = false;
};

/// Deterministic in every field of `p`. Superiority pairs follow a random
/// total order of the rules, so the result always validates.
Theory randomTheory(const GeneratorParams& p);

/// A random ground normal program with 1..maxAtoms atoms.
NormalProgram randomProgram(std::uint64_t seed, std::size_t maxAtoms = 12);

/// Atoms true (false) in every three-valued model of the completion, found
/// by enumerating all 3^n assignments. Throws std::length_error above
/// kOracleAtomLimit atoms.
ThreeValuedModel bruteForceKunen(const NormalProgram& program);

/// Least fixpoint of I -> T(I) ∪ ¬U(I), with the greatest unfounded set U(I)
/// found by enumerating all 2^n atom sets. Same size limit.
ThreeValuedModel bruteForceWfs(const NormalProgram& program);

inline constexpr std::size_t kOracleAtomLimit = 14;

enum class Suite { Coherence, Consistency, Chain, Duality, Thm1Diff, SemanticsOracle };

inline constexpr std::array<Suite, 6> kAllSuites{Suite::Coherence, Suite::Consistency,
                                                 Suite::Chain,     Suite::Duality,
                                                 Suite::Thm1Diff,  Suite::SemanticsOracle};

std::string_view toString(Suite s);
/// "coherence", "consistency", "chain", "duality", "thm1diff", "semanticsOracle".
std::optional<Suite> parseSuite(std::string_view name);

/// The five positive sets of the inclusion chain under Kunen failure:
/// +Δ, +∂ (Propagating, Off), +∂ (Propagating, On), +∂ (Blocking, On),
/// +Σ (Blocking, On); and the matching negative sets.
struct ChainSets {
  std::array<std::set<Literal>, 5> positive;
  std::array<std::set<Literal>, 5> negative;
};

ChainSets chainSets(const Theory& theory);

inline constexpr std::size_t kChainInclusions = 4;
std::string_view chainLevelName(std::size_t level);

/// Description of the violated property, or nothing when `theory` satisfies
/// the suite. Not defined for Suite::SemanticsOracle.
std::optional<std::string> checkTheory(Suite suite, const Theory& theory);

/// Description of an oracle disagreement on `program`, or nothing.
std::optional<std::string> checkProgram(const NormalProgram& program);

/// Greedily removes facts, rules, superiority pairs and antecedent literals
/// while the suite keeps failing.
Theory shrinkTheory(Suite suite, const Theory& theory);
/// Same reduction steps, kept while `keeps` holds. The result satisfies
/// `keeps` and no single reduction of it does.
Theory shrinkTheory(const Theory& theory, const std::function<bool(const Theory&)>& keeps);
NormalProgram shrinkProgram(const NormalProgram& program);

/// Renders a program as clauses over atoms a0, a1, ...
std::string programText(const NormalProgram& program);

struct Violation {
  std::size_t index = 0;
  std::uint64_t seed = 0;
  std::string detail;
  /// Shrunk counterexample: a theory in rule-language syntax, or a program
  /// for the semantics oracle.
  std::string counterexample;
};

struct SuiteReport {
  Suite suite = Suite::Coherence;
  std::size_t checked = 0;
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  std::string toText() const;
};

/// Instance i uses seed `seedFor(p.seed, i)`. Violations are listed in
/// instance order.
SuiteReport runSuite(Suite suite, const GeneratorParams& p, std::size_t count);

std::uint64_t seedFor(std::uint64_t base, std::size_t index);

/// A theory on which chain inclusion `inclusion` (0 = +Δ ⊆ +∂ (P,Off), ...,
/// 3 = +∂ (B,On) ⊆ +Σ) is strict, shrunk while strictness is kept.
std::optional<Theory> findStrictnessWitness(std::size_t inclusion, const GeneratorParams& p,
                                            std::size_t tries);

bool isStrictAt(const ChainSets& sets, std::size_t inclusion);

}  // namespace dfl
