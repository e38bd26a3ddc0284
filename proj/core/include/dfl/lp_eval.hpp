#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dfl/variant.hpp"

namespace dfl {

using AtomId = std::uint32_t;

/// head :- positive..., not negative...
struct NormalClause {
  AtomId head = 0;
  std::vector<AtomId> positive;
  std::vector<AtomId> negative;

  bool operator==(const NormalClause&) const = default;
};

/// A finite ground normal logic program over atoms 0..atomCount-1.
struct NormalProgram {
  std::size_t atomCount = 0;
  std::vector<NormalClause> clauses;

  AtomId addAtom() { return static_cast<AtomId>(atomCount++); }

  bool operator==(const NormalProgram&) const = default;
};

enum class Truth : std::uint8_t { False, Undefined, True };

char truthSymbol(Truth t);

/// A total assignment of truth values to the atoms of a program.
class ThreeValuedModel {
 public:
  ThreeValuedModel() = default;
  explicit ThreeValuedModel(std::size_t atoms, Truth init = Truth::Undefined)
      : values_(atoms, init) {}

  Truth operator[](AtomId a) const { return values_[a]; }
  void set(AtomId a, Truth t) { values_[a] = t; }
  std::size_t size() const { return values_.size(); }

  std::size_t countTrue() const;
  std::size_t countFalse() const;

  /// Knowledge order: every atom decided here has the same value in `other`.
  bool knowledgeBelow(const ThreeValuedModel& other) const;

  const std::vector<Truth>& values() const { return values_; }

  bool operator==(const ThreeValuedModel&) const = default;

 private:
  std::vector<Truth> values_;
};

/// One application of the three-valued immediate-consequence operator. An
/// atom becomes True if some clause has every positive atom True and every
/// negated atom False; False if every clause has a positive atom False or a
/// negated atom True (so atoms without clauses are False); otherwise
/// Undefined.
ThreeValuedModel fittingStep(const NormalProgram& program, const ThreeValuedModel& current);

/// Least fixpoint of fittingStep from the all-Undefined model, by
/// synchronous sweeps until the model stops changing. For a finite ground
/// program this is the set of literals entailed by the three-valued
/// completion.
ThreeValuedModel kunenEval(const NormalProgram& program);

/// Kunen iteration that also returns every intermediate model, starting
/// with the all-Undefined model and ending with the fixpoint.
std::vector<ThreeValuedModel> kunenChain(const NormalProgram& program);

/// Least model of the program after deleting every clause with a negated
/// atom in `assumedTrue` and dropping the remaining negations.
std::vector<bool> reductLeastModel(const NormalProgram& program,
                                   const std::vector<bool>& assumedTrue);

/// The well-founded model by the alternating fixpoint: under-estimates of
/// the true set and over-estimates of the possibly-true set are refined by
/// reduct least models until both stabilise.
ThreeValuedModel wfsEval(const NormalProgram& program);

ThreeValuedModel evaluate(const NormalProgram& program, Failure failure);

}  // namespace dfl
