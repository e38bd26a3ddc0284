#pragma once

#include "dfl/lp_eval.hpp"
#include "dfl/metaprogram.hpp"
#include "dfl/theory.hpp"
#include "dfl/variant.hpp"

namespace dfl {

/// Every intermediate product of one evaluation, kept for export and
/// inspection.
struct Evaluation {
  Theory ground;
  GroundProgram program;
  ThreeValuedModel model;
  ConclusionSet conclusions;
};

/// Validates and grounds `theory`, instantiates the meta-program for `cfg`,
/// evaluates it under cfg.failure and reads off the Δ, ∂ and Σ verdicts for
/// every literal of the ground theory and its complement.
Evaluation evaluateTheory(const Theory& theory, const VariantConfig& cfg,
                          const MetaProgramOptions& options = {});

ConclusionSet conclude(const Theory& theory, const VariantConfig& cfg = kDefaultLogic,
                       const MetaProgramOptions& options = {});

/// Verdicts read from a model of an instantiated program over `domain`.
ConclusionSet readConclusions(const GroundProgram& program, const ThreeValuedModel& model,
                              const std::set<Literal>& domain);

}  // namespace dfl
