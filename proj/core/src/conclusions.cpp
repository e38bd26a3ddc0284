#include "dfl/conclusions.hpp"

#include "dfl/grounder.hpp"

namespace dfl {

namespace {

Verdict verdictOf(Truth t) {
  switch (t) {
    case Truth::True: return Verdict::ProvedPositive;
    case Truth::False: return Verdict::ProvedNegative;
    case Truth::Undefined: return Verdict::Undecided;
  }
  return Verdict::Undecided;
}

}  // namespace

ConclusionSet readConclusions(const GroundProgram& program, const ThreeValuedModel& model,
                              const std::set<Literal>& domain) {
  ConclusionSet out;
  for (const Literal& lit : domain) {
    const std::pair<Tag, MetaAtom> atoms[] = {{Tag::Delta, definitelyAtom(lit)},
                                              {Tag::Partial, defeasiblyAtom(lit)},
                                              {Tag::Support, supportedAtom(lit)}};
    for (const auto& [tag, atom] : atoms) {
      auto id = program.find(atom);
      // An atom that was never interned heads no clause, hence is false.
      out.set(lit, tag, id ? verdictOf(model[*id]) : Verdict::ProvedNegative);
    }
  }
  return out;
}

Evaluation evaluateTheory(const Theory& theory, const VariantConfig& cfg,
                          const MetaProgramOptions& options) {
  validateTheory(theory);
  Evaluation ev;
  ev.ground = ground(theory);
  ev.program = instantiate(ev.ground, cfg, options);
  ev.model = evaluate(ev.program.program(), cfg.failure);
  ev.conclusions = readConclusions(ev.program, ev.model, literalDomain(ev.ground));
  return ev;
}

ConclusionSet conclude(const Theory& theory, const VariantConfig& cfg,
                       const MetaProgramOptions& options) {
  return evaluateTheory(theory, cfg, options).conclusions;
}

}  // namespace dfl
