#include "dfl/lp_eval.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace dfl {

char truthSymbol(Truth t) {
  switch (t) {
    case Truth::True: return 't';
    case Truth::False: return 'f';
    case Truth::Undefined: return 'u';
  }
  return '?';
}

std::size_t ThreeValuedModel::countTrue() const {
  return static_cast<std::size_t>(std::count(values_.begin(), values_.end(), Truth::True));
}

std::size_t ThreeValuedModel::countFalse() const {
  return static_cast<std::size_t>(std::count(values_.begin(), values_.end(), Truth::False));
}

bool ThreeValuedModel::knowledgeBelow(const ThreeValuedModel& other) const {
  if (values_.size() != other.values_.size()) return false;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] != Truth::Undefined && values_[i] != other.values_[i]) return false;
  }
  return true;
}

ThreeValuedModel fittingStep(const NormalProgram& program, const ThreeValuedModel& current) {
  if (current.size() != program.atomCount) {
    throw std::invalid_argument("fittingStep: model size does not match program");
  }
  // Truth and falsity are accumulated separately and only then combined, so a
  // broken operator would surface as an atom that is both.
  std::vector<bool> canProve(program.atomCount, false);
  std::vector<bool> openClause(program.atomCount, false);
  for (const auto& clause : program.clauses) {
    bool allTrue = true;
    bool someFalse = false;
    for (AtomId a : clause.positive) {
      const Truth t = current[a];
      allTrue = allTrue && t == Truth::True;
      someFalse = someFalse || t == Truth::False;
    }
    for (AtomId a : clause.negative) {
      const Truth t = current[a];
      allTrue = allTrue && t == Truth::False;
      someFalse = someFalse || t == Truth::True;
    }
    if (allTrue) canProve[clause.head] = true;
    if (!someFalse) openClause[clause.head] = true;
  }
  ThreeValuedModel next(program.atomCount);
  for (AtomId a = 0; a < program.atomCount; ++a) {
    const bool refuted = !openClause[a];
    if (canProve[a] && refuted) {
      throw std::logic_error("fittingStep: atom is both true and false");
    }
    next.set(a, canProve[a] ? Truth::True : refuted ? Truth::False : Truth::Undefined);
  }
  return next;
}

std::vector<ThreeValuedModel> kunenChain(const NormalProgram& program) {
  std::vector<ThreeValuedModel> chain;
  chain.emplace_back(program.atomCount, Truth::Undefined);
  while (true) {
    ThreeValuedModel next = fittingStep(program, chain.back());
    if (next == chain.back()) break;
    chain.push_back(std::move(next));
  }
  return chain;
}

ThreeValuedModel kunenEval(const NormalProgram& program) {
  ThreeValuedModel model(program.atomCount, Truth::Undefined);
  while (true) {
    ThreeValuedModel next = fittingStep(program, model);
    if (next == model) return model;
    model = std::move(next);
  }
}

std::vector<bool> reductLeastModel(const NormalProgram& program,
                                   const std::vector<bool>& assumedTrue) {
  // Counter-based forward chaining over the positive reduct.
  std::vector<std::vector<std::size_t>> watchers(program.atomCount);
  std::vector<std::size_t> missing(program.clauses.size(), 0);
  std::vector<bool> model(program.atomCount, false);
  std::vector<AtomId> queue;

  for (std::size_t c = 0; c < program.clauses.size(); ++c) {
    const auto& clause = program.clauses[c];
    const bool blocked = std::any_of(clause.negative.begin(), clause.negative.end(),
                                     [&](AtomId b) { return assumedTrue[b]; });
    if (blocked) {
      missing[c] = SIZE_MAX;
      continue;
    }
    std::vector<AtomId> body = clause.positive;
    std::sort(body.begin(), body.end());
    body.erase(std::unique(body.begin(), body.end()), body.end());
    missing[c] = body.size();
    for (AtomId a : body) watchers[a].push_back(c);
    if (body.empty() && !model[clause.head]) {
      model[clause.head] = true;
      queue.push_back(clause.head);
    }
  }
  while (!queue.empty()) {
    const AtomId a = queue.back();
    queue.pop_back();
    for (std::size_t c : watchers[a]) {
      if (--missing[c] == 0) {
        const AtomId h = program.clauses[c].head;
        if (!model[h]) {
          model[h] = true;
          queue.push_back(h);
        }
      }
    }
  }
  return model;
}

ThreeValuedModel wfsEval(const NormalProgram& program) {
  // trueSet grows, possible shrinks; trueSet stays inside possible.
  std::vector<bool> trueSet(program.atomCount, false);
  std::vector<bool> possible = reductLeastModel(program, trueSet);
  while (true) {
    std::vector<bool> nextTrue = reductLeastModel(program, possible);
    std::vector<bool> nextPossible = reductLeastModel(program, nextTrue);
    if (nextTrue == trueSet && nextPossible == possible) break;
    trueSet = std::move(nextTrue);
    possible = std::move(nextPossible);
  }
  ThreeValuedModel model(program.atomCount);
  for (AtomId a = 0; a < program.atomCount; ++a) {
    if (trueSet[a] && !possible[a]) {
      throw std::logic_error("wfsEval: atom is both true and false");
    }
    model.set(a, trueSet[a] ? Truth::True : possible[a] ? Truth::Undefined : Truth::False);
  }
  return model;
}

ThreeValuedModel evaluate(const NormalProgram& program, Failure failure) {
  return failure == Failure::Kunen ? kunenEval(program) : wfsEval(program);
}

}  // namespace dfl
