#include "dfl/theory.hpp"

#include <algorithm>
#include <functional>

namespace dfl {

std::string_view arrowFor(RuleKind kind) {
  switch (kind) {
    case RuleKind::Strict: return "->";
    case RuleKind::Defeasible: return "=>";
    case RuleKind::Defeater: return "~>";
  }
  return "=>";
}

void Theory::addFact(Literal fact) {
  if (!hasFact(fact)) facts.push_back(std::move(fact));
}

void Theory::addRule(Rule rule) {
  std::vector<Literal> unique;
  unique.reserve(rule.antecedent.size());
  for (auto& lit : rule.antecedent) {
    if (std::find(unique.begin(), unique.end(), lit) == unique.end()) {
      unique.push_back(std::move(lit));
    }
  }
  rule.antecedent = std::move(unique);
  rules.push_back(std::move(rule));
}

void Theory::addSuperiority(std::string superior, std::string inferior) {
  Superiority pair{std::move(superior), std::move(inferior)};
  if (std::find(superiority.begin(), superiority.end(), pair) == superiority.end()) {
    superiority.push_back(std::move(pair));
  }
}

const Rule* Theory::findRule(std::string_view label) const {
  auto it = std::find_if(rules.begin(), rules.end(),
                         [&](const Rule& r) { return r.label == label; });
  return it == rules.end() ? nullptr : &*it;
}

bool Theory::hasFact(const Literal& lit) const {
  return std::find(facts.begin(), facts.end(), lit) != facts.end();
}

std::set<Literal> literalDomain(const Theory& theory) {
  std::set<Literal> out;
  auto add = [&](const Literal& lit) {
    out.insert(lit);
    out.insert(complement(lit));
  };
  for (const auto& f : theory.facts) add(f);
  for (const auto& r : theory.rules) {
    add(r.consequent);
    for (const auto& a : r.antecedent) add(a);
  }
  return out;
}

// ---------------------------------------------------------------------------

std::string_view toString(TheoryError::Kind kind) {
  switch (kind) {
    case TheoryError::Kind::DuplicateLabel: return "DuplicateLabel";
    case TheoryError::Kind::UnknownLabelInSuperiority: return "UnknownLabelInSuperiority";
    case TheoryError::Kind::SuperiorityCycle: return "SuperiorityCycle";
  }
  return "TheoryError";
}

namespace {

std::string describe(TheoryError::Kind kind, const std::vector<std::string>& labels) {
  std::string msg(toString(kind));
  msg += ": ";
  const char* sep = kind == TheoryError::Kind::SuperiorityCycle ? " > " : ", ";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i != 0) msg += sep;
    msg += labels[i];
  }
  return msg;
}

}  // namespace

TheoryError::TheoryError(Kind kind, std::vector<std::string> labels)
    : std::runtime_error(describe(kind, labels)), kind_(kind), labels_(std::move(labels)) {}

void validateTheory(const Theory& theory) {
  std::map<std::string, std::size_t, std::less<>> labelIds;
  for (std::size_t i = 0; i < theory.rules.size(); ++i) {
    const auto& label = theory.rules[i].label;
    if (!labelIds.emplace(label, i).second) {
      throw TheoryError(TheoryError::Kind::DuplicateLabel, {label});
    }
  }

  std::vector<std::vector<std::size_t>> successors(theory.rules.size());
  for (const auto& pair : theory.superiority) {
    auto hi = labelIds.find(pair.superior);
    auto lo = labelIds.find(pair.inferior);
    if (hi == labelIds.end() || lo == labelIds.end()) {
      std::vector<std::string> unknown;
      if (hi == labelIds.end()) unknown.push_back(pair.superior);
      if (lo == labelIds.end() && pair.inferior != pair.superior) {
        unknown.push_back(pair.inferior);
      }
      throw TheoryError(TheoryError::Kind::UnknownLabelInSuperiority, unknown);
    }
    successors[hi->second].push_back(lo->second);
  }

  // Iterative DFS with colours; a grey successor closes a cycle.
  enum class Colour { White, Grey, Black };
  std::vector<Colour> colour(theory.rules.size(), Colour::White);
  std::vector<std::size_t> path;
  for (std::size_t root = 0; root < theory.rules.size(); ++root) {
    if (colour[root] != Colour::White) continue;
    std::vector<std::pair<std::size_t, std::size_t>> stack{{root, 0}};
    colour[root] = Colour::Grey;
    path.assign(1, root);
    while (!stack.empty()) {
      auto& [node, next] = stack.back();
      if (next == successors[node].size()) {
        colour[node] = Colour::Black;
        stack.pop_back();
        path.pop_back();
        continue;
      }
      const std::size_t succ = successors[node][next++];
      if (colour[succ] == Colour::Grey) {
        auto start = std::find(path.begin(), path.end(), succ);
        std::vector<std::string> cycle;
        for (auto it = start; it != path.end(); ++it) cycle.push_back(theory.rules[*it].label);
        cycle.push_back(theory.rules[succ].label);
        throw TheoryError(TheoryError::Kind::SuperiorityCycle, cycle);
      }
      if (colour[succ] == Colour::White) {
        colour[succ] = Colour::Grey;
        path.push_back(succ);
        stack.emplace_back(succ, 0);
      }
    }
  }
}

// ---------------------------------------------------------------------------

RuleIndex::RuleIndex(const Theory& theory) : theory_(&theory) {
  for (std::size_t i = 0; i < theory.rules.size(); ++i) {
    const Rule& r = theory.rules[i];
    byLabel_.emplace(r.label, i);
    auto& slot = byHead_[r.consequent];
    slot.all.push_back(i);
    switch (r.kind) {
      case RuleKind::Strict:
        strict_.push_back(i);
        supportive_.push_back(i);
        slot.strict.push_back(i);
        slot.supportive.push_back(i);
        break;
      case RuleKind::Defeasible:
        defeasible_.push_back(i);
        supportive_.push_back(i);
        slot.defeasible.push_back(i);
        slot.supportive.push_back(i);
        break;
      case RuleKind::Defeater:
        defeaters_.push_back(i);
        slot.defeaters.push_back(i);
        break;
    }
  }
  for (const auto& pair : theory.superiority) {
    auto hi = byLabel_.find(pair.superior);
    auto lo = byLabel_.find(pair.inferior);
    if (hi != byLabel_.end() && lo != byLabel_.end()) superior_.emplace(hi->second, lo->second);
  }
}

const RuleIndex::PerLiteral* RuleIndex::lookup(const Literal& q) const {
  auto it = byHead_.find(q);
  return it == byHead_.end() ? nullptr : &it->second;
}

std::span<const std::size_t> RuleIndex::rulesFor(const Literal& q) const {
  const auto* p = lookup(q);
  return p ? std::span<const std::size_t>(p->all) : std::span<const std::size_t>{};
}

std::span<const std::size_t> RuleIndex::strictFor(const Literal& q) const {
  const auto* p = lookup(q);
  return p ? std::span<const std::size_t>(p->strict) : std::span<const std::size_t>{};
}

std::span<const std::size_t> RuleIndex::supportiveFor(const Literal& q) const {
  const auto* p = lookup(q);
  return p ? std::span<const std::size_t>(p->supportive) : std::span<const std::size_t>{};
}

std::span<const std::size_t> RuleIndex::defeasibleFor(const Literal& q) const {
  const auto* p = lookup(q);
  return p ? std::span<const std::size_t>(p->defeasible) : std::span<const std::size_t>{};
}

std::span<const std::size_t> RuleIndex::defeatersFor(const Literal& q) const {
  const auto* p = lookup(q);
  return p ? std::span<const std::size_t>(p->defeaters) : std::span<const std::size_t>{};
}

std::optional<std::size_t> RuleIndex::indexOf(std::string_view label) const {
  auto it = byLabel_.find(label);
  if (it == byLabel_.end()) return std::nullopt;
  return it->second;
}

bool RuleIndex::superior(std::size_t t, std::size_t s) const {
  return superior_.count({t, s}) != 0;
}

}  // namespace dfl
