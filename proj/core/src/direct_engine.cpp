#include "dfl/direct_engine.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>

namespace dfl {

TaggedLiteral plusDelta(Literal q) { return {Sign::Plus, Tag::Delta, std::move(q)}; }
TaggedLiteral minusDelta(Literal q) { return {Sign::Minus, Tag::Delta, std::move(q)}; }
TaggedLiteral plusPartial(Literal q) { return {Sign::Plus, Tag::Partial, std::move(q)}; }
TaggedLiteral minusPartial(Literal q) { return {Sign::Minus, Tag::Partial, std::move(q)}; }

std::string toString(const TaggedLiteral& tl, bool unicode) {
  std::string out;
  if (tl.sign == Sign::Plus) {
    out += '+';
  } else {
    out += unicode ? "−" : "-";
  }
  out += tagSymbol(tl.tag, unicode);
  if (!unicode) out += ' ';
  out += toString(tl.literal);
  return out;
}

std::optional<std::size_t> Derivation::lineOf(const TaggedLiteral& tl) const {
  auto it = index_.find(tl);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::set<TaggedLiteral> Derivation::conclusions() const {
  std::set<TaggedLiteral> out;
  for (const auto& line : lines_) out.insert(line.conclusion);
  return out;
}

std::optional<DerivationTrace> Derivation::traceFor(const TaggedLiteral& tl) const {
  const auto goal = lineOf(tl);
  if (!goal) return std::nullopt;
  std::vector<bool> needed(lines_.size(), false);
  std::vector<std::size_t> stack{*goal};
  needed[*goal] = true;
  while (!stack.empty()) {
    const std::size_t i = stack.back();
    stack.pop_back();
    for (std::size_t p : lines_[i].why.premises) {
      if (!needed[p]) {
        needed[p] = true;
        stack.push_back(p);
      }
    }
  }
  std::vector<std::size_t> renumber(lines_.size(), 0);
  DerivationTrace trace;
  for (std::size_t i = 0; i < lines_.size(); ++i) {
    if (!needed[i]) continue;
    renumber[i] = trace.size();
    TraceLine line = lines_[i];
    for (auto& p : line.why.premises) p = renumber[p];
    trace.push_back(std::move(line));
  }
  return trace;
}

namespace {

enum Slot { kPlusDelta, kMinusDelta, kPlusPartial, kMinusPartial, kSlots };

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

class Engine {
 public:
  explicit Engine(const Theory& ground) : theory_(ground) {
    const auto domain = literalDomain(ground);
    literals_.assign(domain.begin(), domain.end());
    for (std::size_t i = 0; i < literals_.size(); ++i) ids_.emplace(literals_[i], i);
    const std::size_t n = literals_.size();
    complement_.resize(n);
    for (std::size_t i = 0; i < n; ++i) complement_[i] = ids_.at(complement(literals_[i]));
    isFact_.assign(n, false);
    for (const auto& f : ground.facts) isFact_[ids_.at(f)] = true;

    strictFor_.resize(n);
    supportiveFor_.resize(n);
    allFor_.resize(n);
    occursIn_.resize(n);
    const std::size_t m = ground.rules.size();
    head_.resize(m);
    body_.resize(m);
    for (std::size_t r = 0; r < m; ++r) {
      const Rule& rule = ground.rules[r];
      const std::size_t h = ids_.at(rule.consequent);
      head_[r] = h;
      for (const auto& a : rule.antecedent) {
        const std::size_t id = ids_.at(a);
        if (std::find(body_[r].begin(), body_[r].end(), id) == body_[r].end()) {
          body_[r].push_back(id);
          occursIn_[id].push_back(r);
        }
      }
      allFor_[h].push_back(r);
      if (rule.isSupportive()) supportiveFor_[h].push_back(r);
      if (rule.kind == RuleKind::Strict) strictFor_[h].push_back(r);
    }
    std::map<std::string, std::size_t> labels;
    for (std::size_t r = 0; r < m; ++r) labels.emplace(ground.rules[r].label, r);
    for (const auto& s : ground.superiority) {
      auto hi = labels.find(s.superior);
      auto lo = labels.find(s.inferior);
      if (hi != labels.end() && lo != labels.end()) sup_.emplace(hi->second, lo->second);
    }

    line_.assign(n, {kNone, kNone, kNone, kNone});
    plusDeltaCount_.assign(m, 0);
    plusPartialCount_.assign(m, 0);
    minusDeltaWitness_.assign(m, kNone);
    minusPartialWitness_.assign(m, kNone);
  }

  std::vector<TraceLine> run() {
    std::vector<bool> queued(literals_.size(), true);
    std::deque<std::size_t> queue;
    for (std::size_t i = 0; i < literals_.size(); ++i) queue.push_back(i);
    auto enqueue = [&](std::size_t q) {
      if (!queued[q]) {
        queued[q] = true;
        queue.push_back(q);
      }
    };

    while (!queue.empty()) {
      const std::size_t q = queue.front();
      queue.pop_front();
      queued[q] = false;
      for (int slot = 0; slot < kSlots; ++slot) {
        if (line_[q][slot] != kNone) continue;
        std::optional<Justification> why = check(q, static_cast<Slot>(slot));
        if (!why) continue;
        record(q, static_cast<Slot>(slot), std::move(*why));
        enqueue(q);
        enqueue(complement_[q]);
        for (std::size_t r : occursIn_[q]) {
          enqueue(head_[r]);
          enqueue(complement_[head_[r]]);
        }
      }
    }
    return std::move(lines_);
  }

 private:
  TaggedLiteral tagged(std::size_t q, Slot slot) const {
    const Literal& lit = literals_[q];
    switch (slot) {
      case kPlusDelta: return plusDelta(lit);
      case kMinusDelta: return minusDelta(lit);
      case kPlusPartial: return plusPartial(lit);
      default: return minusPartial(lit);
    }
  }

  const std::string& label(std::size_t r) const { return theory_.rules[r].label; }

  bool applicable(std::size_t r) const { return plusPartialCount_[r] == body_[r].size(); }
  bool discarded(std::size_t r) const { return minusPartialWitness_[r] != kNone; }
  bool superior(std::size_t t, std::size_t s) const { return sup_.count({t, s}) != 0; }

  void addBodyPremises(std::size_t r, Slot slot, Justification& why) const {
    for (std::size_t a : body_[r]) why.premises.push_back(line_[a][slot]);
  }

  std::optional<Justification> check(std::size_t q, Slot slot) const {
    switch (slot) {
      case kPlusDelta: return checkPlusDelta(q);
      case kMinusDelta: return checkMinusDelta(q);
      case kPlusPartial: return checkPlusPartial(q);
      default: return checkMinusPartial(q);
    }
  }

  std::optional<Justification> checkPlusDelta(std::size_t q) const {
    if (isFact_[q]) return Justification{"+D(1)", std::nullopt, {}, {}};
    for (std::size_t r : strictFor_[q]) {
      if (plusDeltaCount_[r] == body_[r].size()) {
        Justification why{"+D(2)", label(r), {}, {}};
        addBodyPremises(r, kPlusDelta, why);
        return why;
      }
    }
    return std::nullopt;
  }

  std::optional<Justification> checkMinusDelta(std::size_t q) const {
    if (isFact_[q]) return std::nullopt;
    Justification why{"-D", std::nullopt, {}, {}};
    for (std::size_t r : strictFor_[q]) {
      const std::size_t w = minusDeltaWitness_[r];
      if (w == kNone) return std::nullopt;
      why.attacks.push_back({label(r), literals_[w], std::nullopt});
      why.premises.push_back(line_[w][kMinusDelta]);
    }
    return why;
  }

  std::optional<Justification> checkPlusPartial(std::size_t q) const {
    if (line_[q][kPlusDelta] != kNone) {
      return Justification{"+d(1)", std::nullopt, {}, {line_[q][kPlusDelta]}};
    }
    const std::size_t notQ = complement_[q];
    if (line_[notQ][kMinusDelta] == kNone) return std::nullopt;  // (2.2)
    auto chosen = std::find_if(supportiveFor_[q].begin(), supportiveFor_[q].end(),
                               [&](std::size_t r) { return applicable(r); });
    if (chosen == supportiveFor_[q].end()) return std::nullopt;  // (2.1)

    Justification why{"+d(2)", label(*chosen), {}, {}};
    addBodyPremises(*chosen, kPlusPartial, why);
    why.premises.push_back(line_[notQ][kMinusDelta]);
    for (std::size_t s : allFor_[notQ]) {  // (2.3)
      if (discarded(s)) {
        const std::size_t a = minusPartialWitness_[s];
        why.attacks.push_back({label(s), literals_[a], std::nullopt});
        why.premises.push_back(line_[a][kMinusPartial]);
        continue;
      }
      auto beater = std::find_if(supportiveFor_[q].begin(), supportiveFor_[q].end(),
                                 [&](std::size_t t) { return applicable(t) && superior(t, s); });
      if (beater == supportiveFor_[q].end()) return std::nullopt;
      why.attacks.push_back({label(s), std::nullopt, label(*beater)});
      addBodyPremises(*beater, kPlusPartial, why);
    }
    return why;
  }

  std::optional<Justification> checkMinusPartial(std::size_t q) const {
    if (line_[q][kMinusDelta] == kNone) return std::nullopt;  // (1)
    const std::size_t deltaLine = line_[q][kMinusDelta];
    const std::size_t notQ = complement_[q];

    const bool allDiscarded = std::all_of(supportiveFor_[q].begin(), supportiveFor_[q].end(),
                                          [&](std::size_t r) { return discarded(r); });
    if (allDiscarded) {  // (2.1)
      Justification why{"-d(2.1)", std::nullopt, {}, {deltaLine}};
      for (std::size_t r : supportiveFor_[q]) {
        const std::size_t a = minusPartialWitness_[r];
        why.attacks.push_back({label(r), literals_[a], std::nullopt});
        why.premises.push_back(line_[a][kMinusPartial]);
      }
      return why;
    }
    if (line_[notQ][kPlusDelta] != kNone) {  // (2.2)
      return Justification{"-d(2.2)", std::nullopt, {}, {deltaLine, line_[notQ][kPlusDelta]}};
    }
    for (std::size_t s : allFor_[notQ]) {  // (2.3)
      if (!applicable(s)) continue;
      const bool unanswered =
          std::all_of(supportiveFor_[q].begin(), supportiveFor_[q].end(),
                      [&](std::size_t t) { return discarded(t) || !superior(t, s); });
      if (!unanswered) continue;
      Justification why{"-d(2.3)", label(s), {}, {deltaLine}};
      addBodyPremises(s, kPlusPartial, why);
      for (std::size_t t : supportiveFor_[q]) {
        if (!superior(t, s)) {
          why.attacks.push_back({label(t), std::nullopt, std::nullopt});
        } else {
          const std::size_t a = minusPartialWitness_[t];
          why.attacks.push_back({label(t), literals_[a], std::nullopt});
          why.premises.push_back(line_[a][kMinusPartial]);
        }
      }
      return why;
    }
    return std::nullopt;
  }

  void record(std::size_t q, Slot slot, Justification why) {
    std::sort(why.premises.begin(), why.premises.end());
    why.premises.erase(std::unique(why.premises.begin(), why.premises.end()), why.premises.end());
    const std::size_t at = lines_.size();
    line_[q][slot] = at;
    TaggedLiteral tl = tagged(q, slot);
    lines_.push_back(TraceLine{std::move(tl), std::move(why)});
    for (std::size_t r : occursIn_[q]) {
      switch (slot) {
        case kPlusDelta: ++plusDeltaCount_[r]; break;
        case kMinusDelta:
          if (minusDeltaWitness_[r] == kNone) minusDeltaWitness_[r] = q;
          break;
        case kPlusPartial: ++plusPartialCount_[r]; break;
        default:
          if (minusPartialWitness_[r] == kNone) minusPartialWitness_[r] = q;
          break;
      }
    }
  }

  const Theory& theory_;
  std::vector<Literal> literals_;
  std::map<Literal, std::size_t> ids_;
  std::vector<std::size_t> complement_;
  std::vector<bool> isFact_;
  std::vector<std::vector<std::size_t>> strictFor_, supportiveFor_, allFor_, occursIn_;
  std::vector<std::size_t> head_;
  std::vector<std::vector<std::size_t>> body_;
  std::set<std::pair<std::size_t, std::size_t>> sup_;

  std::vector<std::array<std::size_t, kSlots>> line_;
  std::vector<std::size_t> plusDeltaCount_, plusPartialCount_;
  std::vector<std::size_t> minusDeltaWitness_, minusPartialWitness_;
  std::vector<TraceLine> lines_;
};

}  // namespace

Derivation derive(const Theory& ground) {
  Derivation d;
  d.lines_ = Engine(ground).run();
  for (std::size_t i = 0; i < d.lines_.size(); ++i) d.index_.emplace(d.lines_[i].conclusion, i);
  return d;
}

std::set<TaggedLiteral> deriveAll(const Theory& ground) { return derive(ground).conclusions(); }

ProofResult prove(const Theory& ground, const TaggedLiteral& goal) {
  const Derivation d = derive(ground);
  ProofResult out;
  out.trace = d.traceFor(goal);
  out.status = out.trace ? Provability::Derivable : Provability::NotDerivable;
  return out;
}

ConclusionSet toConclusionSet(const std::set<TaggedLiteral>& derived,
                              const std::set<Literal>& domain) {
  ConclusionSet out;
  for (const auto& lit : domain) {
    for (Tag tag : {Tag::Delta, Tag::Partial}) {
      const bool pos = derived.count({Sign::Plus, tag, lit}) != 0;
      const bool neg = derived.count({Sign::Minus, tag, lit}) != 0;
      out.set(lit, tag, pos ? Verdict::ProvedPositive : neg ? Verdict::ProvedNegative : Verdict::Undecided);
    }
  }
  return out;
}

}  // namespace dfl
