#include "dfl/variant.hpp"

namespace dfl {

std::array<VariantConfig, 8> allVariants() {
  std::array<VariantConfig, 8> out{};
  const auto base = kunenVariants();
  for (std::size_t i = 0; i < 4; ++i) {
    out[i] = base[i];
    out[i + 4] = base[i].withFailure(Failure::WellFounded);
  }
  return out;
}

std::array<VariantConfig, 4> kunenVariants() {
  return {VariantConfig{Ambiguity::Blocking, TeamDefeat::On, Failure::Kunen},
          VariantConfig{Ambiguity::Propagating, TeamDefeat::On, Failure::Kunen},
          VariantConfig{Ambiguity::Blocking, TeamDefeat::Off, Failure::Kunen},
          VariantConfig{Ambiguity::Propagating, TeamDefeat::Off, Failure::Kunen}};
}

std::string_view toString(Ambiguity a) {
  return a == Ambiguity::Blocking ? "block" : "propagate";
}

std::string_view toString(TeamDefeat t) { return t == TeamDefeat::On ? "on" : "off"; }

std::string_view toString(Failure f) { return f == Failure::Kunen ? "kunen" : "wfs"; }

std::string toString(const VariantConfig& cfg) {
  std::string out;
  out += toString(cfg.ambiguity);
  out += ',';
  out += toString(cfg.teamDefeat);
  out += ',';
  out += toString(cfg.failure);
  return out;
}

std::string_view tagSymbol(Tag tag, bool unicode) {
  switch (tag) {
    case Tag::Delta: return unicode ? "Δ" : "D";
    case Tag::Partial: return unicode ? "∂" : "d";
    case Tag::Support: return unicode ? "Σ" : "S";
  }
  return "?";
}

std::string_view verdictSymbol(Verdict v, bool unicode) {
  switch (v) {
    case Verdict::ProvedPositive: return "+";
    case Verdict::ProvedNegative: return unicode ? "−" : "-";
    case Verdict::Undecided: return "?";
  }
  return "?";
}

Verdict ConclusionSet::verdict(const Literal& lit, Tag tag) const {
  auto it = verdicts_.find({lit, tag});
  return it == verdicts_.end() ? Verdict::Undecided : it->second;
}

std::vector<Literal> ConclusionSet::literals() const {
  std::vector<Literal> out;
  for (const auto& [key, v] : verdicts_) {
    if (out.empty() || out.back() != key.first) out.push_back(key.first);
  }
  return out;
}

std::set<Literal> ConclusionSet::positive(Tag tag) const {
  std::set<Literal> out;
  for (const auto& [key, v] : verdicts_) {
    if (key.second == tag && v == Verdict::ProvedPositive) out.insert(key.first);
  }
  return out;
}

std::set<Literal> ConclusionSet::negative(Tag tag) const {
  std::set<Literal> out;
  for (const auto& [key, v] : verdicts_) {
    if (key.second == tag && v == Verdict::ProvedNegative) out.insert(key.first);
  }
  return out;
}

}  // namespace dfl
