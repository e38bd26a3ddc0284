#pragma once

#include <array>
#include <map>
#include <ostream>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dfl/literal.hpp"

namespace dfl {

enum class Ambiguity { Blocking, Propagating };
enum class TeamDefeat { On, Off };
enum class Failure { Kunen, WellFounded };

/// Selects one logic of the family. All eight combinations are valid.
struct VariantConfig {
  Ambiguity ambiguity = Ambiguity::Blocking;
  TeamDefeat teamDefeat = TeamDefeat::On;
  Failure failure = Failure::Kunen;

  auto operator<=>(const VariantConfig&) const = default;
  bool operator==(const VariantConfig&) const = default;

  VariantConfig withFailure(Failure f) const {
    VariantConfig c = *this;
    c.failure = f;
    return c;
  }
};

/// Blocking, team defeat, Kunen failure: the original logic.
inline constexpr VariantConfig kDefaultLogic{};

/// The eight configurations in a fixed display order: the four clause sets
/// under Kunen failure, then the same four under well-founded failure.
std::array<VariantConfig, 8> allVariants();
/// The four clause sets under Kunen failure.
std::array<VariantConfig, 4> kunenVariants();

std::string toString(const VariantConfig& cfg);
std::string_view toString(Ambiguity a);
std::string_view toString(TeamDefeat t);
std::string_view toString(Failure f);

/// Proof tags. Partial is the defeasible tag; what it means depends on the
/// VariantConfig it was computed under.
enum class Tag { Delta, Partial, Support };

inline constexpr std::array<Tag, 3> kAllTags{Tag::Delta, Tag::Partial, Tag::Support};

/// "D", "d", "S", or the Unicode forms when requested.
std::string_view tagSymbol(Tag tag, bool unicode = false);

enum class Verdict { ProvedPositive, ProvedNegative, Undecided };

/// "+", "-", "?" ("−" for the negative verdict in Unicode mode).
std::string_view verdictSymbol(Verdict v, bool unicode = false);

/// Tagged verdicts for a literal domain. Single-valued per (literal, tag).
class ConclusionSet {
 public:
  using Key = std::pair<Literal, Tag>;

  void set(const Literal& lit, Tag tag, Verdict v) { verdicts_[{lit, tag}] = v; }

  /// Undecided when the key is outside the domain.
  Verdict verdict(const Literal& lit, Tag tag) const;
  bool contains(const Literal& lit, Tag tag) const { return verdicts_.count({lit, tag}) != 0; }

  bool provedPositive(const Literal& lit, Tag tag) const {
    return verdict(lit, tag) == Verdict::ProvedPositive;
  }
  bool provedNegative(const Literal& lit, Tag tag) const {
    return verdict(lit, tag) == Verdict::ProvedNegative;
  }

  /// Literals with a verdict for any tag, in literal order.
  std::vector<Literal> literals() const;
  std::set<Literal> positive(Tag tag) const;
  std::set<Literal> negative(Tag tag) const;

  const std::map<Key, Verdict>& entries() const { return verdicts_; }
  std::size_t size() const { return verdicts_.size(); }

  bool operator==(const ConclusionSet&) const = default;

 private:
  std::map<Key, Verdict> verdicts_;
};

}  // namespace dfl
