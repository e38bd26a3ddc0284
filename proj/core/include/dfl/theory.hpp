#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dfl/literal.hpp"

namespace dfl {

enum class RuleKind { Strict, Defeasible, Defeater };

std::string_view arrowFor(RuleKind kind);

struct Rule {
  std::string label;
  std::vector<Literal> antecedent;
  Literal consequent;
  RuleKind kind = RuleKind::Defeasible;

  bool isSupportive() const { return kind != RuleKind::Defeater; }

  bool operator==(const Rule&) const = default;
};

/// `superior > inferior`.
struct Superiority {
  std::string superior;
  std::string inferior;

  auto operator<=>(const Superiority&) const = default;
  bool operator==(const Superiority&) const = default;
};

/// A defeasible theory (facts, rules, superiority). Insertion order is kept so
/// that serialization is stable; the add* helpers give the fields set semantics.
struct Theory {
  std::vector<Literal> facts;
  std::vector<Rule> rules;
  std::vector<Superiority> superiority;

  /// Ignores a fact that is already present.
  void addFact(Literal fact);
  /// Removes duplicate antecedent literals, keeping first occurrences.
  void addRule(Rule rule);
  /// Ignores a pair that is already present.
  void addSuperiority(std::string superior, std::string inferior);

  const Rule* findRule(std::string_view label) const;
  bool hasFact(const Literal& lit) const;

  bool operator==(const Theory&) const = default;
};

/// Every literal that occurs in the theory, plus the complement of each.
std::set<Literal> literalDomain(const Theory& theory);

class TheoryError : public std::runtime_error {
 public:
  enum class Kind { DuplicateLabel, UnknownLabelInSuperiority, SuperiorityCycle };

  TheoryError(Kind kind, std::vector<std::string> labels);

  Kind kind() const { return kind_; }
  const std::vector<std::string>& labels() const { return labels_; }

 private:
  Kind kind_;
  std::vector<std::string> labels_;
};

std::string_view toString(TheoryError::Kind kind);

/// Throws TheoryError unless labels are unique, every superiority label names a
/// rule, and the superiority graph has no directed cycle. For a cycle the
/// offending labels are reported in cycle order.
void validateTheory(const Theory& theory);

/// Rule-class views of a theory: R_s, R_sd, R_d, R_dft, and the per-literal
/// views R[q], R_s[q], R_sd[q]. Entries are indices into theory.rules in
/// theory order. The indexed theory must outlive the index.
class RuleIndex {
 public:
  explicit RuleIndex(const Theory& theory);

  const Theory& theory() const { return *theory_; }
  const Rule& rule(std::size_t i) const { return theory_->rules[i]; }
  std::size_t size() const { return theory_->rules.size(); }

  std::span<const std::size_t> strict() const { return strict_; }
  std::span<const std::size_t> supportive() const { return supportive_; }
  std::span<const std::size_t> defeasible() const { return defeasible_; }
  std::span<const std::size_t> defeaters() const { return defeaters_; }

  /// R[q]: every rule with consequent q, defeaters included.
  std::span<const std::size_t> rulesFor(const Literal& q) const;
  /// R_s[q].
  std::span<const std::size_t> strictFor(const Literal& q) const;
  /// R_sd[q]: strict and defeasible rules with consequent q.
  std::span<const std::size_t> supportiveFor(const Literal& q) const;
  /// R_d[q].
  std::span<const std::size_t> defeasibleFor(const Literal& q) const;
  /// R_dft[q].
  std::span<const std::size_t> defeatersFor(const Literal& q) const;

  std::optional<std::size_t> indexOf(std::string_view label) const;

  /// True iff the pair (rule t, rule s) is listed as t > s.
  bool superior(std::size_t t, std::size_t s) const;

 private:
  struct PerLiteral {
    std::vector<std::size_t> all, strict, supportive, defeasible, defeaters;
  };
  const PerLiteral* lookup(const Literal& q) const;

  const Theory* theory_;
  std::vector<std::size_t> strict_, supportive_, defeasible_, defeaters_;
  std::map<Literal, PerLiteral> byHead_;
  std::map<std::string, std::size_t, std::less<>> byLabel_;
  std::set<std::pair<std::size_t, std::size_t>> superior_;
};

}  // namespace dfl
