#pragma once

#include <compare>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace dfl {

/// A constant or a variable. Variables start with an uppercase letter or '_'.
struct Term {
  std::string name;

  bool isVariable() const;

  auto operator<=>(const Term&) const = default;
  bool operator==(const Term&) const = default;
};

bool isVariableName(std::string_view name);

enum class Polarity { Positive, Negative };

/// An atom or a negated atom. Ordering is by predicate, then arguments, then
/// polarity, so `p` always sorts directly before `~p`.
struct Literal {
  std::string predicate;
  std::vector<Term> args;
  Polarity polarity = Polarity::Positive;

  Literal() = default;
  explicit Literal(std::string pred, std::vector<Term> arguments = {},
                   Polarity pol = Polarity::Positive);

  /// Builds a propositional or ground literal from constant names.
  static Literal atom(std::string pred, std::vector<std::string> constants = {});
  static Literal negated(std::string pred, std::vector<std::string> constants = {});

  bool negative() const { return polarity == Polarity::Negative; }
  bool isGround() const;

  auto operator<=>(const Literal&) const = default;
  bool operator==(const Literal&) const = default;
};

/// ~p for an atom p, and q for ~q.
Literal complement(const Literal& lit);

/// The atom part rendered as `p` or `p(a,b)`, without the sign.
std::string atomText(const Literal& lit);

/// `p(a)` or `~p(a)`.
std::string toString(const Literal& lit);

std::ostream& operator<<(std::ostream& os, const Literal& lit);

}  // namespace dfl
