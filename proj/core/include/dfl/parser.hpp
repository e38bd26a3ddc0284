#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "dfl/theory.hpp"

namespace dfl {

struct SourcePosition {
  std::size_t line = 1;
  std::size_t column = 1;

  bool operator==(const SourcePosition&) const = default;
};

struct FactStatement {
  Literal fact;
  SourcePosition pos;
};

struct RuleStatement {
  Rule rule;
  SourcePosition pos;
};

struct SuperiorityStatement {
  Superiority pair;
  SourcePosition pos;
};

using Statement = std::variant<FactStatement, RuleStatement, SuperiorityStatement>;

/// A parsed theory file: statements in source order with their positions.
struct SourceTheory {
  std::vector<Statement> statements;

  /// Folds the statements into a Theory (duplicate facts and antecedent
  /// literals are dropped; duplicate labels are kept for validateTheory).
  Theory toTheory() const;

  /// Facts, then rules, then superiority pairs, positions left at default.
  static SourceTheory fromTheory(const Theory& theory);
};

class ParseError : public std::runtime_error {
 public:
  enum class Kind { Syntax, FunctionSymbol };

  ParseError(Kind kind, SourcePosition pos, const std::string& detail);

  Kind kind() const { return kind_; }
  const SourcePosition& position() const { return pos_; }
  const std::string& detail() const { return detail_; }

 private:
  Kind kind_;
  SourcePosition pos_;
  std::string detail_;
};

/// Parses the textual theory format:
///
///   fact.                 p(a).   ~q.
///   label: body -> head.  strict rule
///   label: body => head.  defeasible rule
///   label: body ~> head.  defeater
///   label1 > label2.      superiority
///   % comment to end of line
///
/// Identifiers starting with an uppercase letter or '_' are variables; they may
/// appear in rules but not in facts. Nested terms are rejected.
SourceTheory parseTheory(std::string_view text);

/// Convenience: parse and fold into a Theory. Does not validate.
Theory parseTheoryText(std::string_view text);

/// Canonical text: one statement per line in statement order. The empty theory
/// serializes to the empty string.
std::string serializeTheory(const SourceTheory& source);
std::string serializeTheory(const Theory& theory);

std::string toString(const Rule& rule);

}  // namespace dfl
