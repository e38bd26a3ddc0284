#include "dfl/literal.hpp"

#include <algorithm>
#include <cctype>

namespace dfl {

bool isVariableName(std::string_view name) {
  if (name.empty()) return false;
  const auto c = static_cast<unsigned char>(name.front());
  return std::isupper(c) != 0 || c == '_';
}

bool Term::isVariable() const { return isVariableName(name); }

Literal::Literal(std::string pred, std::vector<Term> arguments, Polarity pol)
    : predicate(std::move(pred)), args(std::move(arguments)), polarity(pol) {}

Literal Literal::atom(std::string pred, std::vector<std::string> constants) {
  std::vector<Term> terms;
  terms.reserve(constants.size());
  for (auto& c : constants) terms.push_back(Term{std::move(c)});
  return Literal(std::move(pred), std::move(terms), Polarity::Positive);
}

Literal Literal::negated(std::string pred, std::vector<std::string> constants) {
  auto lit = atom(std::move(pred), std::move(constants));
  lit.polarity = Polarity::Negative;
  return lit;
}

bool Literal::isGround() const {
  return std::none_of(args.begin(), args.end(),
                      [](const Term& t) { return t.isVariable(); });
}

Literal complement(const Literal& lit) {
  Literal out = lit;
  out.polarity = lit.negative() ? Polarity::Positive : Polarity::Negative;
  return out;
}

std::string atomText(const Literal& lit) {
  std::string out = lit.predicate;
  if (!lit.args.empty()) {
    out += '(';
    for (std::size_t i = 0; i < lit.args.size(); ++i) {
      if (i != 0) out += ',';
      out += lit.args[i].name;
    }
    out += ')';
  }
  return out;
}

std::string toString(const Literal& lit) {
  return lit.negative() ? "~" + atomText(lit) : atomText(lit);
}

std::ostream& operator<<(std::ostream& os, const Literal& lit) {
  return os << toString(lit);
}

}  // namespace dfl
