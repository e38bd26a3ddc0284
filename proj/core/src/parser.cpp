#include "dfl/parser.hpp"

#include <cctype>
#include <optional>

namespace dfl {

namespace {

std::string formatError(ParseError::Kind kind, const SourcePosition& pos,
                        const std::string& detail) {
  std::string out = std::to_string(pos.line) + ":" + std::to_string(pos.column) + ": ";
  out += kind == ParseError::Kind::Syntax ? "SyntaxError: " : "FunctionSymbolError: ";
  out += detail;
  return out;
}

enum class TokenKind { Ident, LParen, RParen, Comma, Colon, Dot, Greater, Tilde, Arrow, End };

struct Token {
  TokenKind kind = TokenKind::End;
  std::string text;
  RuleKind arrow = RuleKind::Defeasible;
  SourcePosition pos;
};

std::string_view describe(TokenKind kind) {
  switch (kind) {
    case TokenKind::Ident: return "identifier";
    case TokenKind::LParen: return "'('";
    case TokenKind::RParen: return "')'";
    case TokenKind::Comma: return "','";
    case TokenKind::Colon: return "':'";
    case TokenKind::Dot: return "'.'";
    case TokenKind::Greater: return "'>'";
    case TokenKind::Tilde: return "'~'";
    case TokenKind::Arrow: return "arrow";
    case TokenKind::End: return "end of input";
  }
  return "token";
}

bool isIdentChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    skipBlanks();
    Token tok;
    tok.pos = pos_;
    if (at_ >= text_.size()) return tok;

    const char c = text_[at_];
    if (isIdentChar(c)) {
      std::size_t end = at_;
      while (end < text_.size() && isIdentChar(text_[end])) ++end;
      tok.kind = TokenKind::Ident;
      tok.text = std::string(text_.substr(at_, end - at_));
      advance(end - at_);
      return tok;
    }

    auto peek = [&](std::size_t k) { return at_ + k < text_.size() ? text_[at_ + k] : '\0'; };
    switch (c) {
      case '(': tok.kind = TokenKind::LParen; advance(1); return tok;
      case ')': tok.kind = TokenKind::RParen; advance(1); return tok;
      case ',': tok.kind = TokenKind::Comma; advance(1); return tok;
      case ':': tok.kind = TokenKind::Colon; advance(1); return tok;
      case '.': tok.kind = TokenKind::Dot; advance(1); return tok;
      case '>': tok.kind = TokenKind::Greater; advance(1); return tok;
      case '~':
        if (peek(1) == '>') {
          tok.kind = TokenKind::Arrow;
          tok.arrow = RuleKind::Defeater;
          advance(2);
        } else {
          tok.kind = TokenKind::Tilde;
          advance(1);
        }
        return tok;
      case '-':
      case '=':
        if (peek(1) == '>') {
          tok.kind = TokenKind::Arrow;
          tok.arrow = c == '-' ? RuleKind::Strict : RuleKind::Defeasible;
          advance(2);
          return tok;
        }
        break;
      default: break;
    }
    throw ParseError(ParseError::Kind::Syntax, pos_,
                     std::string("unexpected character '") + c + "'");
  }

 private:
  void advance(std::size_t n) {
    for (std::size_t i = 0; i < n && at_ < text_.size(); ++i, ++at_) {
      if (text_[at_] == '\n') {
        ++pos_.line;
        pos_.column = 1;
      } else if ((static_cast<unsigned char>(text_[at_]) & 0xC0) != 0x80) {
        ++pos_.column;  // count UTF-8 code points, not bytes
      }
    }
  }

  void skipBlanks() {
    while (at_ < text_.size()) {
      const char c = text_[at_];
      if (c == '%') {
        while (at_ < text_.size() && text_[at_] != '\n') advance(1);
      } else if (std::isspace(static_cast<unsigned char>(c)) != 0) {
        advance(1);
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::size_t at_ = 0;
  SourcePosition pos_;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lexer_(text) {
    current_ = lexer_.next();
    lookahead_ = lexer_.next();
  }

  SourceTheory parse() {
    SourceTheory out;
    while (current_.kind != TokenKind::End) out.statements.push_back(statement());
    return out;
  }

 private:
  void shift() {
    current_ = std::move(lookahead_);
    lookahead_ = current_.kind == TokenKind::End ? Token{TokenKind::End, {}, {}, current_.pos}
                                                 : lexer_.next();
  }

  [[noreturn]] void fail(const Token& at, const std::string& detail) const {
    throw ParseError(ParseError::Kind::Syntax, at.pos, detail);
  }

  Token expect(TokenKind kind, std::string_view context) {
    if (current_.kind != kind) {
      fail(current_, "expected " + std::string(describe(kind)) + " " + std::string(context) +
                         ", found " + std::string(describe(current_.kind)) +
                         (current_.kind == TokenKind::Ident ? " '" + current_.text + "'" : ""));
    }
    Token tok = std::move(current_);
    shift();
    return tok;
  }

  Statement statement() {
    const SourcePosition start = current_.pos;
    if (current_.kind == TokenKind::Ident && lookahead_.kind == TokenKind::Colon) {
      Token label = expect(TokenKind::Ident, "as rule label");
      shift();  // ':'
      Rule rule;
      rule.label = label.text;
      if (current_.kind != TokenKind::Arrow) {
        rule.antecedent.push_back(literal());
        while (current_.kind == TokenKind::Comma) {
          shift();
          rule.antecedent.push_back(literal());
        }
      }
      Token arrow = expect(TokenKind::Arrow, "in rule '" + rule.label + "'");
      rule.kind = arrow.arrow;
      rule.consequent = literal();
      expect(TokenKind::Dot, "after rule '" + rule.label + "'");
      return RuleStatement{std::move(rule), start};
    }
    if (current_.kind == TokenKind::Ident && lookahead_.kind == TokenKind::Greater) {
      Token hi = expect(TokenKind::Ident, "as superior label");
      shift();  // '>'
      Token lo = expect(TokenKind::Ident, "as inferior label");
      expect(TokenKind::Dot, "after superiority statement");
      return SuperiorityStatement{Superiority{hi.text, lo.text}, start};
    }
    const Token first = current_;
    Literal fact = literal();
    if (!fact.isGround()) fail(first, "variables are not allowed in facts");
    expect(TokenKind::Dot, "after fact");
    return FactStatement{std::move(fact), start};
  }

  Literal literal() {
    Polarity polarity = Polarity::Positive;
    if (current_.kind == TokenKind::Tilde) {
      polarity = Polarity::Negative;
      shift();
    }
    Token name = expect(TokenKind::Ident, "as predicate");
    if (isVariableName(name.text)) {
      fail(name, "predicate '" + name.text + "' must start with a lowercase letter or digit");
    }
    Literal lit(name.text, {}, polarity);
    if (current_.kind == TokenKind::LParen) {
      shift();
      lit.args.push_back(term());
      while (current_.kind == TokenKind::Comma) {
        shift();
        lit.args.push_back(term());
      }
      expect(TokenKind::RParen, "to close argument list of '" + name.text + "'");
    }
    return lit;
  }

  Term term() {
    Token tok = expect(TokenKind::Ident, "as term");
    if (current_.kind == TokenKind::LParen) {
      throw ParseError(ParseError::Kind::FunctionSymbol, tok.pos,
                       "nested term '" + tok.text + "(...)' is not allowed");
    }
    return Term{tok.text};
  }

  Lexer lexer_;
  Token current_;
  Token lookahead_;
};

}  // namespace

ParseError::ParseError(Kind kind, SourcePosition pos, const std::string& detail)
    : std::runtime_error(formatError(kind, pos, detail)), kind_(kind), pos_(pos), detail_(detail) {}

SourceTheory parseTheory(std::string_view text) { return Parser(text).parse(); }

Theory parseTheoryText(std::string_view text) { return parseTheory(text).toTheory(); }

Theory SourceTheory::toTheory() const {
  Theory out;
  for (const auto& stmt : statements) {
    if (const auto* f = std::get_if<FactStatement>(&stmt)) {
      out.addFact(f->fact);
    } else if (const auto* r = std::get_if<RuleStatement>(&stmt)) {
      out.addRule(r->rule);
    } else {
      const auto& s = std::get<SuperiorityStatement>(stmt);
      out.addSuperiority(s.pair.superior, s.pair.inferior);
    }
  }
  return out;
}

SourceTheory SourceTheory::fromTheory(const Theory& theory) {
  SourceTheory out;
  for (const auto& f : theory.facts) out.statements.emplace_back(FactStatement{f, {}});
  for (const auto& r : theory.rules) out.statements.emplace_back(RuleStatement{r, {}});
  for (const auto& s : theory.superiority) {
    out.statements.emplace_back(SuperiorityStatement{s, {}});
  }
  return out;
}

std::string toString(const Rule& rule) {
  std::string out = rule.label + ":";
  for (std::size_t i = 0; i < rule.antecedent.size(); ++i) {
    out += i == 0 ? " " : ", ";
    out += toString(rule.antecedent[i]);
  }
  out += ' ';
  out += arrowFor(rule.kind);
  out += ' ';
  out += toString(rule.consequent);
  return out;
}

std::string serializeTheory(const SourceTheory& source) {
  std::string out;
  for (const auto& stmt : source.statements) {
    if (const auto* f = std::get_if<FactStatement>(&stmt)) {
      out += toString(f->fact);
    } else if (const auto* r = std::get_if<RuleStatement>(&stmt)) {
      out += toString(r->rule);
    } else {
      const auto& s = std::get<SuperiorityStatement>(stmt);
      out += s.pair.superior + " > " + s.pair.inferior;
    }
    out += ".\n";
  }
  return out;
}

std::string serializeTheory(const Theory& theory) {
  return serializeTheory(SourceTheory::fromTheory(theory));
}

}  // namespace dfl
