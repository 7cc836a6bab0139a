#include "temporepair/parse.hpp"

#include <cctype>
#include <limits>
#include <set>
#include <utility>
#include <vector>

#include "temporepair/log.hpp"

namespace temporepair {

ParseError::ParseError(Code code, std::size_t line, std::size_t column,
                       const std::string& message)
    : std::runtime_error("parse error at " + std::to_string(line) + ":" +
                         std::to_string(column) + ": " + message),
      code_(code),
      line_(line),
      column_(column) {}

namespace {

// ── Lexer ────────────────────────────────────────────────────────────────

enum class TokenKind : unsigned char {
  Ident,
  Nat,
  LParen,
  RParen,
  Comma,
  At,
  Amp,
  Pipe,
  Bang,
  LessEq,
  Minus,
  Colon,
  Inverse,  // ^-
  Newline,
  End,
};

struct Token {
  TokenKind kind;
  std::string text;
  unsigned long number = 0;
  std::size_t line = 1;
  std::size_t column = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> tokens;
    bool line_has_token = false;
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
        continue;
      }
      if (c == '\n') {
        if (line_has_token) tokens.push_back(make(TokenKind::Newline, "\n"));
        advance_newline();
        line_has_token = false;
        continue;
      }
      if (c == ' ' || c == '\t' || c == '\r') {
        advance();
        continue;
      }
      line_has_token = true;
      if (std::isalpha(static_cast<unsigned char>(c))) {
        tokens.push_back(lex_ident());
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(c))) {
        tokens.push_back(lex_number());
        continue;
      }
      tokens.push_back(lex_symbol());
    }
    if (line_has_token) tokens.push_back(make(TokenKind::Newline, "\n"));
    tokens.push_back(make(TokenKind::End, ""));
    return tokens;
  }

 private:
  Token make(TokenKind kind, std::string text) {
    Token t;
    t.kind = kind;
    t.text = std::move(text);
    t.line = line_;
    t.column = column_;
    return t;
  }

  void advance() {
    ++pos_;
    ++column_;
  }

  void advance_newline() {
    ++pos_;
    ++line_;
    column_ = 1;
  }

  Token lex_ident() {
    Token t = make(TokenKind::Ident, "");
    std::string word;
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
        word += c;
        advance();
      } else {
        break;
      }
    }
    // One keyword contains a hyphen; fold it into a single token.
    if (word == "inverse" && text_.substr(pos_).rfind("-functional", 0) == 0) {
      word += "-functional";
      for (int i = 0; i < 11; ++i) advance();
    }
    t.text = std::move(word);
    return t;
  }

  Token lex_number() {
    Token t = make(TokenKind::Nat, "");
    std::string digits;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      digits += text_[pos_];
      advance();
    }
    t.text = digits;
    try {
      t.number = std::stoul(digits);
    } catch (const std::out_of_range&) {
      throw ParseError(ParseError::Code::Syntax, t.line, t.column,
                       "number out of range: " + digits);
    }
    return t;
  }

  Token lex_symbol() {
    const char c = text_[pos_];
    switch (c) {
      case '(': {
        Token t = make(TokenKind::LParen, "(");
        advance();
        return t;
      }
      case ')': {
        Token t = make(TokenKind::RParen, ")");
        advance();
        return t;
      }
      case ',': {
        Token t = make(TokenKind::Comma, ",");
        advance();
        return t;
      }
      case '@': {
        Token t = make(TokenKind::At, "@");
        advance();
        return t;
      }
      case '&': {
        Token t = make(TokenKind::Amp, "&");
        advance();
        return t;
      }
      case '|': {
        Token t = make(TokenKind::Pipe, "|");
        advance();
        return t;
      }
      case '!': {
        Token t = make(TokenKind::Bang, "!");
        advance();
        return t;
      }
      case ':': {
        Token t = make(TokenKind::Colon, ":");
        advance();
        return t;
      }
      case '-': {
        Token t = make(TokenKind::Minus, "-");
        advance();
        return t;
      }
      case '<': {
        Token t = make(TokenKind::LessEq, "<=");
        advance();
        if (pos_ >= text_.size() || text_[pos_] != '=') {
          throw ParseError(ParseError::Code::Syntax, t.line, t.column,
                           "expected '<=' after '<'");
        }
        advance();
        return t;
      }
      case '^': {
        Token t = make(TokenKind::Inverse, "^-");
        advance();
        if (pos_ >= text_.size() || text_[pos_] != '-') {
          throw ParseError(ParseError::Code::Syntax, t.line, t.column,
                           "expected '^-' after '^'");
        }
        advance();
        return t;
      }
      default:
        throw ParseError(ParseError::Code::Syntax, line_, column_,
                         std::string("unexpected character '") + c + "'");
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

// ── Parser ───────────────────────────────────────────────────────────────

const std::set<std::string>& reserved_words() {
  static const std::set<std::string> words = {
      "concept", "role",  "individual", "rigid", "global",
      "functional", "inverse-functional", "tbox", "abox",
      "roleinc", "exists", "Top", "Bot", "F", "G"};
  return words;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  TemporalKb run() {
    parse_declarations();
    parse_tbox();
    parse_abox();
    expect(TokenKind::End, "end of input");
    return std::move(kb_);
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }

  const Token& next() { return tokens_[pos_++]; }

  bool at_ident(const char* word) const {
    return peek().kind == TokenKind::Ident && peek().text == word;
  }

  [[noreturn]] void fail(const Token& t, const std::string& message) const {
    throw ParseError(ParseError::Code::Syntax, t.line, t.column, message);
  }

  const Token& expect(TokenKind kind, const char* what) {
    if (peek().kind != kind) {
      fail(peek(), std::string("expected ") + what + ", got '" + peek().text + "'");
    }
    return next();
  }

  void expect_end_of_line() {
    if (peek().kind == TokenKind::End) return;
    expect(TokenKind::Newline, "end of line");
  }

  void skip_newlines() {
    while (peek().kind == TokenKind::Newline) next();
  }

  std::string parse_fresh_name() {
    const Token& t = expect(TokenKind::Ident, "a name");
    if (reserved_words().count(t.text) != 0) {
      fail(t, "'" + t.text + "' is a reserved word");
    }
    return t.text;
  }

  void parse_declarations() {
    for (;;) {
      skip_newlines();
      if (at_ident("tbox")) {
        next();
        expect(TokenKind::Colon, "':' after 'tbox'");
        expect_end_of_line();
        return;
      }
      if (at_ident("concept")) {
        const Token& kw = next();
        std::string name = parse_fresh_name();
        ConceptDecl decl;
        if (at_ident("rigid")) {
          next();
          decl.rigid = true;
        }
        if (kb_.symbols.has_concept(name) || kb_.symbols.has_role(name)) {
          fail(kw, "redeclared symbol '" + name + "'");
        }
        kb_.symbols.concepts.emplace(std::move(name), decl);
        expect_end_of_line();
        continue;
      }
      if (at_ident("role")) {
        const Token& kw = next();
        std::string name = parse_fresh_name();
        RoleDecl decl;
        for (;;) {
          if (at_ident("global") && !decl.global) {
            next();
            decl.global = true;
          } else if (at_ident("functional") && !decl.functional) {
            next();
            decl.functional = true;
          } else if (at_ident("inverse-functional") && !decl.inverse_functional) {
            next();
            decl.inverse_functional = true;
          } else {
            break;
          }
        }
        if (kb_.symbols.has_concept(name) || kb_.symbols.has_role(name)) {
          fail(kw, "redeclared symbol '" + name + "'");
        }
        kb_.symbols.roles.emplace(std::move(name), decl);
        expect_end_of_line();
        continue;
      }
      if (at_ident("individual")) {
        next();
        kb_.symbols.individuals.insert(parse_fresh_name());
        expect_end_of_line();
        continue;
      }
      if (peek().kind == TokenKind::End) {
        fail(peek(), "missing 'tbox:' section");
      }
      fail(peek(), "expected a declaration or 'tbox:'");
    }
  }

  void parse_tbox() {
    for (;;) {
      skip_newlines();
      if (at_ident("abox")) {
        next();
        expect(TokenKind::Colon, "':' after 'abox'");
        expect_end_of_line();
        return;
      }
      if (peek().kind == TokenKind::End) {
        fail(peek(), "missing 'abox:' section");
      }
      const Token& start = peek();
      Concept lhs = parse_concept();
      if (contains_temporal(lhs)) {
        throw ParseError(ParseError::Code::TemporalLhs, start.line, start.column,
                         "future-time operator on GCI left-hand side");
      }
      expect(TokenKind::LessEq, "'<='");
      Concept rhs = parse_concept();
      expect_end_of_line();
      kb_.gcis.push_back({std::move(lhs), std::move(rhs)});
    }
  }

  void parse_abox() {
    std::set<std::string> seen;
    for (;;) {
      skip_newlines();
      if (peek().kind == TokenKind::End) return;
      Assertion a;
      if (peek().kind == TokenKind::Minus) {
        next();
        a.positive = false;
      }
      const Token& pred = expect(TokenKind::Ident, "a predicate name");
      a.predicate = pred.text;
      const bool is_concept = kb_.symbols.has_concept(a.predicate);
      const bool is_role = kb_.symbols.has_role(a.predicate);
      if (!is_concept && !is_role) {
        throw ParseError(ParseError::Code::UndeclaredSymbol, pred.line,
                         pred.column, "undeclared predicate '" + a.predicate + "'");
      }
      a.is_role = is_role;
      expect(TokenKind::LParen, "'('");
      a.subject = expect(TokenKind::Ident, "an individual name").text;
      if (peek().kind == TokenKind::Comma) {
        next();
        a.object = expect(TokenKind::Ident, "an individual name").text;
        if (!is_role) {
          fail(pred, "concept assertion '" + a.predicate + "' takes one argument");
        }
      } else if (is_role) {
        fail(pred, "role assertion '" + a.predicate + "' takes two arguments");
      }
      expect(TokenKind::RParen, "')'");
      expect(TokenKind::At, "'@'");
      const Token& ts = expect(TokenKind::Nat, "a timestamp");
      if (ts.number > std::numeric_limits<unsigned>::max()) {
        fail(ts, "timestamp out of range");
      }
      a.timestamp = static_cast<unsigned>(ts.number);
      expect_end_of_line();
      kb_.symbols.individuals.insert(a.subject);
      if (a.is_role) kb_.symbols.individuals.insert(a.object);
      if (!seen.insert(to_string(a)).second) {
        log(LogLevel::Warn, "dropping duplicate assertion " + to_string(a));
        continue;
      }
      kb_.abox.push_back(std::move(a));
    }
  }

  // concept := and_chain ('|' and_chain)*
  Concept parse_concept() {
    Concept acc = parse_and_chain();
    while (peek().kind == TokenKind::Pipe) {
      next();
      Concept rhs = parse_and_chain();
      acc = Concept::disj(std::move(acc), std::move(rhs));
    }
    return acc;
  }

  Concept parse_and_chain() {
    Concept acc = parse_unary();
    while (peek().kind == TokenKind::Amp) {
      next();
      Concept rhs = parse_unary();
      acc = Concept::conj(std::move(acc), std::move(rhs));
    }
    return acc;
  }

  Concept parse_unary() {
    if (peek().kind == TokenKind::Bang) {
      next();
      return Concept::negation(parse_unary());
    }
    if (at_ident("F")) {
      next();
      return Concept::sometime(parse_unary());
    }
    if (at_ident("G")) {
      next();
      return Concept::always(parse_unary());
    }
    return parse_atom();
  }

  Concept parse_atom() {
    if (peek().kind == TokenKind::LParen) {
      next();
      Concept inner = parse_concept();
      expect(TokenKind::RParen, "')'");
      return inner;
    }
    if (at_ident("Top")) {
      next();
      return Concept::top();
    }
    if (at_ident("Bot")) {
      next();
      return Concept::bottom();
    }
    if (at_ident("exists")) {
      next();
      return Concept::exists(parse_role());
    }
    const Token& t = expect(TokenKind::Ident, "a concept");
    if (reserved_words().count(t.text) != 0) {
      fail(t, "'" + t.text + "' cannot start a concept here");
    }
    if (!kb_.symbols.has_concept(t.text)) {
      throw ParseError(ParseError::Code::UndeclaredSymbol, t.line, t.column,
                       "undeclared concept '" + t.text + "'");
    }
    return Concept::name(t.text);
  }

  RoleExpr parse_role() {
    const Token& t = expect(TokenKind::Ident, "a role name");
    if (!kb_.symbols.has_role(t.text)) {
      throw ParseError(ParseError::Code::UndeclaredSymbol, t.line, t.column,
                       "undeclared role '" + t.text + "'");
    }
    RoleExpr role;
    role.name = t.text;
    if (peek().kind == TokenKind::Inverse) {
      next();
      role.inverted = true;
    }
    return role;
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  TemporalKb kb_;
};

}  // namespace

TemporalKb parse_kb(std::string_view text) {
  Lexer lexer(text);
  Parser parser(lexer.run());
  return parser.run();
}

}  // namespace temporepair
