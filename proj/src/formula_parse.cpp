#include <cctype>
#include <optional>

#include "sabotage/formula.hpp"

namespace sabotage {

namespace {

enum class Tok { Ident, Keyword, LParen, RParen, LBrace, RBrace, Bar, Amp, Arrow, Tilde, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

bool is_ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '@';
}

bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '@';
}

bool is_keyword(std::string_view word) {
  return word == "true" || word == "false" || word == "dia" || word == "box" || word == "sab" ||
         word == "sbox" || word == "rem" || word == "rbox";
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    skip_space();
    std::size_t line = line_, column = column_;
    if (pos_ >= text_.size()) return {Tok::End, "", line, column};
    char c = text_[pos_];
    auto single = [&](Tok kind) {
      advance();
      return Token{kind, std::string(1, c), line, column};
    };
    switch (c) {
      case '(': return single(Tok::LParen);
      case ')': return single(Tok::RParen);
      case '{': return single(Tok::LBrace);
      case '}': return single(Tok::RBrace);
      case '|': return single(Tok::Bar);
      case '&': return single(Tok::Amp);
      case '~': return single(Tok::Tilde);
      case '-':
        if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
          advance();
          advance();
          return {Tok::Arrow, "->", line, column};
        }
        break;
      default: break;
    }
    if (is_ident_start(c)) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && is_ident_char(text_[pos_])) advance();
      std::string word(text_.substr(start, pos_ - start));
      return {is_keyword(word) ? Tok::Keyword : Tok::Ident, word, line, column};
    }
    throw ParseError("unknown token '" + std::string(1, c) + "'", line, column);
  }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) advance();
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lexer_(text) { current_ = lexer_.next(); }

  Formula parse_all() {
    Formula f = parse_formula();
    if (current_.kind != Tok::End) fail("unexpected '" + current_.text + "' after formula");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, current_.line, current_.column);
  }

  Token take() {
    Token t = current_;
    current_ = lexer_.next();
    return t;
  }

  void expect(Tok kind, std::string_view what) {
    if (current_.kind != kind) {
      fail("expected " + std::string(what) +
           (current_.kind == Tok::End ? " but input ended" : ", found '" + current_.text + "'"));
    }
    take();
  }

  Formula parse_formula() {
    switch (current_.kind) {
      case Tok::Ident: return atom(take().text);
      case Tok::Tilde:
        take();
        return neg(parse_formula());
      case Tok::LParen: return parse_parenthesized();
      case Tok::Keyword: return parse_keyword();
      case Tok::End: fail("unexpected end of input");
      default: fail("unexpected '" + current_.text + "'");
    }
  }

  Formula parse_parenthesized() {
    expect(Tok::LParen, "'('");
    Formula left = parse_formula();
    std::optional<Op> op;
    if (current_.kind == Tok::Amp) op = Op::And;
    if (current_.kind == Tok::Bar) op = Op::Or;
    if (current_.kind == Tok::Arrow) op = Op::Imp;
    if (!op) {
      expect(Tok::RParen, "')' or a binary operator");
      return left;
    }
    take();
    Formula right = parse_formula();
    if (current_.kind == Tok::Amp || current_.kind == Tok::Bar || current_.kind == Tok::Arrow) {
      fail("binary operators require explicit parentheses");
    }
    expect(Tok::RParen, "')'");
    return make_formula(*op, {left, right});
  }

  Formula parse_keyword() {
    std::string word = take().text;
    if (word == "true") return top();
    if (word == "false") return bot();
    if (word == "dia") return dia(parse_formula());
    if (word == "box") return box(parse_formula());
    bool edge_family = word == "sab" || word == "sbox";
    bool existential = word == "sab" || word == "rem";
    if (current_.kind != Tok::LBrace) {
      Formula body = parse_formula();
      if (edge_family) return existential ? sab(body) : sab_box(body);
      return existential ? rem(body) : rem_box(body);
    }
    take();
    Formula first = parse_formula();
    if (edge_family) {
      expect(Tok::Bar, "'|' between edge guards");
      Formula second = parse_formula();
      expect(Tok::RBrace, "'}'");
      Formula body = parse_formula();
      return existential ? gsab(first, second, body) : gsab_box(first, second, body);
    }
    expect(Tok::RBrace, "'}'");
    Formula body = parse_formula();
    return existential ? grem(first, body) : grem_box(first, body);
  }

  Lexer lexer_;
  Token current_;
};

}  // namespace

Formula parse(std::string_view text) { return Parser(text).parse_all(); }

}  // namespace sabotage
