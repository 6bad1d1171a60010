#include "lambek/parser.hpp"

#include <cctype>

namespace lambek {

namespace {

enum class Tok {
  Ident,
  KwTop,
  KwBot,
  KwBox,
  KwDia,
  Number,  // digit run; "1" doubles as the unit constant
  Star,
  Backslash,
  Slash,
  Amp,
  Pipe,
  LParen,
  RParen,
  LBracket,
  RBracket,
  Turnstile,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  int line, col;
};

const char* tok_name(Tok t) {
  switch (t) {
    case Tok::Ident:
      return "identifier";
    case Tok::KwTop:
      return "'top'";
    case Tok::KwBot:
      return "'bot'";
    case Tok::KwBox:
      return "'box'";
    case Tok::KwDia:
      return "'dia'";
    case Tok::Number:
      return "number";
    case Tok::Star:
      return "'*'";
    case Tok::Backslash:
      return "'\\'";
    case Tok::Slash:
      return "'/'";
    case Tok::Amp:
      return "'&'";
    case Tok::Pipe:
      return "'|'";
    case Tok::LParen:
      return "'('";
    case Tok::RParen:
      return "')'";
    case Tok::LBracket:
      return "'['";
    case Tok::RBracket:
      return "']'";
    case Tok::Turnstile:
      return "'|-'";
    case Tok::End:
      return "end of input";
  }
  return "?";
}

std::vector<Token> lex(const std::string& text) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (text[i + k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    i += n;
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      advance(1);
      continue;
    }
    int tl = line, tc = col;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) ||
              text[j] == '_'))
        ++j;
      std::string word = text.substr(i, j - i);
      Tok k = Tok::Ident;
      if (word == "top")
        k = Tok::KwTop;
      else if (word == "bot")
        k = Tok::KwBot;
      else if (word == "box")
        k = Tok::KwBox;
      else if (word == "dia")
        k = Tok::KwDia;
      out.push_back({k, word, tl, tc});
      advance(j - i);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[j])))
        ++j;
      out.push_back({Tok::Number, text.substr(i, j - i), tl, tc});
      advance(j - i);
      continue;
    }
    Tok k;
    std::size_t n = 1;
    switch (c) {
      case '*':
        k = Tok::Star;
        break;
      case '\\':
        k = Tok::Backslash;
        break;
      case '/':
        k = Tok::Slash;
        break;
      case '&':
        k = Tok::Amp;
        break;
      case '|':
        if (i + 1 < text.size() && text[i + 1] == '-') {
          k = Tok::Turnstile;
          n = 2;
        } else {
          k = Tok::Pipe;
        }
        break;
      case '(':
        k = Tok::LParen;
        break;
      case ')':
        k = Tok::RParen;
        break;
      case '[':
        k = Tok::LBracket;
        break;
      case ']':
        k = Tok::RBracket;
        break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", tl,
                         tc, {});
    }
    out.push_back({k, text.substr(i, n), tl, tc});
    advance(n);
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

class Parser {
 public:
  explicit Parser(const std::string& text) : toks_(lex(text)) {}

  FormulaPtr formula() { return parse_or(); }

  Sequent sequent() {
    FormulaPtr l = parse_or();
    expect(Tok::Turnstile);
    FormulaPtr r = parse_or();
    return {l, r};
  }

  void finish() {
    if (peek().kind != Tok::End) err({"end of input"});
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  Token next() { return toks_[pos_++]; }
  bool accept(Tok k) {
    if (peek().kind == k) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(Tok k) {
    if (!accept(k)) err({tok_name(k)});
  }
  [[noreturn]] void err(std::vector<std::string> expected) const {
    const Token& t = peek();
    std::string msg = "syntax error at " + std::to_string(t.line) + ":" +
                      std::to_string(t.col) + ": unexpected " +
                      tok_name(t.kind);
    if (!expected.empty()) {
      msg += ", expected ";
      for (std::size_t i = 0; i < expected.size(); ++i) {
        if (i) msg += (i + 1 == expected.size()) ? " or " : ", ";
        msg += expected[i];
      }
    }
    throw ParseError(msg, t.line, t.col, std::move(expected));
  }

  FormulaPtr parse_or() {
    FormulaPtr f = parse_and();
    while (accept(Tok::Pipe)) f = disj(f, parse_and());
    return f;
  }

  FormulaPtr parse_and() {
    FormulaPtr f = parse_res();
    while (accept(Tok::Amp)) f = conj(f, parse_res());
    return f;
  }

  // Residuals share one non-associative level: chains need parentheses.
  FormulaPtr parse_res() {
    FormulaPtr f = parse_mul();
    if (peek().kind == Tok::Backslash || peek().kind == Tok::Slash) {
      bool isl = next().kind == Tok::Backslash;
      FormulaPtr g = parse_mul();
      if (peek().kind == Tok::Backslash || peek().kind == Tok::Slash)
        err({"'&'", "'|'", "')'", "'|-'", "end of input"});
      return isl ? ldiv(f, g) : rdiv(f, g);
    }
    return f;
  }

  FormulaPtr parse_mul() {
    FormulaPtr f = parse_unary();
    while (accept(Tok::Star)) f = mul(f, parse_unary());
    return f;
  }

  FormulaPtr parse_unary() {
    if (peek().kind == Tok::KwBox || peek().kind == Tok::KwDia) {
      bool isbox = next().kind == Tok::KwBox;
      std::string idx = kDefaultIndex;
      if (accept(Tok::LBracket)) {
        if (peek().kind == Tok::Ident || peek().kind == Tok::Number)
          idx = next().text;
        else
          err({"identifier", "number"});
        expect(Tok::RBracket);
      }
      FormulaPtr arg = parse_unary();
      return isbox ? box(arg, idx) : dia(arg, idx);
    }
    return parse_primary();
  }

  FormulaPtr parse_primary() {
    switch (peek().kind) {
      case Tok::Ident:
        return atom(next().text);
      case Tok::KwTop:
        next();
        return top();
      case Tok::KwBot:
        next();
        return bot();
      case Tok::Number: {
        if (peek().text == "1") {
          next();
          return unit();
        }
        err({"'1'"});
      }
      case Tok::LParen: {
        next();
        FormulaPtr f = parse_or();
        expect(Tok::RParen);
        return f;
      }
      default:
        err({"identifier", "'top'", "'bot'", "'1'", "'box'", "'dia'", "'('"});
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

FormulaPtr parse_formula(const std::string& text) {
  Parser p(text);
  FormulaPtr f = p.formula();
  p.finish();
  return f;
}

Sequent parse_sequent(const std::string& text) {
  Parser p(text);
  Sequent s = p.sequent();
  p.finish();
  return s;
}

}  // namespace lambek
