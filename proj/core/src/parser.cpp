#include "sheffer/parser.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace sheffer {

std::string_view parse_error_name(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::EmptyInput: return "EmptyInput";
    case ParseErrorKind::UnknownToken: return "UnknownToken";
    case ParseErrorKind::UnbalancedParens: return "UnbalancedParens";
    case ParseErrorKind::AmbiguousChain: return "AmbiguousChain";
    case ParseErrorKind::UnexpectedToken: return "UnexpectedToken";
  }
  return "?";
}

ParseError::ParseError(ParseErrorKind kind, std::size_t position, const std::string& detail)
    : Error(std::string(parse_error_name(kind)) + " at offset " + std::to_string(position) +
            ": " + detail),
      kind_(kind),
      position_(position) {}

std::string_view op_symbol(Op op, Dialect dialect) {
  if (dialect == Dialect::Unicode) {
    switch (op) {
      case Op::Or: return "∨";
      case Op::And: return "∧";
      case Op::Imp: return "→";
      case Op::Iff: return "↔";
      case Op::Nor: return "↓";
      case Op::Nand: return "↑";
      case Op::Nimp: return "←";
      case Op::Xor: return "⊕";
      case Op::Updown: return "↕";
    }
  }
  switch (op) {
    case Op::Or: return "or";
    case Op::And: return "and";
    case Op::Imp: return "imp";
    case Op::Iff: return "iff";
    case Op::Nor: return "nor";
    case Op::Nand: return "nand";
    case Op::Nimp: return "nimp";
    case Op::Xor: return "xor";
    case Op::Updown: return "xiff";
  }
  return "?";
}

std::string_view not_symbol(Dialect dialect) {
  return dialect == Dialect::Unicode ? "¬" : "!";
}

namespace {

enum class Tok { Atom, Not, Bin, LParen, RParen, End };

struct Token {
  Tok kind;
  std::size_t pos;
  std::string text;
  Op op = Op::Or;
};

struct Glyph {
  std::string_view text;
  Tok kind;
  Op op;
};

// Longest match first: "<->" before "->".
constexpr Glyph kGlyphs[] = {
    {"¬", Tok::Not, Op::Or},      {"!", Tok::Not, Op::Or},
    {"∨", Tok::Bin, Op::Or},      {"∧", Tok::Bin, Op::And},
    {"→", Tok::Bin, Op::Imp},     {"↔", Tok::Bin, Op::Iff},
    {"↓", Tok::Bin, Op::Nor},     {"↑", Tok::Bin, Op::Nand},
    {"←", Tok::Bin, Op::Nimp},    {"⊕", Tok::Bin, Op::Xor},
    {"↕", Tok::Bin, Op::Updown},  {"<->", Tok::Bin, Op::Iff},
    {"->", Tok::Bin, Op::Imp},    {"(", Tok::LParen, Op::Or},
    {")", Tok::RParen, Op::Or},
};

constexpr std::pair<std::string_view, Op> kKeywords[] = {
    {"or", Op::Or},     {"and", Op::And},   {"imp", Op::Imp},
    {"iff", Op::Iff},   {"nor", Op::Nor},   {"nand", Op::Nand},
    {"nimp", Op::Nimp}, {"xor", Op::Xor},   {"xiff", Op::Updown},
};

bool is_alpha(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }
bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (is_space(text[i])) {
      ++i;
      continue;
    }
    if (is_alpha(text[i])) {
      std::size_t j = i;
      while (j < text.size() && (is_alpha(text[j]) || is_digit(text[j]))) ++j;
      std::string word(text.substr(i, j - i));
      Token tok{Tok::Atom, i, word};
      if (word == "not") {
        tok.kind = Tok::Not;
      } else {
        for (const auto& [kw, op] : kKeywords) {
          if (word == kw) {
            tok.kind = Tok::Bin;
            tok.op = op;
          }
        }
      }
      out.push_back(std::move(tok));
      i = j;
      continue;
    }
    bool matched = false;
    for (const Glyph& g : kGlyphs) {
      if (text.substr(i).starts_with(g.text)) {
        out.push_back(Token{g.kind, i, std::string(g.text), g.op});
        i += g.text.size();
        matched = true;
        break;
      }
    }
    if (!matched) {
      // Report one whole UTF-8 code point.
      std::size_t len = 1;
      auto lead = static_cast<unsigned char>(text[i]);
      if (lead >= 0xF0) len = 4;
      else if (lead >= 0xE0) len = 3;
      else if (lead >= 0xC0) len = 2;
      throw ParseError(ParseErrorKind::UnknownToken, i,
                       "unknown token '" + std::string(text.substr(i, len)) + "'");
    }
  }
  out.push_back(Token{Tok::End, text.size(), ""});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  Formula parse_top() {
    if (peek().kind == Tok::End) {
      throw ParseError(ParseErrorKind::EmptyInput, 0, "no formula");
    }
    check_balance();
    Formula f = parse_formula();
    if (peek().kind != Tok::End) unexpected(peek());
    return f;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }

  void check_balance() const {
    std::vector<std::size_t> open;
    for (const Token& t : tokens_) {
      if (t.kind == Tok::LParen) {
        open.push_back(t.pos);
      } else if (t.kind == Tok::RParen) {
        if (open.empty()) {
          throw ParseError(ParseErrorKind::UnbalancedParens, t.pos, "unmatched ')'");
        }
        open.pop_back();
      }
    }
    if (!open.empty()) {
      throw ParseError(ParseErrorKind::UnbalancedParens, open.back(), "unclosed '('");
    }
  }
  const Token& next() { return tokens_[pos_++]; }

  [[noreturn]] void unexpected(const Token& t) {
    if (t.kind == Tok::End) {
      throw ParseError(ParseErrorKind::UnexpectedToken, t.pos, "unexpected end of input");
    }
    throw ParseError(ParseErrorKind::UnexpectedToken, t.pos,
                     "unexpected token '" + t.text + "'");
  }

  // formula := operand [binop operand]
  Formula parse_formula() {
    Formula left = parse_operand();
    if (peek().kind != Tok::Bin) return left;
    Op op = next().op;
    Formula right = parse_operand();
    if (peek().kind == Tok::Bin) {
      throw ParseError(ParseErrorKind::AmbiguousChain, peek().pos,
                       "binary connectives do not associate; add parentheses before '" +
                           peek().text + "'");
    }
    return bin(op, std::move(left), std::move(right));
  }

  // operand := atom | not operand | '(' formula ')'
  Formula parse_operand() {
    const Token& t = next();
    switch (t.kind) {
      case Tok::Atom:
        return atom(t.text);
      case Tok::Not:
        return neg(parse_operand());
      case Tok::LParen: {
        Formula inner = parse_formula();
        if (peek().kind != Tok::RParen) unexpected(peek());
        next();
        return inner;
      }
      default:
        unexpected(t);
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

void render_into(const Formula& f, Dialect d, std::string& out) {
  switch (f.kind()) {
    case Formula::Kind::Atom:
      out += f.name();
      break;
    case Formula::Kind::Not:
      out += not_symbol(d);
      render_into(f.child(), d, out);
      break;
    case Formula::Kind::Binary:
      out += '(';
      render_into(f.left(), d, out);
      out += ' ';
      out += op_symbol(f.op(), d);
      out += ' ';
      render_into(f.right(), d, out);
      out += ')';
      break;
  }
}

}  // namespace

Formula parse(std::string_view text) { return Parser(tokenize(text)).parse_top(); }

std::string render(const Formula& f, Dialect dialect) {
  std::string out;
  out.reserve(f.size() * 4);
  render_into(f, dialect, out);
  return out;
}

}  // namespace sheffer
