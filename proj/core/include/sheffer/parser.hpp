#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "sheffer/error.hpp"
#include "sheffer/formula.hpp"

namespace sheffer {

enum class Dialect { Unicode, Ascii };

enum class ParseErrorKind {
  EmptyInput,
  UnknownToken,
  UnbalancedParens,
  AmbiguousChain,
  UnexpectedToken,
};

std::string_view parse_error_name(ParseErrorKind kind);

class ParseError : public Error {
 public:
  ParseError(ParseErrorKind kind, std::size_t position, const std::string& detail);
  ParseErrorKind kind() const { return kind_; }
  /// Byte offset into the input.
  std::size_t position() const { return position_; }

 private:
  ParseErrorKind kind_;
  std::size_t position_;
};

/// Parses fully parenthesized formulas in either dialect (the token sets do
/// not overlap, so both may be mixed in one string). Binary connectives have
/// no precedence and no associativity; `a op b op c` is an AmbiguousChain.
Formula parse(std::string_view text);

/// Canonical, fully parenthesized text. parse(render(f, d)) == f.
std::string render(const Formula& f, Dialect dialect = Dialect::Ascii);

std::string_view op_symbol(Op op, Dialect dialect);
std::string_view not_symbol(Dialect dialect);

}  // namespace sheffer
