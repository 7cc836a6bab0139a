#ifndef TEMPOREPAIR_PARSE_HPP
#define TEMPOREPAIR_PARSE_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "temporepair/kb.hpp"

namespace temporepair {

/// Parse failure with 1-based source position. `code` separates plain syntax
/// errors from undeclared-symbol uses and from the dedicated check for
/// future-time operators on a GCI left-hand side.
class ParseError : public std::runtime_error {
 public:
  enum class Code : unsigned char { Syntax, UndeclaredSymbol, TemporalLhs };

  ParseError(Code code, std::size_t line, std::size_t column,
             const std::string& message);

  Code code() const { return code_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  Code code_;
  std::size_t line_;
  std::size_t column_;
};

/// Parses the line-based text format:
///
///   decl*  "tbox:"  gci*  "abox:"  assertion*
///
///   decl      = "concept" NAME ["rigid"]
///             | "role" NAME ["global"] ["functional"] ["inverse-functional"]
///             | "individual" NAME
///   gci       = concept "<=" concept
///   assertion = ["-"] NAME "(" NAME ["," NAME] ")" "@" NAT
///
/// Concepts use `!` `&` `|` `F` `G` `exists R` `R^-` `Top` `Bot` with unary
/// operators binding tighter than `&`, which binds tighter than `|`; both
/// binary operators are left-associative. `#` starts a comment. Concept and
/// role names must be declared before use; individuals are registered on
/// first use. Duplicate assertions are dropped with a warning.
TemporalKb parse_kb(std::string_view text);

}  // namespace temporepair

#endif  // TEMPOREPAIR_PARSE_HPP
