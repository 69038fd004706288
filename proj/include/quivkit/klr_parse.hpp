#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "quivkit/klr.hpp"

namespace quivkit {

class ParseError : public std::invalid_argument {
 public:
  ParseError(std::size_t position, const std::string& what)
      : std::invalid_argument("parse error at position " + std::to_string(position) +
                              ": " + what),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Grammar (1-based indices, whitespace ignored):
//   expr   := ['-'] term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := INT | 'e(' INT (',' INT)* ')' | 'x' INT | 't' INT | '(' expr ')'
// An e(...) outside I^beta is reported as a beta mismatch.
KlrElement parse_klr_expression(const KlrAlgebra& algebra, std::string_view text);

}  // namespace quivkit
