#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "hilbtan/polynomial.hpp"

namespace hilbtan {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Grammar:
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := atom ['^' integer]
///   atom   := integer | name | '(' expr ')'
/// Division is only by nonzero constants. Juxtaposition ("2x") is rejected.
/// Positions in errors are 0-based byte offsets.
Polynomial parse_polynomial(std::string_view src, const RingPtr& ring);

}  // namespace hilbtan
