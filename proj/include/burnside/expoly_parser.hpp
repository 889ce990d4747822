#pragma once

#include "burnside/expoly.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace burnside {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position);
  /// Zero-based character offset into the parsed text.
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Parses the grammar in docs/expoly_grammar.md into an exact ExpPoly.
ExpPoly parse_expoly(std::string_view text);

}  // namespace burnside
