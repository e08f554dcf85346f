#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "phinewton/polyring.hpp"

namespace phinewton {

/// Malformed polynomial expression; column is 1-based in the original text.
class ParseError : public Error {
   public:
    ParseError(const std::string& msg, std::size_t column)
        : Error("column " + std::to_string(column) + ": " + msg), column_(column) {}
    std::size_t column() const noexcept { return column_; }

   private:
    std::size_t column_;
};

/// Parses a polynomial in x with unbounded integer coefficients:
///
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor ('*'? factor)*
///   factor := base ('^' uint)?
///   base   := int | 'x' | '(' expr ')'
///
/// Whitespace is ignored everywhere.
IntPoly parse_poly(std::string_view src);

}  // namespace phinewton
