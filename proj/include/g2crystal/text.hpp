#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "g2crystal/highest_weight.hpp"
#include "g2crystal/monomial.hpp"
#include "g2crystal/tableau.hpp"

namespace g2 {

// Syntax error with the 0-based offset of the offending character.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string message, std::size_t position)
      : std::runtime_error(std::move(message)), pos(position) {}
  std::size_t pos;
};

// `a,b` (values on h1, h2).
Weight parse_weight(std::string_view s);

// Whitespace-separated factors `Y<i>(<m>)` with optional `^<e>`; repeated
// variables collapse by adding exponents; `1` is the constant monomial.
Monomial parse_monomial(std::string_view s);

// Rows separated by `/`, entries comma-separated; barred letters carry a
// leading minus (3bar is -3). Validates marginal largeness.
MLTableau parse_tableau(std::string_view s);

// `<tableau>#<a,b>`.
TensorElement parse_tensor(std::string_view s);

std::string to_string(Weight w);
std::string to_string(Box b);
std::string to_string(const Monomial& n);   // factors sorted by (i, m)
std::string to_string(const MLTableau& t);  // rows verbatim
std::string to_string(const TensorElement& x);

}  // namespace g2
