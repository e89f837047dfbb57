#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "resint/polynomial.hpp"

namespace resint {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses `2*x1^2 - x1*x2 + 3`. Multiplication must be explicit.
Polynomial parse_poly(std::string_view text, const RingPtr& ring);

/// Parses `[[x, y, 0], [0, x, y]]` into rows of polynomials.
std::vector<std::vector<Polynomial>> parse_matrix(std::string_view text, const RingPtr& ring);

/// Parses a comma-separated list `f1, f2, ...` (optionally wrapped in brackets).
std::vector<Polynomial> parse_poly_list(std::string_view text, const RingPtr& ring);

}  // namespace resint
