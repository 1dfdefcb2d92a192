#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace gaugework::expr {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// "n" or "n/d" in lowest terms.
std::string to_string(const BigRational& value);

/// Parses "n" or "n/d" (optional leading '-'). Throws std::invalid_argument.
BigRational parse_rational(std::string_view text);

inline BigRational abs(const BigRational& value) { return value < 0 ? BigRational(-value) : value; }

}  // namespace gaugework::expr
