#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace tforge {

using Integer = mpz_class;

/// Exact fraction, always kept canonical (coprime, positive denominator,
/// zero stored as 0/1).
using Rational = mpq_class;

/// Parses "n" or "p/q" (optional leading sign). Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational &value);
std::string to_string(const Integer &value);

Integer lcm_of_denominators(const std::vector<Rational> &values);

} // namespace tforge
