// exact.hpp: arbitrary-precision integers and rationals (GMP) plus their
// canonical JSON forms. Big integers are emitted as decimal strings so that
// parse/re-emit round-trips are byte-identical; rationals as {num, den}.
#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "json.hpp"

namespace gl2 {

using Json = nlohmann::ordered_json;
using BigInt = mpz_class;
using Rational = mpq_class;

// 1 / d in lowest terms.
Rational unit_fraction(uint64_t d);

Json big_json(const BigInt& z);

// {num, den}; throws std::logic_error if either leg exceeds int64.
Json rat_json(const Rational& q);

// Accepts a decimal integer or "base^exp" with decimal base and exponent,
// e.g. "10^96" or "247^12". Throws std::invalid_argument on anything else.
BigInt parse_big_expr(const std::string& s);

BigInt big_from_string(const std::string& s);

// Natural logarithm of a positive big integer.
double log_big(const BigInt& z);

// Canonical dump used by the CLI: 2-space indent plus trailing newline.
std::string dump_json(const Json& j);

} // namespace gl2
