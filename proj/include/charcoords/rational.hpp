#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <string>
#include <string_view>

namespace charcoords {

using Rational = mpq_class;
using Integer = mpz_class;

// Always "p/q", including q == 1.
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

// Accepts "p/q" or "p". Throws InputError.
Rational parse_rational(std::string_view text);

inline int sign(const Rational& r) { return sgn(r); }
inline Rational abs_value(const Rational& r) { return abs(r); }

double to_double(const Rational& r);

// Uniform p/q with 1 <= p, q <= bound.
Rational random_rational(std::mt19937_64& rng, std::uint64_t bound = 1u << 16);

} // namespace charcoords
