#pragma once

// Exact arithmetic primitives shared by every module. All decision paths use
// GMP rationals/integers; no floating point is involved anywhere.

#include <gmpxx.h>

#include <string>
#include <vector>

#include "monocone/error.hpp"

namespace monocone {

using Int = mpz_class;
using Rat = mpq_class;
using ZVec = std::vector<Int>;
using QVec = std::vector<Rat>;

// Parses "p" or "p/q" with integer p and positive integer q.
Rat parse_rational(const std::string& text);

// "p" when the denominator is 1, "p/q" otherwise.
std::string format_rational(const Rat& value);

Rat dot(const QVec& a, const QVec& b);
Int dot(const ZVec& a, const ZVec& b);

// Integer dot against a small {-1,0,1}/{0,1} coefficient pattern.
Int dot(const ZVec& a, const std::vector<signed char>& coeffs);
Rat dot(const QVec& a, const std::vector<signed char>& coeffs);

// Clears denominators and divides by the content. Direction is preserved:
// flipping the sign of a cone ray would move it out of the cone.
ZVec normalize_ray(const QVec& v);

// Divides by the gcd of the entries; zero vectors stay zero.
void reduce_by_gcd(ZVec& v);

bool is_zero(const ZVec& v);

// Strict lexicographic order on integer vectors of equal length.
bool lex_less(const ZVec& a, const ZVec& b);

QVec to_rational(const ZVec& v);

}  // namespace monocone
