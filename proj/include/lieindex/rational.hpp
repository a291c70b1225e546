#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace lieindex {

// Exact rationals. mpq_class keeps values canonical (reduced, positive
// denominator) after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;
using Vec = std::vector<Rational>;

// Parses "p", "-p" or "p/q". Throws Error(Parse) on malformed input or q == 0.
Rational parse_rational(std::string_view text);

// "p" when the denominator is 1, "p/q" otherwise.
std::string to_string(const Rational& r);

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

bool is_zero(const Vec& v);

Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);

Vec& axpy(Vec& y, const Rational& a, const Vec& x);  // y += a x
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Rational& s, const Vec& v);
Rational dot(const Vec& a, const Vec& b);

}  // namespace lieindex
