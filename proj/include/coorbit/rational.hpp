#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <vector>

namespace coorbit {

/// Exact rational scalar. Always in lowest terms with positive denominator.
using Rat = boost::multiprecision::cpp_rational;
using Int = boost::multiprecision::cpp_int;

/// Dense coordinate vector over Q.
using Vec = std::vector<Rat>;

/// Parses "p/q" or "p" (signs allowed on either part). Rejects q = 0 and
/// anything that is not an integer or a ratio of integers.
Rat parse_rational(const std::string& text);

/// Canonical form: "p/q" in lowest terms, "p" when the denominator is 1.
std::string rat_to_string(const Rat& r);

Vec zero_vec(int n);
bool is_zero(const Vec& v);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Rat& c, const Vec& v);
Rat dot(const Vec& a, const Vec& b);
std::string vec_to_string(const Vec& v);

}  // namespace coorbit
