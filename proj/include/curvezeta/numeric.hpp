#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace curvezeta {

// Exact coefficient arithmetic. Rationals are kept reduced with positive
// denominator by cpp_rational itself.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// "p" or "p/q".
std::string rational_to_string(const Rational& r);

// Accepts optional sign, "p" or "p/q" with q > 0 after normalization.
Rational rational_from_string(const std::string& text);

// Exact integer n-th root: returns true and sets root iff root^n == a.
// Requires n >= 1; a may be negative only for odd n.
bool integer_nth_root(const Int& a, int n, Int& root);

// Exact rational n-th root (principal): num and den must both be exact
// n-th powers. Returns false if no such root exists in Q.
bool rational_nth_root(const Rational& a, int n, Rational& root);

} // namespace curvezeta
