#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace superlsa {

using Integer = boost::multiprecision::cpp_int;

// Exact rational scalar. boost::multiprecision::cpp_rational already keeps
// gcd-reduced form with positive denominator, which is exactly the canonical
// form we need for equality tests.
using Rational = boost::multiprecision::cpp_rational;

struct DivisionByZero : std::runtime_error {
  DivisionByZero() : std::runtime_error("division by zero") {}
};

inline Integer rat_num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer rat_den(const Rational& q) { return boost::multiprecision::denominator(q); }

// |q| for pivot-free exact code paths that still want a size heuristic
inline Rational rat_abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

// integer k-th root when exact, used by perfect-power factor recovery
bool integer_kth_root(const Integer& x, unsigned k, Integer& out);
bool rational_kth_root(const Rational& q, unsigned k, Rational& out);

std::string rational_to_string(const Rational& q);

}  // namespace superlsa
