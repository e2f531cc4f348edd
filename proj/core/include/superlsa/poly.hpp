#pragma once

#include "superlsa/rational.hpp"

#include <vector>

namespace superlsa {

// Dense univariate polynomial over Rational, coefficient of x^i at coeffs[i].
// Invariant: trailing zero coefficients trimmed; the zero polynomial has an
// empty coefficient vector and degree -1.
class UnivariatePoly {
 public:
  UnivariatePoly() = default;
  explicit UnivariatePoly(Rational c);
  explicit UnivariatePoly(std::vector<Rational> cs);
  static UnivariatePoly variable();  // the monomial x

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const Rational& leading() const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(std::size_t i) const;

  UnivariatePoly operator+(const UnivariatePoly& o) const;
  UnivariatePoly operator-(const UnivariatePoly& o) const;
  UnivariatePoly operator*(const UnivariatePoly& o) const;
  UnivariatePoly operator-() const;
  bool operator==(const UnivariatePoly& o) const { return coeffs_ == o.coeffs_; }

  UnivariatePoly scaled(const Rational& c) const;
  // Euclidean division; denominator-free only in the sense of exact Rational
  // arithmetic. divisor must be nonzero.
  static void divmod(const UnivariatePoly& a, const UnivariatePoly& b,
                     UnivariatePoly& q, UnivariatePoly& r);
  static UnivariatePoly gcd(UnivariatePoly a, UnivariatePoly b);  // monic result

  UnivariatePoly monic() const;
  Rational eval(const Rational& x) const;
  UnivariatePoly derivative() const;

  // exact k-th root (monic-compatible); false if none exists
  static bool kth_root(const UnivariatePoly& p, unsigned k, UnivariatePoly& out);

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

}  // namespace superlsa
