#pragma once

#include "superlsa/poly.hpp"

#include <optional>
#include <string>

namespace superlsa {

struct EvaluationPole : std::runtime_error {
  EvaluationPole() : std::runtime_error("evaluation at a pole") {}
};

// Reduced rational function in one formal parameter `a` over the rationals.
// Canonical form: gcd(num, den) = 1, den monic (leading coefficient folded
// into num), den nonzero. Plain rationals embed with den = 1.
class RatFun {
 public:
  RatFun() = default;  // zero
  RatFun(Rational q);  // NOLINT: implicit by design, rationals embed
  RatFun(int n) : RatFun(Rational(n)) {}
  RatFun(UnivariatePoly num, UnivariatePoly den);  // normalizes
  static RatFun parameter();  // the scalar `a`

  const UnivariatePoly& num() const { return num_; }
  const UnivariatePoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  bool is_rational() const;          // den == 1 and deg(num) <= 0
  Rational to_rational() const;      // requires is_rational()

  RatFun operator+(const RatFun& o) const;
  RatFun operator-(const RatFun& o) const;
  RatFun operator*(const RatFun& o) const;
  RatFun operator/(const RatFun& o) const;  // DivisionByZero on zero divisor
  RatFun operator-() const;
  RatFun inverse() const;
  bool operator==(const RatFun& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RatFun& o) const { return !(*this == o); }

  Rational eval(const Rational& q) const;  // EvaluationPole if den(q) == 0
  bool kth_root(unsigned k, RatFun& out) const;

  // total order usable as a map key; no arithmetic meaning
  static int compare(const RatFun& x, const RatFun& y);

 private:
  void normalize();
  UnivariatePoly num_;
  UnivariatePoly den_ = UnivariatePoly(Rational(1));
};

// Text syntax used in JSON files and CLI args: integer `p`, fraction `p/q`,
// or polynomial fraction in `a` like `(a^2-1)/(2)`. Whitespace-insensitive.
// Any free symbol other than `a` is rejected.
RatFun parse_scalar(const std::string& text);
std::string scalar_to_string(const RatFun& f);

}  // namespace superlsa
