#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "superlsa/ratfun.hpp"

namespace superlsa {

// Sparse multivariate polynomial over RatFun coefficients. Variables are
// dense small integer ids owned by the caller; exponents are positive.
// The term map keeps a canonical form: no zero coefficients, monomials
// sorted, so structural equality is semantic equality.
using Monomial = std::vector<std::pair<int, int>>;  // (variable, exponent), sorted

int monomial_degree(const Monomial& m);

class SolverPoly {
 public:
  SolverPoly() = default;

  static SolverPoly constant(const RatFun& c);
  static SolverPoly variable(int v);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  RatFun constant_term() const;
  const std::map<Monomial, RatFun>& terms() const { return terms_; }

  SolverPoly operator+(const SolverPoly& o) const;
  SolverPoly operator-(const SolverPoly& o) const;
  SolverPoly operator*(const SolverPoly& o) const;
  SolverPoly operator-() const;
  SolverPoly scaled(const RatFun& k) const;
  bool operator==(const SolverPoly& o) const { return compare(*this, o) == 0; }
  bool operator!=(const SolverPoly& o) const { return !(*this == o); }

  int total_degree() const;  // -1 for the zero polynomial
  int degree_in(int v) const;
  std::vector<int> variables() const;  // ascending, no duplicates
  bool has_variable(int v) const;

  // sum of terms where v appears exactly to the first power, with v removed;
  // together with drop_terms_with this splits p = coefficient_of(v)*v + rest
  // whenever degree_in(v) <= 1
  SolverPoly coefficient_of(int v) const;
  // terms with v-exponent exactly k, the factor v^k removed
  SolverPoly coefficient_of_power(int v, int k) const;
  SolverPoly drop_terms_with(int v) const;

  SolverPoly substituted(int v, const SolverPoly& value) const;
  RatFun evaluated(const std::vector<RatFun>& values) const;

  std::string to_string(const std::vector<std::string>& names) const;

  static int compare(const SolverPoly& x, const SolverPoly& y);

  // deterministic equation-selection order: total degree first, then
  // (optionally) term count, then monomial sequence, then coefficients
  static bool selection_less(const SolverPoly& x, const SolverPoly& y,
                             bool term_count_tiebreak);

  void add_term(Monomial m, const RatFun& c);

 private:
  std::map<Monomial, RatFun> terms_;
};

// exact quotient B / A when it exists (graded-lex division by the single
// divisor A); nullopt when the division leaves a remainder
std::optional<SolverPoly> exact_division(const SolverPoly& b, const SolverPoly& a);

// Decomposes p into a product of affine pieces: bare variables (monomial
// content), whole polynomials of total degree 1, and affine factors of
// univariate parts obtained from square roots of quadratic discriminants or
// perfect powers. Returns false when p has no such decomposition; out is
// only valid on success. Constant factors are dropped. Emitted factors are
// normalized so their selection-greatest monomial has coefficient 1.
bool affine_factorization(const SolverPoly& p, std::vector<SolverPoly>& out);

}  // namespace superlsa
