#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>

#include "superlsa/superalgebra.hpp"

namespace superlsa {

struct GeneratorCountMismatch : std::logic_error {
  GeneratorCountMismatch() : std::logic_error("grassmann elements over different generator counts") {}
};

// element of the exterior algebra on n odd generators; keys are index subsets
// of {1..n} as bitmasks, values nonzero
struct GrassmannElement {
  int n = 0;
  std::map<std::uint32_t, RatFun> terms;

  bool is_zero() const { return terms.empty(); }
  // -1 if mixed, else |S| mod 2 over the support
  int homogeneous_parity() const;
};

GrassmannElement grassmann_zero(int n);
GrassmannElement grassmann_monomial(int n, std::uint32_t mask, RatFun coeff = RatFun(1));
GrassmannElement grassmann_add(const GrassmannElement& u, const GrassmannElement& v);

// basis rule: S.T = 0 when the subsets meet, else sign by inversion count
GrassmannElement grassmann_mul(const GrassmannElement& u, const GrassmannElement& v);

// odd left derivative: kills monomials without generator i, else removes it
// with the sign of its position
GrassmannElement partial_derivative(int i, const GrassmannElement& u);

// derivation sum_i u_i d/dxi_i
struct WnDerivation {
  int n = 0;
  std::vector<GrassmannElement> components;
};

WnDerivation wn_zero(int n);
// component j of the result is sum_i u_i . d_i(v_j)
WnDerivation circle_product(const WnDerivation& d1, const WnDerivation& d2);

GrassmannElement apply_derivation(const WnDerivation& d, const GrassmannElement& u);

// basis {xi_S d_i} ordered by subsets in graded-lexicographic order then the
// derivative index; parity (|S|+1) mod 2; names like xi13d2
SuperAlgebra build_wn(int n);

// basis enumeration shared by build_wn and its callers
std::vector<std::pair<std::uint32_t, int>> wn_basis(int n);
std::string wn_basis_name(std::uint32_t mask, int i);

}  // namespace superlsa
