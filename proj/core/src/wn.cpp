#include "superlsa/wn.hpp"

#include <algorithm>
#include <bit>

namespace superlsa {

int GrassmannElement::homogeneous_parity() const {
  int p = -1;
  for (const auto& [mask, c] : terms) {
    (void)c;
    int q = std::popcount(mask) % 2;
    if (p < 0) p = q;
    else if (p != q) return -1;
  }
  return p;
}

GrassmannElement grassmann_zero(int n) { return GrassmannElement{n, {}}; }

GrassmannElement grassmann_monomial(int n, std::uint32_t mask, RatFun coeff) {
  GrassmannElement out{n, {}};
  if (!coeff.is_zero()) out.terms[mask] = std::move(coeff);
  return out;
}

GrassmannElement grassmann_add(const GrassmannElement& u, const GrassmannElement& v) {
  if (u.n != v.n) throw GeneratorCountMismatch();
  GrassmannElement out = u;
  for (const auto& [mask, c] : v.terms) {
    auto it = out.terms.find(mask);
    if (it == out.terms.end()) {
      out.terms[mask] = c;
    } else {
      it->second = it->second + c;
      if (it->second.is_zero()) out.terms.erase(it);
    }
  }
  return out;
}

namespace {

// pairs (s,t), s in S, t in T, s > t: transpositions sorting S then T
int inversions(std::uint32_t s, std::uint32_t t) {
  int inv = 0;
  while (s) {
    std::uint32_t low = s & -s;
    inv += std::popcount(t & (low - 1));
    s ^= low;
  }
  return inv;
}

void add_term(GrassmannElement& acc, std::uint32_t mask, const RatFun& c) {
  if (c.is_zero()) return;
  auto it = acc.terms.find(mask);
  if (it == acc.terms.end()) {
    acc.terms[mask] = c;
  } else {
    it->second = it->second + c;
    if (it->second.is_zero()) acc.terms.erase(it);
  }
}

}  // namespace

GrassmannElement grassmann_mul(const GrassmannElement& u, const GrassmannElement& v) {
  if (u.n != v.n) throw GeneratorCountMismatch();
  GrassmannElement out{u.n, {}};
  for (const auto& [s, cu] : u.terms)
    for (const auto& [t, cv] : v.terms) {
      if (s & t) continue;
      RatFun c = cu * cv;
      if (inversions(s, t) % 2) c = -c;
      add_term(out, s | t, c);
    }
  return out;
}

GrassmannElement partial_derivative(int i, const GrassmannElement& u) {
  if (i < 1 || i > u.n) throw IndexOutOfRange();
  std::uint32_t bit = 1u << (i - 1);
  GrassmannElement out{u.n, {}};
  for (const auto& [s, c] : u.terms) {
    if (!(s & bit)) continue;
    RatFun signed_c = (std::popcount(s & (bit - 1)) % 2) ? -c : c;
    add_term(out, s ^ bit, signed_c);
  }
  return out;
}

WnDerivation wn_zero(int n) {
  WnDerivation d;
  d.n = n;
  d.components.assign(n, grassmann_zero(n));
  return d;
}

WnDerivation circle_product(const WnDerivation& d1, const WnDerivation& d2) {
  if (d1.n != d2.n) throw GeneratorCountMismatch();
  WnDerivation out = wn_zero(d1.n);
  for (int j = 0; j < d1.n; ++j) {
    GrassmannElement acc = grassmann_zero(d1.n);
    for (int i = 1; i <= d1.n; ++i)
      acc = grassmann_add(acc, grassmann_mul(d1.components[i - 1],
                                             partial_derivative(i, d2.components[j])));
    out.components[j] = std::move(acc);
  }
  return out;
}

GrassmannElement apply_derivation(const WnDerivation& d, const GrassmannElement& u) {
  if (d.n != u.n) throw GeneratorCountMismatch();
  GrassmannElement acc = grassmann_zero(d.n);
  for (int i = 1; i <= d.n; ++i)
    acc = grassmann_add(acc, grassmann_mul(d.components[i - 1], partial_derivative(i, u)));
  return acc;
}

std::vector<std::pair<std::uint32_t, int>> wn_basis(int n) {
  std::vector<std::uint32_t> subsets;
  for (std::uint32_t m = 0; m < (1u << n); ++m) subsets.push_back(m);
  std::sort(subsets.begin(), subsets.end(), [](std::uint32_t a, std::uint32_t b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    if (pa != pb) return pa < pb;
    // lexicographic on the increasing index sequences
    while (a && b) {
      std::uint32_t la = a & -a, lb = b & -b;
      if (la != lb) return la < lb;
      a ^= la;
      b ^= lb;
    }
    return a < b;
  });
  std::vector<std::pair<std::uint32_t, int>> basis;
  for (std::uint32_t s : subsets)
    for (int i = 1; i <= n; ++i) basis.push_back({s, i});
  return basis;
}

std::string wn_basis_name(std::uint32_t mask, int i) {
  std::string s = "xi";
  for (int b = 0; b < 32; ++b)
    if (mask & (1u << b)) s += std::to_string(b + 1);
  return s + "d" + std::to_string(i);
}

SuperAlgebra build_wn(int n) {
  if (n < 1) throw std::invalid_argument("generator count must be positive");
  auto basis = wn_basis(n);
  int dim = static_cast<int>(basis.size());
  std::vector<int> parity;
  std::vector<std::string> names;
  for (const auto& [mask, i] : basis) {
    parity.push_back((std::popcount(mask) + 1) % 2);
    names.push_back(wn_basis_name(mask, i));
  }
  std::map<std::pair<std::uint32_t, int>, int> index;
  for (int t = 0; t < dim; ++t) index[basis[t]] = t;
  SuperAlgebra A(std::move(parity), std::move(names));
  for (int a = 0; a < dim; ++a) {
    auto [s, i] = basis[a];
    for (int b = 0; b < dim; ++b) {
      auto [t, j] = basis[b];
      // (xi_S d_i) o (xi_T d_j) = (xi_S . d_i(xi_T)) d_j
      std::uint32_t bit = 1u << (i - 1);
      if (!(t & bit)) continue;
      std::uint32_t rest = t ^ bit;
      if (s & rest) continue;
      int sign = std::popcount(t & (bit - 1)) + inversions(s, rest);
      A.add_constant(a, b, index.at({s | rest, j}), RatFun(sign % 2 ? -1 : 1));
    }
  }
  return A;
}

}  // namespace superlsa
