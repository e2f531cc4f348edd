#include "superlsa/superalgebra.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>

#include "superlsa/linalg.hpp"

namespace superlsa {

SuperAlgebra::SuperAlgebra(std::vector<int> parity, std::vector<std::string> names)
    : parity_(std::move(parity)), names_(std::move(names)) {
  if (parity_.empty()) throw std::invalid_argument("algebra needs a positive dimension");
  if (names_.size() != parity_.size()) throw DimensionMismatch();
  for (int p : parity_)
    if (p != 0 && p != 1) throw std::invalid_argument("parity entries must be 0 or 1");
}

int SuperAlgebra::parity(int i) const {
  if (i < 0 || i >= dim()) throw IndexOutOfRange();
  return parity_[i];
}

const std::string& SuperAlgebra::name(int i) const {
  if (i < 0 || i >= dim()) throw IndexOutOfRange();
  return names_[i];
}

void SuperAlgebra::add_constant(int i, int j, int k, const RatFun& c) {
  if (i < 0 || i >= dim() || j < 0 || j >= dim() || k < 0 || k >= dim())
    throw IndexOutOfRange();
  if (c.is_zero()) return;
  auto& terms = constants_[{i, j}];
  auto it = std::lower_bound(terms.begin(), terms.end(), k,
                             [](const Term& t, int key) { return t.first < key; });
  if (it != terms.end() && it->first == k) {
    it->second = it->second + c;
    if (it->second.is_zero()) terms.erase(it);
  } else {
    terms.insert(it, {k, c});
  }
  if (terms.empty()) constants_.erase({i, j});
}

const std::vector<SuperAlgebra::Term>& SuperAlgebra::product(int i, int j) const {
  static const std::vector<Term> empty;
  if (i < 0 || i >= dim() || j < 0 || j >= dim()) throw IndexOutOfRange();
  auto it = constants_.find({i, j});
  return it == constants_.end() ? empty : it->second;
}

bool SuperAlgebra::grading_consistent() const {
  for (const auto& [ij, terms] : constants_) {
    int p = (parity_[ij.first] + parity_[ij.second]) % 2;
    for (const auto& [k, c] : terms) {
      (void)c;
      if (parity_[k] != p) return false;
    }
  }
  return true;
}

bool Element::is_zero() const {
  for (const auto& c : coords)
    if (!c.is_zero()) return false;
  return true;
}

int Element::homogeneous_parity() const {
  int p = -1;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i].is_zero()) continue;
    int q = alg->parity(static_cast<int>(i));
    if (p < 0) p = q;
    else if (p != q) return -1;
  }
  return p;
}

Element make_element(const SuperAlgebra& A, std::vector<RatFun> coords) {
  if (static_cast<int>(coords.size()) != A.dim()) throw DimensionMismatch();
  return Element{&A, std::move(coords)};
}

Element basis_element(const SuperAlgebra& A, int i) {
  if (i < 0 || i >= A.dim()) throw IndexOutOfRange();
  std::vector<RatFun> c(A.dim(), RatFun(0));
  c[i] = RatFun(1);
  return Element{&A, std::move(c)};
}

Element multiply(const SuperAlgebra& A, const Element& u, const Element& v) {
  if (u.alg != &A || v.alg != &A) throw AlgebraMismatch();
  std::vector<RatFun> out(A.dim(), RatFun(0));
  for (int i = 0; i < A.dim(); ++i) {
    if (u.coords[i].is_zero()) continue;
    for (int j = 0; j < A.dim(); ++j) {
      if (v.coords[j].is_zero()) continue;
      RatFun f = u.coords[i] * v.coords[j];
      for (const auto& [k, c] : A.product(i, j)) out[k] = out[k] + f * c;
    }
  }
  return Element{&A, std::move(out)};
}

Element associator(const SuperAlgebra& A, const Element& u, const Element& v, const Element& w) {
  Element uv_w = multiply(A, multiply(A, u, v), w);
  Element u_vw = multiply(A, u, multiply(A, v, w));
  for (int k = 0; k < A.dim(); ++k) uv_w.coords[k] = uv_w.coords[k] - u_vw.coords[k];
  return uv_w;
}

int worker_count() {
  if (const char* env = std::getenv("SUPERLSA_THREADS")) {
    int n = std::atoi(env);
    if (n >= 1) return n;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

namespace {

using Term = SuperAlgebra::Term;

// sparse coefficient lists sorted by index
void axpy(std::vector<Term>& acc, const RatFun& f, const std::vector<Term>& src) {
  if (f.is_zero() || src.empty()) return;
  std::vector<Term> merged;
  merged.reserve(acc.size() + src.size());
  std::size_t a = 0, b = 0;
  while (a < acc.size() || b < src.size()) {
    if (b == src.size() || (a < acc.size() && acc[a].first < src[b].first)) {
      merged.push_back(acc[a++]);
    } else if (a == acc.size() || src[b].first < acc[a].first) {
      merged.push_back({src[b].first, f * src[b].second});
      ++b;
    } else {
      RatFun s = acc[a].second + f * src[b].second;
      if (!s.is_zero()) merged.push_back({acc[a].first, std::move(s)});
      ++a;
      ++b;
    }
  }
  acc = std::move(merged);
}

// (x_i x_j) x_k - x_i (x_j x_k)
std::vector<Term> basis_associator(const SuperAlgebra& A, int i, int j, int k) {
  std::vector<Term> out;
  for (const auto& [m, c] : A.product(i, j)) axpy(out, c, A.product(m, k));
  for (const auto& [m, c] : A.product(j, k)) axpy(out, -c, A.product(i, m));
  return out;
}

std::vector<RatFun> densify(const SuperAlgebra& A, const std::vector<Term>& sparse) {
  std::vector<RatFun> out(A.dim(), RatFun(0));
  for (const auto& [k, c] : sparse) out[k] = c;
  return out;
}

// runs body(i) -> vector<Violation> over i in [0,dim), merging results in
// index order so violation order is lexicographic regardless of thread count
template <typename Body>
CheckReport parallel_check(int dim, Body body) {
  int workers = std::min(worker_count(), dim);
  std::vector<std::vector<Violation>> results(dim);
  if (workers <= 1) {
    for (int i = 0; i < dim; ++i) results[i] = body(i);
  } else {
    std::vector<std::thread> pool;
    std::atomic<int> next{0};
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&]() {
        for (;;) {
          int i = next.fetch_add(1);
          if (i >= dim) return;
          results[i] = body(i);
        }
      });
    for (auto& t : pool) t.join();
  }
  CheckReport report;
  for (auto& part : results)
    for (auto& v : part) report.violations.push_back(std::move(v));
  report.verdict = report.violations.empty();
  return report;
}

}  // namespace

CheckReport check_left_symmetric(const SuperAlgebra& A) {
  int n = A.dim();
  return parallel_check(n, [&](int i) {
    std::vector<Violation> out;
    for (int j = 0; j < n; ++j) {
      bool minus = A.parity(i) && A.parity(j);
      for (int k = 0; k < n; ++k) {
        std::vector<Term> r = basis_associator(A, i, j, k);
        axpy(r, minus ? RatFun(1) : RatFun(-1), basis_associator(A, j, i, k));
        if (!r.empty())
          out.push_back({"left_symmetry", {i, j, k}, densify(A, r)});
      }
    }
    return out;
  });
}

CheckReport check_novikov(const SuperAlgebra& A) {
  int n = A.dim();
  return parallel_check(n, [&](int i) {
    // identity on the triple (z,x,y) = (x_i, x_j, x_k)
    std::vector<Violation> out;
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        bool minus = A.parity(j) && A.parity(k);
        std::vector<Term> r;
        for (const auto& [m, c] : A.product(i, j)) axpy(r, c, A.product(m, k));
        RatFun sgn = minus ? RatFun(1) : RatFun(-1);
        for (const auto& [m, c] : A.product(i, k)) axpy(r, sgn * c, A.product(m, j));
        if (!r.empty())
          out.push_back({"novikov", {i, j, k}, densify(A, r)});
      }
    return out;
  });
}

SuperAlgebra sub_adjacent(const SuperAlgebra& A) {
  SuperAlgebra L(A.parities(), A.names());
  for (const auto& [ij, terms] : A.constants()) {
    auto [i, j] = ij;
    RatFun sgn = (A.parity(i) && A.parity(j)) ? RatFun(1) : RatFun(-1);
    for (const auto& [k, c] : terms) {
      L.add_constant(i, j, k, c);
      L.add_constant(j, i, k, sgn * c);
    }
  }
  return L;
}

CheckReport check_super_jacobi(const SuperAlgebra& L) {
  int n = L.dim();
  return parallel_check(n, [&](int i) {
    std::vector<Violation> out;
    for (int j = 0; j < n; ++j) {
      RatFun sgn_ij = (L.parity(i) && L.parity(j)) ? RatFun(-1) : RatFun(1);
      {
        // [x_i,x_j] + (-1)^{|i||j|}[x_j,x_i]
        std::vector<Term> r(L.product(i, j));
        axpy(r, sgn_ij, L.product(j, i));
        if (!r.empty())
          out.push_back({"super_anticommutativity", {i, j, -1}, densify(L, r)});
      }
      for (int k = 0; k < n; ++k) {
        // [x_i,[x_j,x_k]] - [[x_i,x_j],x_k] - (-1)^{|i||j|}[x_j,[x_i,x_k]]
        std::vector<Term> r;
        for (const auto& [m, c] : L.product(j, k)) axpy(r, c, L.product(i, m));
        for (const auto& [m, c] : L.product(i, j)) axpy(r, -c, L.product(m, k));
        for (const auto& [m, c] : L.product(i, k)) axpy(r, -sgn_ij * c, L.product(j, m));
        if (!r.empty())
          out.push_back({"super_jacobi", {i, j, k}, densify(L, r)});
      }
    }
    return out;
  });
}

CheckReport check_compatible(const SuperAlgebra& A, const SuperAlgebra& L) {
  if (A.dim() != L.dim() || A.parities() != L.parities()) throw DimensionMismatch();
  CheckReport report = check_left_symmetric(A);
  SuperAlgebra S = sub_adjacent(A);
  int n = A.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<Term> r(S.product(i, j));
      axpy(r, RatFun(-1), L.product(i, j));
      if (!r.empty())
        report.violations.push_back({"sub_adjacent_equals_bracket", {i, j, -1}, densify(A, r)});
    }
  report.verdict = report.violations.empty();
  return report;
}

Mat left_mult_operator(const SuperAlgebra& A, int i) {
  if (i < 0 || i >= A.dim()) throw IndexOutOfRange();
  int n = A.dim();
  Mat m(n, std::vector<RatFun>(n, RatFun(0)));
  for (int j = 0; j < n; ++j)
    for (const auto& [k, c] : A.product(i, j)) m[k][j] = c;
  return m;
}

CheckReport check_representation(const SuperAlgebra& L, const std::vector<Mat>& ops) {
  int n = L.dim();
  if (static_cast<int>(ops.size()) != n) throw DimensionMismatch();
  std::size_t d = ops.empty() ? 0 : ops[0].size();
  for (const auto& m : ops)
    if (m.size() != d) throw DimensionMismatch();
  return parallel_check(n, [&](int i) {
    std::vector<Violation> out;
    for (int j = 0; j < n; ++j) {
      Mat lhs = mat_mul(ops[i], ops[j]);
      Mat rhs = mat_mul(ops[j], ops[i]);
      RatFun sgn = (L.parity(i) && L.parity(j)) ? RatFun(1) : RatFun(-1);
      Mat defect = mat_add(lhs, mat_scale(rhs, sgn));
      for (const auto& [k, c] : L.product(i, j))
        defect = mat_sub(defect, mat_scale(ops[k], c));
      if (!mat_is_zero(defect)) {
        std::vector<RatFun> col;
        for (std::size_t cidx = 0; cidx < d && col.empty(); ++cidx) {
          for (std::size_t r = 0; r < d; ++r)
            if (!defect[r][cidx].is_zero()) {
              col.resize(d, RatFun(0));
              for (std::size_t rr = 0; rr < d; ++rr) col[rr] = defect[rr][cidx];
              break;
            }
        }
        out.push_back({"representation", {i, j, -1}, std::move(col)});
      }
    }
    return out;
  });
}

std::vector<Element> find_right_identities(const SuperAlgebra& A) {
  int n = A.dim();
  // rows indexed by (i,k): sum_j c_{ij}^k e_j = delta_{ik}
  Mat m;
  std::vector<RatFun> b;
  for (int i = 0; i < n; ++i) {
    std::vector<std::vector<RatFun>> rows(n);
    std::vector<bool> live(n, false);
    for (int j = 0; j < n; ++j)
      for (const auto& [k, c] : A.product(i, j)) {
        if (!live[k]) {
          rows[k].assign(n, RatFun(0));
          live[k] = true;
        }
        rows[k][j] = rows[k][j] + c;
      }
    for (int k = 0; k < n; ++k) {
      bool rhs = (k == i);
      if (!live[k] && !rhs) continue;
      if (!live[k]) rows[k].assign(n, RatFun(0));
      m.push_back(std::move(rows[k]));
      b.push_back(rhs ? RatFun(1) : RatFun(0));
    }
  }
  AffineSolution sol = solve_affine(std::move(m), std::move(b));
  std::vector<Element> out;
  if (!sol.consistent) return out;
  out.push_back(make_element(A, std::move(sol.particular)));
  for (auto& v : sol.kernel) out.push_back(make_element(A, std::move(v)));
  return out;
}

bool unique_even_right_identity(const SuperAlgebra& A, Element& out) {
  std::vector<Element> sols = find_right_identities(A);
  if (sols.empty()) return false;
  // the even slice is a single point iff no kernel direction has an even
  // component outside the span of the others; with homogeneous solutions it
  // suffices that every kernel vector is purely odd
  const Element& part = sols[0];
  for (std::size_t s = 1; s < sols.size(); ++s) {
    for (int i = 0; i < A.dim(); ++i)
      if (!sols[s].coords[i].is_zero() && A.parity(i) == 0) return false;
  }
  // project the particular solution onto the even part only if the odd part
  // lies in the kernel span; otherwise no even solution exists
  std::vector<RatFun> even(A.dim(), RatFun(0));
  std::vector<RatFun> odd(A.dim(), RatFun(0));
  bool has_odd = false;
  for (int i = 0; i < A.dim(); ++i) {
    if (A.parity(i) == 0) even[i] = part.coords[i];
    else {
      odd[i] = part.coords[i];
      if (!odd[i].is_zero()) has_odd = true;
    }
  }
  if (has_odd) {
    RowSpan span;
    for (std::size_t s = 1; s < sols.size(); ++s) span.insert(sols[s].coords);
    if (span.insert(odd)) return false;  // odd part not absorbable
  }
  out = make_element(A, std::move(even));
  return true;
}

SuperAlgebra restrict_even(const SuperAlgebra& A) {
  std::vector<int> idx;
  for (int i = 0; i < A.dim(); ++i)
    if (A.parity(i) == 0) idx.push_back(i);
  std::vector<int> par(idx.size(), 0);
  std::vector<std::string> names;
  for (int i : idx) names.push_back(A.name(i));
  std::vector<int> back(A.dim(), -1);
  for (std::size_t t = 0; t < idx.size(); ++t) back[idx[t]] = static_cast<int>(t);
  SuperAlgebra E(par, names);
  for (std::size_t s = 0; s < idx.size(); ++s)
    for (std::size_t t = 0; t < idx.size(); ++t)
      for (const auto& [k, c] : A.product(idx[s], idx[t])) {
        // grading consistency puts the product back in the even part
        E.add_constant(static_cast<int>(s), static_cast<int>(t), back[k], c);
      }
  return E;
}

CheckReport check_associative(const SuperAlgebra& A) {
  int n = A.dim();
  return parallel_check(n, [&](int i) {
    std::vector<Violation> out;
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        std::vector<Term> r = basis_associator(A, i, j, k);
        if (!r.empty())
          out.push_back({"associativity", {i, j, k}, densify(A, r)});
      }
    return out;
  });
}

std::vector<Element> ideal_closure(const SuperAlgebra& A, const Element& seed) {
  if (seed.alg != &A) throw AlgebraMismatch();
  if (seed.is_zero()) throw ZeroSeed();
  RowSpan span;
  std::vector<std::vector<RatFun>> queue{seed.coords};
  span.insert(seed.coords);
  while (!queue.empty()) {
    std::vector<RatFun> v = std::move(queue.back());
    queue.pop_back();
    for (int b = 0; b < A.dim(); ++b) {
      std::vector<RatFun> left(A.dim(), RatFun(0)), right(A.dim(), RatFun(0));
      for (int j = 0; j < A.dim(); ++j) {
        if (v[j].is_zero()) continue;
        for (const auto& [k, c] : A.product(b, j)) left[k] = left[k] + v[j] * c;
        for (const auto& [k, c] : A.product(j, b)) right[k] = right[k] + v[j] * c;
      }
      if (span.insert(left)) queue.push_back(span.rows().back());
      if (span.insert(right)) queue.push_back(span.rows().back());
    }
  }
  std::vector<Element> out;
  for (const auto& row : span.rows()) out.push_back(make_element(A, row));
  return out;
}

CheckReport check_homomorphism(const SuperAlgebra& A, const SuperAlgebra& B, const Mat& P) {
  int n = A.dim();
  if (B.dim() != n || static_cast<int>(P.size()) != n) throw DimensionMismatch();
  for (const auto& row : P)
    if (static_cast<int>(row.size()) != n) throw DimensionMismatch();
  CheckReport report;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!P[i][j].is_zero() && B.parity(i) != A.parity(j)) {
        std::vector<RatFun> res(n, RatFun(0));
        res[i] = P[i][j];
        report.violations.push_back({"parity_block", {i, j, -1}, std::move(res)});
      }
  if (determinant(P).is_zero()) {
    auto kern = kernel_basis(P);
    report.violations.push_back({"invertibility", {-1, -1, -1}, kern.empty() ? std::vector<RatFun>{} : kern[0]});
  }
  for (int i = 0; i < n; ++i) {
    std::vector<RatFun> pi(n), pj(n);
    for (int r = 0; r < n; ++r) pi[r] = P[r][i];
    Element u = make_element(B, pi);
    for (int j = 0; j < n; ++j) {
      for (int r = 0; r < n; ++r) pj[r] = P[r][j];
      Element v = make_element(B, pj);
      std::vector<RatFun> lhs(n, RatFun(0));
      for (const auto& [k, c] : A.product(i, j))
        for (int r = 0; r < n; ++r) lhs[r] = lhs[r] + c * P[r][k];
      Element rhs = multiply(B, u, v);
      std::vector<RatFun> diff(n, RatFun(0));
      bool nz = false;
      for (int r = 0; r < n; ++r) {
        diff[r] = lhs[r] - rhs.coords[r];
        nz = nz || !diff[r].is_zero();
      }
      if (nz) report.violations.push_back({"intertwines_products", {i, j, -1}, std::move(diff)});
    }
  }
  report.verdict = report.violations.empty();
  return report;
}

}  // namespace superlsa
