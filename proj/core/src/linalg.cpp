#include "superlsa/linalg.hpp"

#include <utility>

namespace superlsa {

Mat mat_identity(int n) {
  Mat m(n, std::vector<RatFun>(n, RatFun(0)));
  for (int i = 0; i < n; ++i) m[i][i] = RatFun(1);
  return m;
}

Mat mat_mul(const Mat& a, const Mat& b) {
  int n = static_cast<int>(a.size());
  int k = n ? static_cast<int>(a[0].size()) : 0;
  int m = k ? static_cast<int>(b[0].size()) : 0;
  Mat out(n, std::vector<RatFun>(m, RatFun(0)));
  for (int i = 0; i < n; ++i)
    for (int t = 0; t < k; ++t) {
      if (a[i][t].is_zero()) continue;
      for (int j = 0; j < m; ++j) {
        if (b[t][j].is_zero()) continue;
        out[i][j] = out[i][j] + a[i][t] * b[t][j];
      }
    }
  return out;
}

Mat mat_add(const Mat& a, const Mat& b) {
  Mat out = a;
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t j = 0; j < out[i].size(); ++j) out[i][j] = out[i][j] + b[i][j];
  return out;
}

Mat mat_sub(const Mat& a, const Mat& b) {
  Mat out = a;
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t j = 0; j < out[i].size(); ++j) out[i][j] = out[i][j] - b[i][j];
  return out;
}

Mat mat_scale(const Mat& a, const RatFun& c) {
  Mat out = a;
  for (auto& row : out)
    for (auto& x : row) x = x * c;
  return out;
}

std::vector<RatFun> mat_apply(const Mat& a, const std::vector<RatFun>& v) {
  std::vector<RatFun> out(a.size(), RatFun(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (a[i][j].is_zero() || v[j].is_zero()) continue;
      out[i] = out[i] + a[i][j] * v[j];
    }
  return out;
}

bool mat_is_zero(const Mat& a) {
  for (const auto& row : a)
    for (const auto& x : row)
      if (!x.is_zero()) return false;
  return true;
}

RatFun determinant(Mat a) {
  int n = static_cast<int>(a.size());
  RatFun det(1);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (!a[r][col].is_zero()) { piv = r; break; }
    if (piv < 0) return RatFun(0);
    if (piv != col) {
      std::swap(a[piv], a[col]);
      det = -det;
    }
    det = det * a[col][col];
    RatFun inv = a[col][col].inverse();
    for (int r = col + 1; r < n; ++r) {
      if (a[r][col].is_zero()) continue;
      RatFun f = a[r][col] * inv;
      for (int c = col; c < n; ++c) a[r][c] = a[r][c] - f * a[col][c];
    }
  }
  return det;
}

namespace {

// in-place reduced row echelon form of [m | b]; returns pivot column per row
std::vector<int> rref(Mat& m, std::vector<RatFun>* b) {
  int rows = static_cast<int>(m.size());
  int cols = rows ? static_cast<int>(m[0].size()) : 0;
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (!m[i][c].is_zero()) { piv = i; break; }
    if (piv < 0) continue;
    std::swap(m[piv], m[r]);
    if (b) std::swap((*b)[piv], (*b)[r]);
    RatFun inv = m[r][c].inverse();
    for (int j = c; j < cols; ++j) m[r][j] = m[r][j] * inv;
    if (b) (*b)[r] = (*b)[r] * inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      RatFun f = m[i][c];
      for (int j = c; j < cols; ++j) m[i][j] = m[i][j] - f * m[r][j];
      if (b) (*b)[i] = (*b)[i] - f * (*b)[r];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

AffineSolution solve_affine(Mat m, std::vector<RatFun> b) {
  int cols = m.empty() ? 0 : static_cast<int>(m[0].size());
  std::vector<int> pivots = rref(m, &b);
  int rank = static_cast<int>(pivots.size());
  AffineSolution sol;
  for (std::size_t i = rank; i < m.size(); ++i)
    if (!b[i].is_zero()) return sol;  // 0 = nonzero row
  sol.consistent = true;
  sol.particular.assign(cols, RatFun(0));
  for (int r = 0; r < rank; ++r) sol.particular[pivots[r]] = b[r];
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;
  for (int c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    std::vector<RatFun> v(cols, RatFun(0));
    v[c] = RatFun(1);
    for (int r = 0; r < rank; ++r) v[pivots[r]] = -m[r][c];
    sol.kernel.push_back(std::move(v));
  }
  return sol;
}

std::vector<std::vector<RatFun>> kernel_basis(Mat m) {
  int cols = m.empty() ? 0 : static_cast<int>(m[0].size());
  std::vector<RatFun> zero(m.size(), RatFun(0));
  AffineSolution sol = solve_affine(std::move(m), std::move(zero));
  (void)cols;
  return sol.kernel;
}

std::vector<RatFun> char_poly(const Mat& a) {
  // Faddeev-LeVerrier: exact over the fraction field, division by integers only
  int n = static_cast<int>(a.size());
  std::vector<RatFun> c(n + 1, RatFun(0));
  c[n] = RatFun(1);
  Mat m = mat_identity(n);  // M_1 = I
  for (int k = 1; k <= n; ++k) {
    if (k > 1) {
      Mat am = mat_mul(a, m);
      for (int i = 0; i < n; ++i) am[i][i] = am[i][i] + c[n - k + 1];
      m = std::move(am);
    }
    Mat am = mat_mul(a, m);
    RatFun tr(0);
    for (int i = 0; i < n; ++i) tr = tr + am[i][i];
    c[n - k] = -(tr / RatFun(k));
  }
  return c;
}

bool RowSpan::insert(std::vector<RatFun> v) {
  int cols = static_cast<int>(v.size());
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const RatFun& f = v[pivots_[r]];
    if (f.is_zero()) continue;
    RatFun factor = f;
    for (int c = 0; c < cols; ++c)
      if (!rows_[r][c].is_zero()) v[c] = v[c] - factor * rows_[r][c];
  }
  int lead = -1;
  for (int c = 0; c < cols; ++c)
    if (!v[c].is_zero()) { lead = c; break; }
  if (lead < 0) return false;
  RatFun inv = v[lead].inverse();
  for (int c = 0; c < cols; ++c)
    if (!v[c].is_zero()) v[c] = v[c] * inv;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const RatFun& f = rows_[r][lead];
    if (f.is_zero()) continue;
    RatFun factor = f;
    for (int c = 0; c < cols; ++c)
      if (!v[c].is_zero()) rows_[r][c] = rows_[r][c] - factor * v[c];
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(lead);
  return true;
}

}  // namespace superlsa
