#pragma once

#include <vector>

#include "superlsa/ratfun.hpp"

namespace superlsa {

using Mat = std::vector<std::vector<RatFun>>;

Mat mat_identity(int n);
Mat mat_mul(const Mat& a, const Mat& b);
Mat mat_add(const Mat& a, const Mat& b);
Mat mat_sub(const Mat& a, const Mat& b);
Mat mat_scale(const Mat& a, const RatFun& c);
std::vector<RatFun> mat_apply(const Mat& a, const std::vector<RatFun>& v);
bool mat_is_zero(const Mat& a);

RatFun determinant(Mat a);

struct AffineSolution {
  bool consistent = false;
  std::vector<RatFun> particular;          // free coordinates set to zero
  std::vector<std::vector<RatFun>> kernel;  // basis of homogeneous solutions
};

// exact solution set of M x = b over the scalar field
AffineSolution solve_affine(Mat m, std::vector<RatFun> b);

std::vector<std::vector<RatFun>> kernel_basis(Mat m);

// coefficients of det(tI - A), constant term first (degree n, monic)
std::vector<RatFun> char_poly(const Mat& a);

// row-reduced basis maintenance for span saturation: reduce v against rows,
// append if independent; returns true if the span grew
class RowSpan {
 public:
  bool insert(std::vector<RatFun> v);
  const std::vector<std::vector<RatFun>>& rows() const { return rows_; }
  int dimension() const { return static_cast<int>(rows_.size()); }

 private:
  std::vector<std::vector<RatFun>> rows_;  // each with a unit leading pivot
  std::vector<int> pivots_;
};

}  // namespace superlsa
