#pragma once

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "superlsa/ratfun.hpp"

namespace superlsa {

struct AlgebraMismatch : std::logic_error {
  AlgebraMismatch() : std::logic_error("elements belong to different algebras") {}
};
struct DimensionMismatch : std::logic_error {
  DimensionMismatch() : std::logic_error("dimension mismatch") {}
};
struct IndexOutOfRange : std::out_of_range {
  IndexOutOfRange() : std::out_of_range("basis index out of range") {}
};
struct ZeroSeed : std::invalid_argument {
  ZeroSeed() : std::invalid_argument("ideal closure needs a nonzero seed") {}
};

// Finite-dimensional Z/2-graded algebra given by structure constants on a
// fixed homogeneous basis.  Values are immutable once built; all checkers
// below are pure functions of the constants.
class SuperAlgebra {
 public:
  using Term = std::pair<int, RatFun>;  // (basis index, coefficient)

  SuperAlgebra(std::vector<int> parity, std::vector<std::string> names);

  int dim() const { return static_cast<int>(parity_.size()); }
  int parity(int i) const;
  const std::vector<int>& parities() const { return parity_; }
  const std::string& name(int i) const;
  const std::vector<std::string>& names() const { return names_; }

  // accumulates c into the (i,j,k) constant; zero results are dropped
  void add_constant(int i, int j, int k, const RatFun& c);

  // product of basis vectors i and j as a sparse coefficient list,
  // sorted by basis index
  const std::vector<Term>& product(int i, int j) const;

  // every nonzero constant satisfies parity(k) = parity(i)+parity(j) mod 2
  bool grading_consistent() const;

  // deterministic iteration over nonzero products
  const std::map<std::pair<int, int>, std::vector<Term>>& constants() const {
    return constants_;
  }

 private:
  std::vector<int> parity_;
  std::vector<std::string> names_;
  std::map<std::pair<int, int>, std::vector<Term>> constants_;
};

struct Element {
  const SuperAlgebra* alg = nullptr;
  std::vector<RatFun> coords;

  bool is_zero() const;
  // -1 if mixed or zero, else the common parity of the support
  int homogeneous_parity() const;
};

Element make_element(const SuperAlgebra& A, std::vector<RatFun> coords);
Element basis_element(const SuperAlgebra& A, int i);

struct Violation {
  std::string identity;
  std::array<int, 3> triple;  // unused positions hold -1
  std::vector<RatFun> residual;
};

struct CheckReport {
  bool verdict = true;
  std::vector<Violation> violations;
};

using Mat = std::vector<std::vector<RatFun>>;

Element multiply(const SuperAlgebra& A, const Element& u, const Element& v);
Element associator(const SuperAlgebra& A, const Element& u, const Element& v, const Element& w);

// (u.v).w - u.(v.w) supersymmetric in u,v on all basis triples
CheckReport check_left_symmetric(const SuperAlgebra& A);
// (z.x).y = (-1)^{|x||y|} (z.y).x on all basis triples
CheckReport check_novikov(const SuperAlgebra& A);
// super-commutator bracket [u,v] = u.v - (-1)^{|u||v|} v.u
SuperAlgebra sub_adjacent(const SuperAlgebra& A);
// super-anticommutativity and [u,[v,w]] = [[u,v],w] + (-1)^{|u||v|}[v,[u,w]]
CheckReport check_super_jacobi(const SuperAlgebra& L);
// left-symmetric and sub-adjacent bracket equal to L, constant by constant
CheckReport check_compatible(const SuperAlgebra& A, const SuperAlgebra& L);

// column j holds the coordinates of x_i . x_j
Mat left_mult_operator(const SuperAlgebra& A, int i);

// ops[i] ops[j] - (-1)^{|i||j|} ops[j] ops[i] = ops([x_i,x_j]) extended
// linearly; a violation's residual holds the first nonzero column of the
// defect operator
CheckReport check_representation(const SuperAlgebra& L, const std::vector<Mat>& ops);

// exact affine solution set of x.e = x over the full space: first entry is a
// particular solution (free coordinates set to zero), the rest span the
// homogeneous solutions; empty if inconsistent
std::vector<Element> find_right_identities(const SuperAlgebra& A);

// the even slice of the affine set when it is a single point
bool unique_even_right_identity(const SuperAlgebra& A, Element& out);

SuperAlgebra restrict_even(const SuperAlgebra& A);
CheckReport check_associative(const SuperAlgebra& A);

// smallest subspace containing seed and closed under multiplication by all
// basis vectors on both sides; returned as a reduced row basis
std::vector<Element> ideal_closure(const SuperAlgebra& A, const Element& seed);

// P is a homomorphism A -> B when it is even (block diagonal in the parity
// split), invertible, and P coords(u.v) = coords(P(u).P(v)) on basis pairs.
// A singular P is reported with a nonzero kernel vector as the residual.
CheckReport check_homomorphism(const SuperAlgebra& A, const SuperAlgebra& B, const Mat& P);

// thread count honoring SUPERLSA_THREADS (default: hardware concurrency)
int worker_count();

}  // namespace superlsa
