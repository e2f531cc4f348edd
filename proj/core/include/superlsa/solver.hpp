#pragma once

#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "superlsa/solver_poly.hpp"
#include "superlsa/superalgebra.hpp"

namespace superlsa {

struct GradingMismatch : std::logic_error {
  GradingMismatch() : std::logic_error("even part does not match the bracket's even sector") {}
};
struct NoEvenRightIdentity : std::runtime_error {
  NoEvenRightIdentity() : std::runtime_error("the even part has no right identity") {}
};
struct Inconsistent : std::runtime_error {
  std::string equation;
  std::string provenance;
  Inconsistent(std::string eq, std::string prov)
      : std::runtime_error("contradiction: " + eq + " = 0  [" + prov + "]"),
        equation(std::move(eq)),
        provenance(std::move(prov)) {}
};
struct UnfactorableResidual : std::runtime_error {
  std::string polynomial;
  std::string provenance;
  UnfactorableResidual(std::string poly, std::string prov)
      : std::runtime_error("residual outside the supported fragment: " + poly + "  [" + prov +
                           "]"),
        polynomial(std::move(poly)),
        provenance(std::move(prov)) {}
};
struct FreeParameterUnsupported : std::runtime_error {
  explicit FreeParameterUnsupported(const std::string& what) : std::runtime_error(what) {}
};

struct Unknown {
  std::string name;
  std::string block;
  int id = 0;
};

enum class ConstraintSector { base, rep_even_even, rep_even_odd, rep_odd_odd };

struct Constraint {
  SolverPoly poly;
  std::string provenance;
  ConstraintSector sector = ConstraintSector::base;
};

// Product table of the bracket's space where the even-even sector is fixed
// and every product involving an odd basis vector carries fresh unknowns.
struct Ansatz {
  const SuperAlgebra* lie = nullptr;
  const SuperAlgebra* even = nullptr;
  std::vector<Unknown> unknowns;
  std::vector<std::string> names;  // unknown names by id
  // products[i][j] = sparse coefficient list of basis_i . basis_j
  std::vector<std::vector<std::vector<std::pair<int, SolverPoly>>>> products;
};

Ansatz build_ansatz(const SuperAlgebra& even, const SuperAlgebra& lie);

struct ConstraintSystem {
  const Ansatz* ansatz = nullptr;
  std::vector<Constraint> equations;
  // chronological pivot ledger; each value references only unknowns that were
  // still unassigned when it was recorded, so one forward pass resolves fully
  std::vector<std::pair<int, SolverPoly>> assignments;
  std::vector<std::string> branch_trail;

  // deduplicating append; zero polynomials and repeats are dropped
  void push(SolverPoly p, std::string provenance, ConstraintSector sector);

 private:
  std::set<SolverPoly, bool (*)(const SolverPoly&, const SolverPoly&)> seen_{
      [](const SolverPoly& x, const SolverPoly& y) { return SolverPoly::compare(x, y) < 0; }};
};

ConstraintSystem make_system(const Ansatz& ansatz);

ConstraintSystem& impose_bracket_constraints(ConstraintSystem& sys, const Ansatz& ansatz);
ConstraintSystem& impose_right_identity(ConstraintSystem& sys, const Ansatz& ansatz,
                                        const Element& e);
ConstraintSystem& impose_representation(ConstraintSystem& sys, const Ansatz& ansatz);

struct SolverPolicy {
  // equation selection: total degree, then term count (optional), then
  // monomials, then coefficients
  bool term_count_tiebreak = true;
  // prefer pivots whose solved value is constant; otherwise first in order
  bool prefer_constant_values = true;
  int depth_cap = 8;
};

// eliminates unknowns that appear linearly with constant coefficient until
// quiescent; throws Inconsistent when a nonzero constant equation appears
ConstraintSystem reduce_linear(ConstraintSystem sys, const SolverPolicy& policy = {});

struct SolutionFamily {
  const Ansatz* ansatz = nullptr;
  // value per unknown id, expressed in the free unknowns; a free unknown's
  // value is itself
  std::vector<SolverPoly> values;
  std::vector<int> free_unknowns;
  std::vector<std::string> branch_trail;
};

enum class LeafKind { solution, contradiction, depth_capped, stalled };

struct CaseNode {
  std::vector<std::string> equations;  // live equations after reduction
  std::vector<std::string> imposed;    // constraint groups introduced here
  std::string branched_on;             // equation whose factors split below
  std::string provenance;              // origin of the branch equation
  std::vector<std::string> factors;    // one per child
  std::vector<CaseNode> children;
  // leaf data (children empty)
  LeafKind kind = LeafKind::solution;
  std::string witness;  // contradicting equation or stalled residual
  std::vector<std::string> trail;
};

struct SolveOutcome {
  CaseNode tree;
  std::vector<SolutionFamily> families;  // in branch-trail order
  int leaves = 0;
  int contradictions = 0;
  int stalls = 0;
  int depth_capped = 0;
  std::vector<std::pair<std::string, std::string>> stall_residuals;  // (poly, provenance)
};

// flat depth-first enumeration over the whole system
SolveOutcome explore(const ConstraintSystem& sys, const SolverPolicy& policy = {});
// sector-staged enumeration: base equations first, then representation
// sectors (even-even, even-odd, odd-odd), each admitted once the accumulated
// system is quiescent; branching within a stage takes precedence
SolveOutcome staged_solve(const ConstraintSystem& sys, const SolverPolicy& policy = {});

// throwing wrapper: solution families of the flat exploration; throws
// UnfactorableResidual if any leaf stalls outside the fragment
std::vector<SolutionFamily> branch_and_solve(const ConstraintSystem& sys, int depth_cap = 8);

// instantiates the ansatz at the family's values; a single surviving free
// unknown folds into the scalar parameter when the system is otherwise
// parameter-free, anything more throws FreeParameterUnsupported
SuperAlgebra materialize(const SolutionFamily& family);

// materializes and checks compatibility with the bracket plus existence of a
// right identity
CheckReport verify_solution(const SolutionFamily& family, const SuperAlgebra& lie);

// substitutes the family into every equation of the system; true when all
// vanish identically (soundness probe used by the test suites)
bool family_satisfies(const SolutionFamily& family, const ConstraintSystem& sys);

}  // namespace superlsa
