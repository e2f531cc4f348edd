#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "superlsa/catalog.hpp"
#include "superlsa/solver.hpp"

using namespace superlsa;

namespace {

RatFun R(int n) { return RatFun(n); }
SolverPoly C(int n) { return SolverPoly::constant(R(n)); }
SolverPoly V(int v) { return SolverPoly::variable(v); }

int uid(const Ansatz& az, const std::string& name) {
  for (const auto& u : az.unknowns)
    if (u.name == name) return u.id;
  REQUIRE(false);
  return -1;
}

bool same_constants(const SuperAlgebra& A, const SuperAlgebra& B) {
  if (A.dim() != B.dim()) return false;
  for (int i = 0; i < A.dim(); ++i)
    for (int j = 0; j < A.dim(); ++j) {
      const auto& ta = A.product(i, j);
      const auto& tb = B.product(i, j);
      if (ta.size() != tb.size()) return false;
      for (std::size_t t = 0; t < ta.size(); ++t)
        if (ta[t].first != tb[t].first || !(ta[t].second == tb[t].second)) return false;
    }
  return true;
}

SolverPoly through_ledger(SolverPoly p, const ConstraintSystem& sys) {
  for (const auto& [v, val] : sys.assignments)
    if (p.has_variable(v)) p = p.substituted(v, val);
  return p;
}

bool contains_equation(const ConstraintSystem& sys, const SolverPoly& p,
                       const std::string& provenance) {
  for (const auto& c : sys.equations)
    if (c.provenance == provenance && SolverPoly::compare(c.poly, p) == 0) return true;
  return false;
}

ConstraintSystem case_system(const Ansatz& az, const SuperAlgebra& even) {
  ConstraintSystem sys = make_system(az);
  impose_bracket_constraints(sys, az);
  impose_right_identity(sys, az, find_right_identities(even).front());
  impose_representation(sys, az);
  return sys;
}

const CaseNode* sole_leaf(const CaseNode& n) {
  if (n.children.empty()) return &n;
  if (n.children.size() != 1) return nullptr;
  return sole_leaf(n.children.front());
}

}  // namespace

TEST_CASE("polynomial arithmetic stays canonical") {
  SolverPoly p = (V(0) + V(1)) * (V(0) + V(1));
  SolverPoly q = V(0) * V(0) + V(0) * V(1) * C(2) + V(1) * V(1);
  CHECK(p == q);
  CHECK((p - q).is_zero());
  CHECK(p.total_degree() == 2);
  CHECK(p.degree_in(0) == 2);
  CHECK(SolverPoly().total_degree() == -1);
  CHECK((V(0) - V(0)).is_zero());

  SolverPoly s = p.substituted(0, V(1) + C(1));  // (2y+1)^2
  CHECK(s == V(1) * V(1) * C(4) + V(1) * C(4) + C(1));
  CHECK(s.variables() == std::vector<int>{1});

  SolverPoly lin = V(3).scaled(R(2)) + C(-5);
  CHECK(lin.coefficient_of(3) == C(2));
  CHECK(lin.drop_terms_with(3) == C(-5));
  CHECK(p.coefficient_of_power(0, 2) == C(1));
  CHECK(p.coefficient_of_power(0, 1) == V(1).scaled(R(2)));
  CHECK(p.coefficient_of_power(0, 0) == V(1) * V(1));

  std::vector<RatFun> at(4, R(0));
  at[0] = R(3);
  at[1] = R(-1);
  CHECK(p.evaluated(at) == R(4));
}

TEST_CASE("selection order ranks by degree, then size, then monomials") {
  SolverPoly lin = V(5) + C(1);
  SolverPoly quad = V(0) * V(0);
  SolverPoly wide = V(0) + V(1) + V(2);
  CHECK(SolverPoly::selection_less(lin, quad, true));
  CHECK(SolverPoly::selection_less(lin, wide, true));   // fewer terms first
  CHECK(!SolverPoly::selection_less(lin, wide, false)); // lex mode looks at monomials
  CHECK(SolverPoly::selection_less(wide, lin, false));  // x0 ranks before x5
  CHECK(SolverPoly::compare(lin, lin) == 0);
  CHECK(SolverPoly::compare(lin, quad) != 0);
}

TEST_CASE("exact division recovers cofactors and rejects non-divisors") {
  SolverPoly num = V(0) * V(0) - V(1) * V(1);
  auto q = exact_division(num, V(0) - V(1));
  REQUIRE(q.has_value());
  CHECK(*q == V(0) + V(1));
  CHECK(!exact_division(num, V(0) + C(1)).has_value());
  auto one = exact_division(V(2) + C(1), V(2) + C(1));
  REQUIRE(one.has_value());
  CHECK(*one == C(1));
}

TEST_CASE("affine factorization covers the solver's fragment") {
  std::vector<SolverPoly> fs;

  SUBCASE("monomial content splits off variable factors") {
    REQUIRE(affine_factorization(V(0) * V(0) - V(0), fs));
    REQUIRE(fs.size() == 2);
    CHECK(fs[0] == V(0));
    CHECK(fs[1] == V(0) - C(1));

    REQUIRE(affine_factorization(V(0) * V(1), fs));
    REQUIRE(fs.size() == 2);
    CHECK(fs[0] == V(0));
    CHECK(fs[1] == V(1));
  }

  SUBCASE("univariate quadratics split over the parameter field") {
    SolverPoly p = V(0) * V(0) - SolverPoly::constant(RatFun::parameter() * RatFun::parameter());
    REQUIRE(affine_factorization(p, fs));
    REQUIRE(fs.size() == 2);
    CHECK(fs[0] * fs[1] == p);
    // x^2 + 1 has no rational-function roots
    CHECK(!affine_factorization(V(0) * V(0) + C(1), fs));
  }

  SUBCASE("univariate perfect powers collapse to the base") {
    SolverPoly cube = (V(0) + C(1)) * (V(0) + C(1)) * (V(0) + C(1));
    REQUIRE(affine_factorization(cube, fs));
    REQUIRE(fs.size() == 3);
    CHECK(fs[0] == V(0) + C(1));
    CHECK(!affine_factorization(cube + C(1), fs));
  }

  SUBCASE("products of affine factors in distinct unknowns") {
    REQUIRE(affine_factorization((V(0) + C(1)) * (V(1) + C(1)), fs));
    REQUIRE(fs.size() == 2);
    SolverPoly scaled = (V(0).scaled(R(2)) + C(1)) * (V(1) + C(1));
    REQUIRE(affine_factorization(scaled, fs));
    REQUIRE(fs.size() == 2);
    SolverPoly prod = C(1);
    for (const auto& f : fs) prod = prod * f;
    // normalization may drop the scalar; zero sets must agree
    CHECK(exact_division(scaled, prod).has_value());
  }

  SUBCASE("whole affine polynomials are their own factor") {
    REQUIRE(affine_factorization(V(0) + V(1) - C(1), fs));
    REQUIRE(fs.size() == 1);
    CHECK(fs[0] == V(0) + V(1) - C(1));
  }

  SUBCASE("difference of squares in two unknowns") {
    REQUIRE(affine_factorization(V(0) * V(0) - V(1) * V(1), fs));
    REQUIRE(fs.size() == 2);
    std::set<std::string> got;
    std::vector<std::string> names(2);
    names[0] = "u";
    names[1] = "w";
    for (const auto& f : fs) got.insert(f.to_string(names));
    CHECK(got == std::set<std::string>{"u + w", "u - w"});
  }

  SUBCASE("multivariate affine perfect power") {
    SolverPoly base = V(0) + V(1);
    SolverPoly cube = (base * base * base).scaled(RatFun(-1) / RatFun(3));
    REQUIRE(affine_factorization(cube, fs));
    REQUIRE(fs.size() == 1);
    CHECK(fs[0] == base);
  }

  SUBCASE("irreducible quadratics stay outside the fragment") {
    CHECK(!affine_factorization(V(0) * V(1) + C(1), fs));
    // (uv-1)(uv+1) factors, but not into affine pieces
    CHECK(!affine_factorization(V(0) * V(0) * V(1) * V(1) - C(1), fs));
  }
}

TEST_CASE("ansatz over A1 matches the twelve-block layout") {
  SuperAlgebra a01 = instantiate("A01");
  SuperAlgebra a1 = instantiate("A1");
  Ansatz az = build_ansatz(a1, a01);

  CHECK(az.unknowns.size() == 192);
  CHECK(az.names.front() == "a11");
  CHECK(az.names.back() == "q44");
  CHECK(az.unknowns[16].name == "b11");
  CHECK(az.unknowns[16].block == "b");
  CHECK(az.unknowns[uid(az, "e14")].block == "e");
  std::set<std::string> blocks;
  for (const auto& u : az.unknowns) blocks.insert(u.block);
  CHECK(blocks == std::set<std::string>{"a", "b", "c", "d", "e", "f", "g", "h", "m", "n",
                                        "p", "q"});

  // even-even products copy the fixed table
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const auto& fixed = a1.product(i, j);
      const auto& got = az.products[i][j];
      REQUIRE(got.size() == fixed.size());
      for (std::size_t t = 0; t < fixed.size(); ++t) {
        CHECK(got[t].first == fixed[t].first);
        CHECK(got[t].second == SolverPoly::constant(fixed[t].second));
      }
    }
  // x1 . y2 expands over the a-block's second column
  const auto& x1y2 = az.products[0][5];
  REQUIRE(x1y2.size() == 4);
  CHECK(x1y2[0].first == 4);
  CHECK(x1y2[0].second == V(uid(az, "a12")));
  CHECK(x1y2[3].second == V(uid(az, "a42")));
  // y2 . x1 lands in the n-block, y2 . y3 in the f-block
  CHECK(az.products[5][0][1].second == V(uid(az, "n21")));
  CHECK(az.products[5][6][2].second == V(uid(az, "f33")));
}

TEST_CASE("ansatz edge shapes") {
  SuperAlgebra gl2 = instantiate("gl2");
  SuperAlgebra a1 = instantiate("A1");
  // purely even bracket: nothing left unknown
  Ansatz flat = build_ansatz(a1, gl2);
  CHECK(flat.unknowns.empty());

  // the even argument must actually be even
  SuperAlgebra b1 = instantiate("B1");
  SuperAlgebra a01 = instantiate("A01");
  CHECK_THROWS_AS(build_ansatz(b1, a01), GradingMismatch);
  // and must match the even sector's dimension
  std::vector<int> par = {0, 1};
  std::vector<std::string> nm = {"x", "y"};
  SuperAlgebra tiny(par, nm);
  CHECK_THROWS_AS(build_ansatz(a1, tiny), GradingMismatch);
}

TEST_CASE("bracket constraints pin the displayed block relations") {
  SuperAlgebra a01 = instantiate("A01");
  SuperAlgebra a1 = instantiate("A1");
  Ansatz az = build_ansatz(a1, a01);
  ConstraintSystem sys = make_system(az);
  impose_bracket_constraints(sys, az);

  CHECK(sys.equations.size() == 104);
  for (const auto& c : sys.equations) CHECK(c.sector == ConstraintSector::base);

  // m21 = a21 + 1 comes from [x1, y1] = y1
  CHECK(contains_equation(sys, V(uid(az, "a21")) - V(uid(az, "m21")) + C(1),
                          "bracket(x1,y1)"));
  // [y1, y1] = 0 zeroes the e-block's first column
  for (const char* nm : {"e11", "e21", "e31", "e41"})
    CHECK(contains_equation(sys, V(uid(az, nm)).scaled(R(2)), "bracket(y1,y1)"));
}

TEST_CASE("abelian odd bracket keeps only symmetrized odd-odd relations") {
  // zero bracket on (1|1): y.y enters twice, x.y minus y.x once
  std::vector<int> par = {0, 1};
  std::vector<std::string> nm = {"x", "y"};
  SuperAlgebra lie(par, nm);
  std::vector<int> epar = {0};
  std::vector<std::string> enm = {"x"};
  SuperAlgebra even(epar, enm);
  even.add_constant(0, 0, 0, R(1));  // x.x = x, right identity x

  Ansatz az = build_ansatz(even, lie);
  REQUIRE(az.unknowns.size() == 3);  // a11, e11, m11
  ConstraintSystem sys = make_system(az);
  impose_bracket_constraints(sys, az);
  REQUIRE(sys.equations.size() == 2);
  CHECK(contains_equation(sys, V(uid(az, "a11")) - V(uid(az, "m11")), "bracket(x,y)"));
  CHECK(contains_equation(sys, V(uid(az, "e11")).scaled(R(2)), "bracket(y,y)"));
}

TEST_CASE("right identity rows determine the d-block affinely") {
  SuperAlgebra a01 = instantiate("A01");
  SuperAlgebra a1 = instantiate("A1");
  Ansatz az = build_ansatz(a1, a01);

  ConstraintSystem sys = make_system(az);
  impose_bracket_constraints(sys, az);
  impose_right_identity(sys, az, find_right_identities(a1).front());
  ConstraintSystem red = reduce_linear(sys);

  // d11 = 2 - a11 is implied by bracket + right-identity elimination
  SolverPoly claim = V(uid(az, "d11")) + V(uid(az, "a11")) - C(2);
  CHECK(through_ledger(claim, red).is_zero());

  SUBCASE("zero candidate identity contradicts immediately") {
    ConstraintSystem bad = make_system(az);
    impose_bracket_constraints(bad, az);
    impose_right_identity(bad, az, make_element(a1, {R(0), R(0), R(0), R(0)}));
    CHECK_THROWS_AS(reduce_linear(bad), Inconsistent);
  }

  SUBCASE("an even part without right identity is rejected") {
    std::vector<int> par = {0, 1};
    std::vector<std::string> nm = {"x", "y"};
    SuperAlgebra lie(par, nm);
    std::vector<int> epar = {0};
    std::vector<std::string> enm = {"x"};
    SuperAlgebra zero_even(epar, enm);  // x.x = 0: no right identity
    Ansatz z = build_ansatz(zero_even, lie);
    ConstraintSystem s = make_system(z);
    CHECK_THROWS_AS(impose_right_identity(s, z, make_element(zero_even, {R(1)})),
                    NoEvenRightIdentity);
  }
}

TEST_CASE("representation constraints imply the printed consequence set") {
  SuperAlgebra a01 = instantiate("A01");
  SuperAlgebra a1 = instantiate("A1");
  Ansatz az = build_ansatz(a1, a01);
  ConstraintSystem red = reduce_linear(case_system(az, a1));

  // the full case-1 system eliminates every unknown without branching
  CHECK(red.equations.empty());
  CHECK(red.assignments.size() == az.unknowns.size());

  for (const char* nm :
       {"a12", "a13", "a14", "a23", "a24", "a31", "a32", "a41", "a42", "a43"})
    CHECK(through_ledger(V(uid(az, nm)), red).is_zero());
  CHECK(through_ledger(V(uid(az, "a11")) - V(uid(az, "a22")), red).is_zero());
  CHECK(through_ledger(V(uid(az, "a33")) - V(uid(az, "a44")), red).is_zero());

  // the paper-facing product relations are consequences as well
  CHECK(through_ledger(V(uid(az, "c12")) * V(uid(az, "a21")), red).is_zero());
  CHECK(through_ledger(
            V(uid(az, "a21")) * (C(2) + V(uid(az, "c11")) - V(uid(az, "c22"))), red)
            .is_zero());
}

TEST_CASE("zero ansatz over an abelian bracket produces no constraints") {
  std::vector<int> par = {0, 0};
  std::vector<std::string> nm = {"x1", "x2"};
  SuperAlgebra lie(par, nm);
  std::vector<int> epar = {0, 0};
  SuperAlgebra even(epar, nm);  // all products zero
  Ansatz az = build_ansatz(even, lie);
  CHECK(az.unknowns.empty());
  ConstraintSystem sys = make_system(az);
  impose_bracket_constraints(sys, az);
  impose_representation(sys, az);
  CHECK(sys.equations.empty());
}

TEST_CASE("linear reduction solves, records, and contradicts") {
  SuperAlgebra a01 = instantiate("A01");
  SuperAlgebra a1 = instantiate("A1");
  Ansatz az = build_ansatz(a1, a01);

  SUBCASE("single equation becomes an assignment") {
    ConstraintSystem sys = make_system(az);
    sys.push(V(0) + C(1), "seed", ConstraintSector::base);
    ConstraintSystem red = reduce_linear(sys);
    CHECK(red.equations.empty());
    REQUIRE(red.assignments.size() == 1);
    CHECK(red.assignments[0].first == 0);
    CHECK(red.assignments[0].second == C(-1));
  }

  SUBCASE("conflicting values surface as Inconsistent") {
    ConstraintSystem sys = make_system(az);
    sys.push(V(0) - C(1), "first", ConstraintSector::base);
    sys.push(V(0) - C(2), "second", ConstraintSector::base);
    CHECK_THROWS_AS(reduce_linear(sys), Inconsistent);
  }

  SUBCASE("assignments replay onto the original equations") {
    ConstraintSystem sys = make_system(az);
    sys.push(V(0) + V(1) - C(3), "seed", ConstraintSector::base);
    sys.push(V(1) - C(1), "seed", ConstraintSector::base);
    ConstraintSystem red = reduce_linear(sys);
    CHECK(red.equations.empty());
    for (const auto& c : sys.equations) CHECK(through_ledger(c.poly, red).is_zero());
  }
}

TEST_CASE("branching enumerates affine factors") {
  SuperAlgebra a01 = instantiate("A01");
  SuperAlgebra a1 = instantiate("A1");
  Ansatz az = build_ansatz(a1, a01);
  ConstraintSystem sys = make_system(az);
  sys.push(V(0) * V(0) - V(0), "seed", ConstraintSector::base);

  std::vector<SolutionFamily> fams = branch_and_solve(sys, 4);
  REQUIRE(fams.size() == 2);
  CHECK(fams[0].values[0] == SolverPoly());
  CHECK(fams[1].values[0] == C(1));
  CHECK(fams[0].branch_trail == std::vector<std::string>{"a11"});
  CHECK(fams[1].branch_trail == std::vector<std::string>{"a11 - 1"});

  SUBCASE("out-of-fragment residuals raise instead of guessing") {
    ConstraintSystem stuck = make_system(az);
    stuck.push(V(0) * V(1) + C(1), "seed", ConstraintSector::base);
    CHECK_THROWS_AS(branch_and_solve(stuck, 4), UnfactorableResidual);
  }

  SUBCASE("depth cap marks unfinished branches") {
    ConstraintSystem sys2 = make_system(az);
    sys2.push(V(0) * V(0) - V(0), "seed", ConstraintSector::base);
    SolverPolicy pol;
    pol.depth_cap = 0;
    SolveOutcome out = explore(sys2, pol);
    CHECK(out.depth_capped == 1);
    CHECK(out.families.empty());
  }
}

TEST_CASE("even part A1 reproduces the catalog odd extension") {
  SuperAlgebra a01 = instantiate("A01");
  SuperAlgebra a1 = instantiate("A1");
  SuperAlgebra b1 = instantiate("B1");
  Ansatz az = build_ansatz(a1, a01);
  ConstraintSystem sys = case_system(az, a1);

  SUBCASE("sector-staged run shows the four-branch case split") {
    SolverPolicy pol;
    pol.depth_cap = 20;
    SolveOutcome st = staged_solve(sys, pol);
    CHECK(st.leaves == 4);
    CHECK(st.contradictions == 3);
    CHECK(st.stalls == 0);
    REQUIRE(st.families.size() == 1);

    const SolutionFamily& fam = st.families.front();
    CHECK(fam.free_unknowns.empty());
    CHECK(fam.values[uid(az, "e14")] == SolverPoly::constant(R(1) / R(4)));
    CHECK(fam.values[uid(az, "e44")] == SolverPoly::constant(R(1) / R(4)));
    CHECK(fam.values[uid(az, "e34")] == SolverPoly::constant(R(-1) / R(4)));
    CHECK(fam.values[uid(az, "f14")] == SolverPoly::constant(R(-1) / R(2)));
    CHECK(fam.branch_trail == std::vector<std::string>{"n12 - 1", "p42 + 1"});

    CHECK(same_constants(materialize(fam), b1));
    CHECK(verify_solution(fam, a01).verdict);
    CHECK(family_satisfies(fam, sys));

    // every contradiction leaf names the representation pair that kills it
    int rep_witnesses = 0;
    std::vector<const CaseNode*> stack = {&st.tree};
    while (!stack.empty()) {
      const CaseNode* n = stack.back();
      stack.pop_back();
      for (const auto& ch : n->children) stack.push_back(&ch);
      if (n->children.empty() && n->kind == LeafKind::contradiction) {
        CHECK(n->witness.find("representation(") != std::string::npos);
        ++rep_witnesses;
      }
    }
    CHECK(rep_witnesses == 3);
  }

  SUBCASE("flat run reaches the same algebra without branching") {
    std::vector<SolutionFamily> fams = branch_and_solve(sys, 20);
    REQUIRE(fams.size() == 1);
    CHECK(fams.front().branch_trail.empty());
    CHECK(same_constants(materialize(fams.front()), b1));
  }

  SUBCASE("corrupting the survivor breaks left symmetry") {
    SolverPolicy pol;
    pol.depth_cap = 20;
    SolveOutcome st = staged_solve(sys, pol);
    REQUIRE(st.families.size() == 1);
    SolutionFamily bad = st.families.front();
    bad.values[uid(az, "e14")] = SolverPoly::constant(R(1) / R(2));
    CHECK(!family_satisfies(bad, sys));
    SuperAlgebra X = materialize(bad);
    CHECK(!check_left_symmetric(X).verdict);
    CHECK(!verify_solution(bad, a01).verdict);
  }
}

TEST_CASE("even part A3 admits no compatible structure") {
  SuperAlgebra a01 = instantiate("A01");
  SuperAlgebra a3 = instantiate("A3");
  Ansatz az = build_ansatz(a3, a01);
  ConstraintSystem sys = case_system(az, a3);
  SolverPolicy pol;
  pol.depth_cap = 20;
  SolveOutcome st = staged_solve(sys, pol);
  CHECK(st.families.empty());
  CHECK(st.leaves == 6);
  CHECK(st.contradictions == 6);
  CHECK(st.stalls == 0);
}

TEST_CASE("even part A2 with formal parameter stalls staged, solves at 0") {
  SuperAlgebra a01 = instantiate("A01");

  SUBCASE("formal run leaves an out-of-fragment residual at the root") {
    SuperAlgebra a2 = instantiate("A2alpha");
    Ansatz az = build_ansatz(a2, a01);
    ConstraintSystem sys = case_system(az, a2);
    SolverPolicy pol;
    pol.depth_cap = 20;
    SolveOutcome st = staged_solve(sys, pol);
    CHECK(st.leaves == 1);
    CHECK(st.stalls == 1);
    CHECK(st.families.empty());
    const CaseNode* leaf = sole_leaf(st.tree);
    REQUIRE(leaf != nullptr);
    CHECK(leaf->kind == LeafKind::stalled);
    CHECK(leaf->trail.empty());
    REQUIRE(st.stall_residuals.size() == 1);
    CHECK(st.stall_residuals.front().second == "representation(x1,x2)");
  }

  SUBCASE("specialized at 0 the staged run materializes the catalog algebra") {
    SuperAlgebra a20 = instantiate("A2alpha", Rational(0));
    Ansatz az = build_ansatz(a20, a01);
    ConstraintSystem sys = case_system(az, a20);
    SolverPolicy pol;
    pol.depth_cap = 20;
    SolveOutcome st = staged_solve(sys, pol);
    CHECK(st.stalls == 0);
    REQUIRE(!st.families.empty());
    SuperAlgebra b20 = instantiate("B2alpha", Rational(0));
    std::vector<SuperAlgebra> distinct;
    for (const auto& fam : st.families) {
      SuperAlgebra X = materialize(fam);
      bool seen = false;
      for (const auto& Y : distinct)
        if (same_constants(X, Y)) seen = true;
      if (!seen) distinct.push_back(std::move(X));
    }
    REQUIRE(distinct.size() == 1);
    CHECK(same_constants(distinct.front(), b20));
  }
}

TEST_CASE("materializing a one-parameter family folds into the scalar") {
  std::vector<int> par = {0, 1};
  std::vector<std::string> nm = {"x", "y"};
  SuperAlgebra lie(par, nm);
  std::vector<int> epar = {0};
  std::vector<std::string> enm = {"x"};
  SuperAlgebra even(epar, enm);
  even.add_constant(0, 0, 0, R(1));

  Ansatz az = build_ansatz(even, lie);
  ConstraintSystem sys = make_system(az);
  impose_bracket_constraints(sys, az);
  ConstraintSystem red = reduce_linear(sys);
  CHECK(red.equations.empty());

  SolveOutcome out = explore(sys, SolverPolicy{});
  REQUIRE(out.families.size() == 1);
  const SolutionFamily& fam = out.families.front();
  REQUIRE(fam.free_unknowns.size() == 1);

  SuperAlgebra X = materialize(fam);
  const auto& xy = X.product(0, 1);
  REQUIRE(xy.size() == 1);
  CHECK(xy[0].second == RatFun::parameter());
  const auto& yx = X.product(1, 0);
  REQUIRE(yx.size() == 1);
  CHECK(yx[0].second == RatFun::parameter());
  CHECK(X.product(1, 1).empty());

  SUBCASE("a second free unknown is refused") {
    ConstraintSystem empty_sys = make_system(az);
    SolveOutcome all_free = explore(empty_sys, SolverPolicy{});
    REQUIRE(all_free.families.size() == 1);
    CHECK_THROWS_AS(materialize(all_free.families.front()), FreeParameterUnsupported);
  }

  SUBCASE("folding clashes with a parameter already in the table") {
    SuperAlgebra even_a(epar, enm);
    even_a.add_constant(0, 0, 0, RatFun::parameter());
    Ansatz az2 = build_ansatz(even_a, lie);
    ConstraintSystem sys2 = make_system(az2);
    impose_bracket_constraints(sys2, az2);
    SolveOutcome out2 = explore(sys2, SolverPolicy{});
    REQUIRE(out2.families.size() == 1);
    REQUIRE(out2.families.front().free_unknowns.size() == 1);
    CHECK_THROWS_AS(materialize(out2.families.front()), FreeParameterUnsupported);
  }
}

TEST_CASE("enumeration agrees with brute force on seeded systems") {
  SuperAlgebra a01 = instantiate("A01");
  SuperAlgebra a1 = instantiate("A1");
  Ansatz az = build_ansatz(a1, a01);
  const std::vector<int> vars = {0, 1, 4, 5};

  std::mt19937 rng(20260814);
  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_int_distribution<int> small(-2, 2);
  std::uniform_int_distribution<int> pickvar(0, 3);

  int checked = 0;
  for (int trial = 0; trial < 40 && checked < 10; ++trial) {
    // random products of affine factors plus a random linear equation
    ConstraintSystem sys = make_system(az);
    int neq = 2 + coin(rng);
    for (int e = 0; e < neq; ++e) {
      SolverPoly p = C(1);
      int nf = 1 + coin(rng);
      for (int f = 0; f < nf; ++f)
        p = p * (V(vars[pickvar(rng)]) - C(small(rng)));
      sys.push(p, "seed", ConstraintSector::base);
    }
    SolverPoly lin = V(vars[pickvar(rng)]) + V(vars[pickvar(rng)]) - C(small(rng));
    sys.push(lin, "seed", ConstraintSector::base);

    std::vector<SolutionFamily> fams;
    try {
      fams = branch_and_solve(sys, 12);
    } catch (const UnfactorableResidual&) {
      continue;  // seeded outside the fragment; regenerate
    }
    ++checked;

    for (const auto& fam : fams) CHECK(family_satisfies(fam, sys));

    // every grid solution must be covered by some family
    std::vector<RatFun> pt(az.unknowns.size(), R(0));
    for (int v0 = -2; v0 <= 2; ++v0)
      for (int v1 = -2; v1 <= 2; ++v1)
        for (int v2 = -2; v2 <= 2; ++v2)
          for (int v3 = -2; v3 <= 2; ++v3) {
            pt[vars[0]] = R(v0);
            pt[vars[1]] = R(v1);
            pt[vars[2]] = R(v2);
            pt[vars[3]] = R(v3);
            bool solves = true;
            for (const auto& c : sys.equations)
              if (!c.poly.evaluated(pt).is_zero()) solves = false;
            if (!solves) continue;
            bool covered = false;
            for (const auto& fam : fams) {
              bool match = true;
              for (int v : vars)
                if (!(fam.values[v].evaluated(pt) == pt[v])) match = false;
              if (match) covered = true;
            }
            CHECK(covered);
          }
  }
  CHECK(checked == 10);
}

TEST_CASE("branch trails are reproducible run to run") {
  SuperAlgebra a01 = instantiate("A01");
  SuperAlgebra a1 = instantiate("A1");
  Ansatz az = build_ansatz(a1, a01);
  ConstraintSystem sys = case_system(az, a1);
  SolverPolicy pol;
  pol.depth_cap = 20;
  SolveOutcome first = staged_solve(sys, pol);
  SolveOutcome second = staged_solve(sys, pol);
  REQUIRE(first.families.size() == second.families.size());
  for (std::size_t i = 0; i < first.families.size(); ++i) {
    CHECK(first.families[i].branch_trail == second.families[i].branch_trail);
    CHECK(first.families[i].values == second.families[i].values);
  }
}
