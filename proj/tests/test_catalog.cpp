#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "superlsa/catalog.hpp"
#include "superlsa/linalg.hpp"
#include "superlsa/obstruction.hpp"

using namespace superlsa;

namespace {

RatFun R(int n) { return RatFun(n); }

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

}  // namespace

TEST_CASE("lie entries satisfy the super Jacobi identity") {
  CHECK(check_super_jacobi(instantiate("gl2")).verdict);
  SuperAlgebra a01 = instantiate("A01");
  CHECK(a01.dim() == 8);
  CHECK(check_super_jacobi(a01).verdict);
  // bracket of the first even with the first odd basis vector
  const auto& t = a01.product(0, 4);
  REQUIRE(t.size() == 1);
  CHECK(t[0].first == 5);
  CHECK(t[0].second == R(-1));
}

TEST_CASE("every product entry is compatible with its declared bracket") {
  for (const char* key : {"A1", "A3"})
    CHECK(check_compatible(instantiate(key), instantiate("gl2")).verdict);
  CHECK(check_compatible(instantiate("A2alpha"), instantiate("gl2")).verdict);
  for (const char* key : {"B1", "B2tilde_m1"})
    CHECK(check_compatible(instantiate(key), instantiate("A01")).verdict);
  // symbolically, and at a specialization away from the corrected constants
  CHECK(check_compatible(instantiate("B2alpha"), instantiate("A01")).verdict);
  CHECK(check_compatible(instantiate("B2alpha", Rational(5)), instantiate("A01")).verdict);
}

TEST_CASE("specialization commutes with instantiation") {
  SuperAlgebra sym = instantiate("B2alpha");
  SuperAlgebra at = instantiate("B2alpha", Rational(-1));
  SuperAlgebra evaluated(at.parities(), at.names());
  for (const auto& [ij, terms] : sym.constants())
    for (const auto& [k, c] : terms)
      evaluated.add_constant(ij.first, ij.second, k, RatFun(c.eval(Rational(-1))));
  CHECK(same_constants(at, evaluated));
}

TEST_CASE("left multiplication by the fourth even basis vector matches the table") {
  Mat L = left_mult_operator(instantiate("B1"), 3);
  CHECK(L[0][0] == R(1));
  CHECK(L[0][1] == RatFun(Rational(-1) / 2));
  CHECK(L[4][4] == R(2));
  CHECK(L[5][4] == R(-1));
  CHECK(L[6][7] == R(1));
  CHECK(L[7][7] == R(0));
}

TEST_CASE("left multiplications represent the bracket") {
  SuperAlgebra a01 = instantiate("A01");
  for (const char* key : {"B1", "B2alpha", "B2tilde_m1"}) {
    SuperAlgebra A = instantiate(key);
    std::vector<Mat> ops;
    for (int i = 0; i < A.dim(); ++i) ops.push_back(left_mult_operator(A, i));
    CHECK(check_representation(a01, ops).verdict);
  }
}

TEST_CASE("even restrictions recover the four-dimensional tables") {
  CHECK(same_constants(restrict_even(instantiate("B1")), instantiate("A1")));
  CHECK(same_constants(restrict_even(instantiate("B2alpha")), instantiate("A2alpha")));
  CHECK(same_constants(restrict_even(instantiate("B2tilde_m1")),
                       instantiate("A2alpha", Rational(-1))));
}

TEST_CASE("right identities of the catalog structures") {
  SuperAlgebra b1 = instantiate("B1");
  std::vector<Element> ids = find_right_identities(b1);
  REQUIRE(ids.size() == 2);  // one affine direction
  CHECK(ids[0].coords == std::vector<RatFun>{R(1), R(0), R(0), R(1), R(0), R(0), R(0), R(0)});
  CHECK(ids[1].coords[6] == R(1));  // the direction is the third odd vector
  CHECK(make_element(b1, ids[1].coords).homogeneous_parity() == 1);
  Element e;
  CHECK(unique_even_right_identity(b1, e));
  CHECK(e.coords[0] == R(1));
  CHECK(e.coords[3] == R(1));

  std::vector<Element> ids2 = find_right_identities(instantiate("B2alpha"));
  REQUIRE(ids2.size() == 1);
  CHECK(ids2[0].coords[2] == RatFun::parameter());
  CHECK(ids2[0].coords[3] == R(1));

  std::vector<Element> ids3 = find_right_identities(instantiate("B2tilde_m1"));
  REQUIRE(ids3.size() == 1);
  CHECK(ids3[0].coords[2] == R(-1));
  CHECK(ids3[0].coords[3] == R(1));

  // the third even table is unital: x4 works from both sides
  SuperAlgebra a3 = instantiate("A3");
  std::vector<Element> ids4 = find_right_identities(a3);
  REQUIRE(ids4.size() == 1);
  CHECK(ids4[0].coords == std::vector<RatFun>{R(0), R(0), R(0), R(1)});
  for (int i = 0; i < 4; ++i) {
    Element left = multiply(a3, ids4[0], basis_element(a3, i));
    CHECK(left.coords == basis_element(a3, i).coords);
  }
}

TEST_CASE("associativity holds in the even family exactly at zero") {
  CHECK(check_associative(instantiate("A2alpha", Rational(0))).verdict);
  CheckReport formal = check_associative(instantiate("A2alpha"));
  CHECK_FALSE(formal.verdict);

  SuperAlgebra b20 = instantiate("B2alpha", Rational(0));
  CheckReport rep = check_associative(b20);
  CHECK_FALSE(rep.verdict);
  bool found = false;
  for (const auto& v : rep.violations)
    if (v.triple == std::array<int, 3>{2, 2, 4}) {
      found = true;
      CHECK(v.residual[4] == R(2));  // the defect lands on the first odd vector, doubled
    }
  CHECK(found);
  Element assoc = associator(b20, basis_element(b20, 2), basis_element(b20, 2),
                             basis_element(b20, 4));
  CHECK(assoc.coords[4] == R(2));
}

TEST_CASE("a seed odd vector generates everything") {
  SuperAlgebra b1 = instantiate("B1");
  CHECK(ideal_closure(b1, basis_element(b1, 4)).size() == 8);
}

TEST_CASE("the shipped corrections are exactly two constants of one entry") {
  const auto& patches = transcription_patches();
  REQUIRE(patches.size() == 2);
  for (const auto& p : patches) {
    CHECK(p.key == "B2alpha");
    RatFun printed = parse_scalar(p.printed);
    RatFun corrected = parse_scalar(p.corrected);
    CHECK_FALSE(printed == corrected);
    // printed and corrected collide exactly at 0 and 1
    CHECK(printed.eval(Rational(0)) == corrected.eval(Rational(0)));
    CHECK(printed.eval(Rational(1)) == corrected.eval(Rational(1)));
    CHECK_FALSE(printed.eval(Rational(2)) == corrected.eval(Rational(2)));
  }
  SuperAlgebra verbatim = instantiate_verbatim("B2alpha");
  SuperAlgebra shipped = instantiate("B2alpha");
  int differing = 0;
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      const auto& tv = verbatim.product(i, j);
      const auto& ts = shipped.product(i, j);
      REQUIRE(tv.size() == ts.size());
      for (std::size_t t = 0; t < tv.size(); ++t)
        if (!(tv[t].second == ts[t].second)) ++differing;
    }
  CHECK(differing == 2);
}

TEST_CASE("the verbatim transcription fails validation only where documented") {
  CheckReport rep = transcription_discrepancies("B2alpha");
  CHECK_FALSE(rep.verdict);
  for (const auto& v : rep.violations) {
    // each residual dies at both collision points of the corrections
    for (const auto& c : v.residual) {
      CHECK(c.eval(Rational(0)) == Rational(0));
      CHECK(c.eval(Rational(1)) == Rational(0));
    }
  }
  CHECK(transcription_discrepancies("B1").verdict);
  CHECK(transcription_discrepancies("B2tilde_m1").verdict);
  CHECK(transcription_discrepancies("A1").verdict);
  CHECK(transcription_discrepancies("A2alpha").verdict);
  CHECK(transcription_discrepancies("A3").verdict);
  CHECK(transcription_discrepancies("A01").verdict);
  CHECK(transcription_discrepancies("gl2").verdict);
}

TEST_CASE("single-constant corruption never passes both checkers") {
  SuperAlgebra b1 = instantiate("B1");
  std::vector<std::array<int, 3>> nonzero;
  for (const auto& [ij, terms] : b1.constants())
    for (const auto& [k, c] : terms) {
      (void)c;
      nonzero.push_back({ij.first, ij.second, k});
    }
  REQUIRE(nonzero.size() >= 50);
  for (const auto& [i, j, k] : nonzero) {
    SuperAlgebra mutant(b1.parities(), b1.names());
    for (const auto& [ij, terms] : b1.constants())
      for (const auto& [kk, c] : terms) mutant.add_constant(ij.first, ij.second, kk, c);
    mutant.add_constant(i, j, k, R(1));
    bool caught = !check_left_symmetric(mutant).verdict ||
                  !check_super_jacobi(sub_adjacent(mutant)).verdict ||
                  !check_compatible(mutant, instantiate("A01")).verdict;
    CHECK(caught);
  }
}

TEST_CASE("catalog listing is deterministic and complete") {
  const auto& entries = list_entries();
  REQUIRE(entries.size() == 9);
  int fixed_lssa_on_a01 = 0;
  bool saw_b2t = false;
  for (const auto& e : entries) {
    if (e.key == "B2tilde_m1") {
      saw_b2t = true;
      CHECK(e.provenance == "Thm 3.4(3)");
    }
    if (e.underlying == "A01" && e.parameters.empty()) ++fixed_lssa_on_a01;
  }
  CHECK(saw_b2t);
  CHECK(fixed_lssa_on_a01 == 2);
  CHECK(entries[0].key == "gl2");
}

TEST_CASE("instantiation errors") {
  CHECK_THROWS_AS(instantiate("nope"), UnknownKey);
  CHECK_THROWS_AS(instantiate("Wn"), MissingParameter);
  CHECK_THROWS_AS(instantiate("B1", Rational(2)), MissingParameter);
  CHECK(instantiate("Wn(3)").dim() == 24);
  CHECK(instantiate("Wn(2)").dim() == 8);
}

TEST_CASE("family decision table covers the whole list") {
  const auto& table = family_table();
  REQUIRE(table.size() == 14);
  int no = 0, exists = 0, open = 0;
  for (const auto& row : table) {
    switch (row.verdict) {
      case FamilyVerdictKind::NoCompatibleLSSA: ++no; break;
      case FamilyVerdictKind::ExistsConstruction: ++exists; break;
      case FamilyVerdictKind::OpenOrKnownFamily: ++open; break;
    }
    if (row.verdict == FamilyVerdictKind::NoCompatibleLSSA) {
      bool lemma_backed = row.rule.find("Lemma 2.1") != std::string::npos &&
                          (row.rule.find("Lemma 2.2") != std::string::npos ||
                           row.rule.find("Lemma 2.3") != std::string::npos);
      CHECK(lemma_backed);
    }
    if (row.verdict == FamilyVerdictKind::ExistsConstruction)
      CHECK_FALSE(row.construction_key.empty());
  }
  CHECK(no == 12);
  CHECK(exists == 1);
  CHECK(open == 1);
}

TEST_CASE("family verdicts for concrete members") {
  FamilyVerdict v = obstruction_report("B(m,n)", {Rational(1), Rational(1)});
  CHECK(v.verdict == FamilyVerdictKind::NoCompatibleLSSA);
  CHECK(v.even_part == "B_1 + C_1 (semisimple)");
  CHECK(v.rule == "Lemma 2.1 + Lemma 2.2");

  v = obstruction_report("W(n)", {Rational(3)});
  CHECK(v.verdict == FamilyVerdictKind::ExistsConstruction);
  CHECK(v.construction_key == "Wn(3)");

  v = obstruction_report("A(m,n)", {Rational(1), Rational(2)});
  CHECK(v.verdict == FamilyVerdictKind::OpenOrKnownFamily);

  v = obstruction_report("A(m,n)", {Rational(0), Rational(1)});
  CHECK(v.verdict == FamilyVerdictKind::ExistsConstruction);
  CHECK(v.construction_key.find("B2tilde_m1") != std::string::npos);

  v = obstruction_report("A(m,n)", {Rational(2), Rational(2)});
  CHECK(v.verdict == FamilyVerdictKind::NoCompatibleLSSA);
  CHECK(v.even_part == "A_2 + A_2 (semisimple)");

  v = obstruction_report("C(n)", {Rational(3)});
  CHECK(v.rule == "Lemma 2.1 + Lemma 2.3");

  v = obstruction_report("D(2,1;a)", {Rational(7, 3)});
  CHECK(v.verdict == FamilyVerdictKind::NoCompatibleLSSA);
  CHECK(v.note.find("orbit") != std::string::npos);

  CHECK(obstruction_report("S~(n)", {Rational(4)}).verdict ==
        FamilyVerdictKind::NoCompatibleLSSA);
  CHECK(obstruction_report("H(n)", {Rational(5)}).even_part.find("so(5)") != std::string::npos);
}

TEST_CASE("family parameter ranges are enforced") {
  CHECK_THROWS_AS(obstruction_report("D(2,1;a)", {Rational(0)}), ParameterOutOfRange);
  CHECK_THROWS_AS(obstruction_report("D(2,1;a)", {Rational(-1)}), ParameterOutOfRange);
  CHECK_THROWS_AS(obstruction_report("W(n)", {Rational(2)}), ParameterOutOfRange);
  CHECK_THROWS_AS(obstruction_report("C(n)", {Rational(2)}), ParameterOutOfRange);
  CHECK_THROWS_AS(obstruction_report("S~(n)", {Rational(5)}), ParameterOutOfRange);
  CHECK_THROWS_AS(obstruction_report("A(m,n)", {Rational(0), Rational(0)}), ParameterOutOfRange);
  CHECK_THROWS_AS(obstruction_report("P(n)", {Rational(1)}), ParameterOutOfRange);
  CHECK_THROWS_AS(obstruction_report("X(n)", {Rational(1)}), ParameterOutOfRange);
  CHECK_THROWS_AS(obstruction_report("B(m,n)", {Rational(1, 2), Rational(1)}),
                  ParameterOutOfRange);
}
