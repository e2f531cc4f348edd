#include "superlsa/obstruction.hpp"

namespace superlsa {

std::string family_verdict_name(FamilyVerdictKind v) {
  switch (v) {
    case FamilyVerdictKind::NoCompatibleLSSA: return "NoCompatibleLSSA";
    case FamilyVerdictKind::ExistsConstruction: return "ExistsConstruction";
    case FamilyVerdictKind::OpenOrKnownFamily: return "OpenOrKnownFamily";
  }
  return "";
}

namespace {

constexpr const char* kSemisimpleRule = "Lemma 2.1 + Lemma 2.2";
constexpr const char* kReductiveRule = "Lemma 2.1 + Lemma 2.3";
constexpr const char* kOrbitNote =
    "parameters in one orbit of the order-six group generated by a -> -1-a and a -> 1/a "
    "give isomorphic superalgebras";

std::string num(const Rational& q) { return rational_to_string(q); }

[[noreturn]] void out_of_range(const std::string& what) { throw ParameterOutOfRange(what); }

void need_params(const std::string& family, const std::vector<Rational>& params, std::size_t n) {
  if (params.size() != n)
    out_of_range(family + " takes " + std::to_string(n) + " parameter(s), got " +
                 std::to_string(params.size()));
}

long long as_int(const std::string& family, const Rational& q) {
  if (rat_den(q) != 1) out_of_range(family + " parameters must be integers");
  return static_cast<long long>(rat_num(q));
}

}  // namespace

const std::vector<FamilyVerdict>& family_table() {
  static const std::vector<FamilyVerdict> table = {
      {"A(m,n), n>m>=0", "reductive even part, no obstruction applies",
       FamilyVerdictKind::OpenOrKnownFamily, "Question 3.7", "",
       "A(0,1) carries the explicit structures B1, B2alpha, B2tilde_m1"},
      {"A(n,n), n>=1", "A_n + A_n (semisimple)", FamilyVerdictKind::NoCompatibleLSSA,
       kSemisimpleRule, "", ""},
      {"B(m,n), m>=0, n>=1", "B_m + C_n (semisimple)", FamilyVerdictKind::NoCompatibleLSSA,
       kSemisimpleRule, "", ""},
      {"C(n), n>=3", "C_{n-1} + C (reductive, not of type A)",
       FamilyVerdictKind::NoCompatibleLSSA, kReductiveRule, "", ""},
      {"D(m,n), m>=2, n>=1", "D_m + C_n (semisimple)", FamilyVerdictKind::NoCompatibleLSSA,
       kSemisimpleRule, "", ""},
      {"D(2,1;a), a != 0, -1", "A_1 + A_1 + A_1 (semisimple)",
       FamilyVerdictKind::NoCompatibleLSSA, kSemisimpleRule, "", kOrbitNote},
      {"F(4)", "B_3 + A_1 (semisimple)", FamilyVerdictKind::NoCompatibleLSSA, kSemisimpleRule,
       "", ""},
      {"G(3)", "G_2 + A_1 (semisimple)", FamilyVerdictKind::NoCompatibleLSSA, kSemisimpleRule,
       "", ""},
      {"P(n), n>=2", "A_n (semisimple)", FamilyVerdictKind::NoCompatibleLSSA, kSemisimpleRule,
       "", ""},
      {"Q(n), n>=2", "A_n (semisimple)", FamilyVerdictKind::NoCompatibleLSSA, kSemisimpleRule,
       "", ""},
      {"W(n), n>=3", "degree-zero part gl(n)", FamilyVerdictKind::ExistsConstruction,
       "Sec. 1 construction", "Wn", ""},
      {"S(n), n>=4", "degree-zero part sl(n) (simple)", FamilyVerdictKind::NoCompatibleLSSA,
       kSemisimpleRule, "", "obstruction runs through the Z-degree-zero part"},
      {"S~(n), n>=4 even", "degree-zero part sl(n) (simple)",
       FamilyVerdictKind::NoCompatibleLSSA, kSemisimpleRule, "",
       "obstruction runs through the Z-degree-zero part"},
      {"H(n), n>=5", "degree-zero part so(n) (simple)", FamilyVerdictKind::NoCompatibleLSSA,
       kSemisimpleRule, "", "obstruction runs through the Z-degree-zero part"},
  };
  return table;
}

FamilyVerdict obstruction_report(const std::string& family, const std::vector<Rational>& params) {
  // series name up to the first parenthesis, "S~" spelled Stilde also accepted
  std::string name = family.substr(0, family.find('('));
  if (name == "Stilde") name = "S~";

  auto row = [&](std::size_t idx) { return family_table()[idx]; };

  if (name == "A") {
    need_params(family, params, 2);
    long long m = as_int(family, params[0]), n = as_int(family, params[1]);
    if (m < 0 || n < 0) out_of_range("A(m,n) needs m, n >= 0");
    if (m == n) {
      if (n < 1) out_of_range("A(n,n) needs n >= 1");
      FamilyVerdict v = row(1);
      v.family = "A(" + std::to_string(n) + "," + std::to_string(n) + ")";
      v.even_part = "A_" + std::to_string(n) + " + A_" + std::to_string(n) + " (semisimple)";
      return v;
    }
    if (m > n) out_of_range("A(m,n) is listed with n > m >= 0");
    FamilyVerdict v = row(0);
    v.family = "A(" + std::to_string(m) + "," + std::to_string(n) + ")";
    if (m == 0 && n == 1) {
      v.verdict = FamilyVerdictKind::ExistsConstruction;
      v.rule = "Thm 3.4";
      v.construction_key = "B1, B2alpha, B2tilde_m1";
      v.even_part = "gl(2)";
      v.note = "complete compatible classification known";
    }
    return v;
  }
  if (name == "B") {
    need_params(family, params, 2);
    long long m = as_int(family, params[0]), n = as_int(family, params[1]);
    if (m < 0 || n < 1) out_of_range("B(m,n) needs m >= 0, n >= 1");
    FamilyVerdict v = row(2);
    v.family = "B(" + std::to_string(m) + "," + std::to_string(n) + ")";
    v.even_part = "B_" + std::to_string(m) + " + C_" + std::to_string(n) + " (semisimple)";
    return v;
  }
  if (name == "C") {
    need_params(family, params, 1);
    long long n = as_int(family, params[0]);
    if (n < 3) out_of_range("C(n) needs n >= 3");
    FamilyVerdict v = row(3);
    v.family = "C(" + std::to_string(n) + ")";
    v.even_part = "C_" + std::to_string(n - 1) + " + C (reductive, not of type A)";
    return v;
  }
  if (name == "D(2,1;a)" || name == "D(2,1;a" || family.rfind("D(2,1", 0) == 0) {
    need_params(family, params, 1);
    const Rational& al = params[0];
    if (al == 0 || al == -1) out_of_range("D(2,1;a) needs a != 0, -1");
    FamilyVerdict v = row(5);
    v.family = "D(2,1;" + num(al) + ")";
    return v;
  }
  if (name == "D") {
    need_params(family, params, 2);
    long long m = as_int(family, params[0]), n = as_int(family, params[1]);
    if (m < 2 || n < 1) out_of_range("D(m,n) needs m >= 2, n >= 1");
    FamilyVerdict v = row(4);
    v.family = "D(" + std::to_string(m) + "," + std::to_string(n) + ")";
    v.even_part = "D_" + std::to_string(m) + " + C_" + std::to_string(n) + " (semisimple)";
    return v;
  }
  if (name == "F") {
    if (!params.empty() && !(params.size() == 1 && params[0] == 4))
      out_of_range("F takes no parameters beyond the fixed 4");
    return row(6);
  }
  if (name == "G") {
    if (!params.empty() && !(params.size() == 1 && params[0] == 3))
      out_of_range("G takes no parameters beyond the fixed 3");
    return row(7);
  }
  if (name == "P" || name == "Q") {
    need_params(family, params, 1);
    long long n = as_int(family, params[0]);
    if (n < 2) out_of_range(name + "(n) needs n >= 2");
    FamilyVerdict v = row(name == "P" ? 8 : 9);
    v.family = name + "(" + std::to_string(n) + ")";
    v.even_part = "A_" + std::to_string(n) + " (semisimple)";
    return v;
  }
  if (name == "W") {
    need_params(family, params, 1);
    long long n = as_int(family, params[0]);
    if (n < 3) out_of_range("W(n) needs n >= 3");
    FamilyVerdict v = row(10);
    v.family = "W(" + std::to_string(n) + ")";
    v.even_part = "degree-zero part gl(" + std::to_string(n) + ")";
    v.construction_key = "Wn(" + std::to_string(n) + ")";
    return v;
  }
  if (name == "S" || name == "S~") {
    need_params(family, params, 1);
    long long n = as_int(family, params[0]);
    if (n < 4) out_of_range(name + "(n) needs n >= 4");
    if (name == "S~" && n % 2 != 0) out_of_range("S~(n) needs n even");
    FamilyVerdict v = row(name == "S" ? 11 : 12);
    v.family = name + "(" + std::to_string(n) + ")";
    v.even_part = "degree-zero part sl(" + std::to_string(n) + ") (simple)";
    return v;
  }
  if (name == "H") {
    need_params(family, params, 1);
    long long n = as_int(family, params[0]);
    if (n < 5) out_of_range("H(n) needs n >= 5");
    FamilyVerdict v = row(13);
    v.family = "H(" + std::to_string(n) + ")";
    v.even_part = "degree-zero part so(" + std::to_string(n) + ") (simple)";
    return v;
  }
  out_of_range("unknown family " + family);
}

}  // namespace superlsa
