#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "superlsa/rational.hpp"

namespace superlsa {

struct ParameterOutOfRange : std::domain_error {
  explicit ParameterOutOfRange(const std::string& what) : std::domain_error(what) {}
};

enum class FamilyVerdictKind { NoCompatibleLSSA, ExistsConstruction, OpenOrKnownFamily };

std::string family_verdict_name(FamilyVerdictKind v);

struct FamilyVerdict {
  std::string family;           // series with parameter constraints
  std::string even_part;        // obstruction-relevant part, as recorded
  FamilyVerdictKind verdict;
  std::string rule;             // deciding rule citation, stored as data
  std::string construction_key; // catalog key(s) when a construction exists
  std::string note;
};

// the full decision table over the simple-family list, one row per series
const std::vector<FamilyVerdict>& family_table();

// verdict for a concrete member; params are the series parameters in order
// (the D(2,1;a) parameter is rational)
FamilyVerdict obstruction_report(const std::string& family, const std::vector<Rational>& params);

}  // namespace superlsa
