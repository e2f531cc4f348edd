#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "superlsa/superalgebra.hpp"

namespace superlsa {

struct UnknownKey : std::invalid_argument {
  explicit UnknownKey(const std::string& key) : std::invalid_argument("unknown catalog key: " + key) {}
};
struct MissingParameter : std::invalid_argument {
  explicit MissingParameter(const std::string& what) : std::invalid_argument(what) {}
};

enum class EntryKind { lie_superalgebra, lssa, left_symmetric_algebra };

std::string entry_kind_name(EntryKind k);

struct CatalogEntry {
  std::string key;
  EntryKind kind;
  std::vector<std::string> parameters;  // empty for fixed entries
  std::string underlying;               // Lie-side catalog key, "" if none
  std::string provenance;               // source location string
  std::string constraints;              // parameter ranges, side notes
};

// deterministic order, fixed entries first
const std::vector<CatalogEntry>& list_entries();

// structure constants with the documented corrections applied (the shipped
// default); parametric entries come back symbolic unless alpha is given.
// Wn takes its generator count inline: "Wn(3)".
SuperAlgebra instantiate(const std::string& key, std::optional<Rational> alpha = {});

// the transcription exactly as printed in the source, no corrections
SuperAlgebra instantiate_verbatim(const std::string& key, std::optional<Rational> alpha = {});

// documented corrections distinguishing instantiate from instantiate_verbatim
struct PatchRecord {
  std::string key;
  int i, j, k;            // constant (i, j) -> k
  std::string printed;    // scalar text as transcribed
  std::string corrected;  // scalar text actually shipped
  std::string note;
};
const std::vector<PatchRecord>& transcription_patches();

// machine validation of the verbatim transcription: left symmetry plus
// bracket match against the declared underlying Lie entry, localized
CheckReport transcription_discrepancies(const std::string& key);

}  // namespace superlsa
