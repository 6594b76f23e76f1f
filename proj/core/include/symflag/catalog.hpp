#pragma once

// Catalog of symmetric-pair data ("symflag-catalog/1" JSON files).

#include <string>
#include <string_view>
#include <vector>

#include "symflag/lattice.hpp"
#include "symflag/root_system.hpp"

namespace symflag {

/// Multiplicity shared by every root of a given squared length.
struct MultiplicityRule {
  Rational norm2;
  int m = 1;
};

struct CatalogEntry {
  std::string name;
  std::string kind;  // "group" or "symmetric"
  std::string space;
  std::string cartan_type;
  Matrix gram;
  std::vector<MultiplicityRule> multiplicities;
  std::vector<Vector> lattice_basis;
  Vector base_point;
  int expected_dim = 0;  // sum of m_alpha over R^+
  int space_dim = 0;     // dim G/K = rank + expected_dim
  std::string notes;
};

/// An entry instantiated into its root system, Weyl group and lattice.
class EntryModel {
 public:
  /// Throws InvariantViolation naming the failed check (prefixed by the entry name).
  explicit EntryModel(CatalogEntry entry);

  const CatalogEntry& entry() const { return entry_; }
  const RootSystem& roots() const { return weyl_.roots(); }
  const WeylGroup& weyl() const { return weyl_; }
  const Lattice& lattice() const { return lattice_; }

 private:
  CatalogEntry entry_;
  WeylGroup weyl_;
  Lattice lattice_;
};

/// Parses and shape-checks a catalog document. Throws SchemaError with
/// "line N" for malformed JSON and a JSON pointer for field errors.
std::vector<CatalogEntry> parse_catalog(std::string_view text);

/// parse_catalog plus full instantiation of every entry.
std::vector<CatalogEntry> load_catalog(const std::string& path);

/// The entries shipped with the library (already validated).
const std::vector<CatalogEntry>& builtin_catalog();

/// Throws std::invalid_argument listing the available names.
const CatalogEntry& find_entry(const std::vector<CatalogEntry>& entries, const std::string& name);

}  // namespace symflag
