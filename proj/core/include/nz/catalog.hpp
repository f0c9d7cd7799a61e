#ifndef NZ_CATALOG_HPP
#define NZ_CATALOG_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nz/multipoly.hpp"
#include "nz/potential.hpp"
#include "nz/triangulation.hpp"

namespace nz {

struct CatalogEntry {
  std::string name;
  std::vector<std::string> aliases;
  double expected_volume = 0.0;
  PotentialExpression potential;
  std::optional<Triangulation> triangulation;
  std::vector<std::string> printed_gluing;  // empty when not printed
  std::string printed_longitude;            // empty when not printed
  std::map<std::string, cplx> printed_solution;  // empty when not printed
  std::optional<NewtonMatrix> newton_matrix;
  std::optional<MultiPoly> explicit_apoly;
  // Set when the printed polynomial carries an evident misprint; the
  // corrected polynomial is the one that vanishes on the geometric branch.
  std::optional<MultiPoly> explicit_apoly_corrected;
  bool suspect_typo = false;
  std::string ptb_word;  // monodromy word for bundle entries
  std::string notes;

  // printed_solution in the potential's variable order.
  std::vector<cplx> solution_vector() const;
};

// All 24 entries, parsed once and cached.  The data directory can be
// overridden with the NZFORGE_DATA environment variable; otherwise the
// embedded copies are used.  Throws SchemaError naming the entry on
// malformed data.
const std::vector<CatalogEntry>& load();

// Lookup by name or alias; throws NotFound listing close matches.
const CatalogEntry& get(const std::string& name_or_alias);

}  // namespace nz

#endif  // NZ_CATALOG_HPP
