#ifndef MUTALAB_CATALOG_HPP
#define MUTALAB_CATALOG_HPP

#include <string>
#include <utility>
#include <vector>

#include "mutalab/quiver.hpp"

namespace mutalab {

struct CatalogEntry {
  std::string name;
  std::vector<int> params;
  // Letter label per vertex, e.g. {"k", "v", "j", "i"}; used only for printing.
  std::vector<std::string> labels;
  ValuedQuiver quiver;

  /// "Name" or "Name(p1,p2)".
  std::string spec() const;
};

struct CatalogName {
  std::string name;
  std::string params;  // human-readable parameter signature, "" if none
  std::string summary;
};

const std::vector<CatalogName>& catalog_names();

/// Throws unknown-name, bad-params.
CatalogEntry build_entry(const std::string& name, const std::vector<int>& params = {});
inline ValuedQuiver build(const std::string& name, const std::vector<int>& params = {}) {
  return build_entry(name, params).quiver;
}

/// Parses "Name" or "Name(p1,...)" and builds it.
CatalogEntry build_spec(const std::string& spec);

/// A fixed list of parameter instances covering every builder, used for
/// recognition.
const std::vector<CatalogEntry>& catalog_instances();

/// Catalog instances q is symmetric to with epsilon = +1, with the witness
/// mapping the catalog quiver onto q.
std::vector<std::pair<std::string, SymmetryWitness>> match_catalog(const ValuedQuiver& q);

}  // namespace mutalab

#endif  // MUTALAB_CATALOG_HPP
