#ifndef MUTALAB_TOOLS_REPRO_HPP
#define MUTALAB_TOOLS_REPRO_HPP

#include <string>
#include <vector>

namespace mutalab::repro {

/// Names accepted by `repro`: table-1.2, table-1.4, example-2.8, example-3.2.
const std::vector<std::string>& names();

/// Regenerates one table as plain text. Throws unknown-name.
std::string render(const std::string& name);

}  // namespace mutalab::repro

#endif  // MUTALAB_TOOLS_REPRO_HPP
