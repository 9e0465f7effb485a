#ifndef MUTALAB_IO_HPP
#define MUTALAB_IO_HPP

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "mutalab/decide.hpp"
#include "mutalab/exchange_graph.hpp"
#include "mutalab/loops.hpp"
#include "mutalab/quiver.hpp"

// JSON documents use 1-based vertex numbers for words, sigma and frozen lists;
// keys are sorted and output is compact so dumps are byte-stable.
namespace mutalab::io {

using nlohmann::json;

json to_json(const ValuedQuiver& q);
/// {"n", "B", "d"?, "frozen"?}. Throws malformed-json, or the quiver error.
ValuedQuiver quiver_from_json(const json& doc);

json to_json(const Verdict& v);
json to_json(const ExchangeGraph& g);
json to_json(const ClassReport& r);
json to_json(const SymmetryWitness& w);
json to_json(const LoopCertificate& c);
LoopCertificate certificate_from_json(const json& doc);
json to_json(const LoopVerdict& v);
json to_json(const CrossValidation& c);
json word_to_json(const MutationWord& w);

/// Parses text as JSON; throws malformed-json.
json parse(const std::string& text);
/// Reads a whole file; throws file-not-found.
std::string read_file(const std::string& path);

/// Nodes "i (d=d_i)", edges labelled "(d_ij,d_ji)". Frozen vertices are boxes.
std::string to_dot(const ValuedQuiver& q, const std::vector<std::string>& labels = {});
/// One node per class member, arcs labelled by the 1-based mutation vertex.
/// Each undirected pair of arcs is drawn once.
std::string to_dot(const ExchangeGraph& g);

}  // namespace mutalab::io

#endif  // MUTALAB_IO_HPP
