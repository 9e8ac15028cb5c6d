// JSON (de)serialization for the CLI surface: keyed diagrams, Pluecker
// sets, necklaces and posets.
#pragma once

#include "qgr/positroid.hpp"
#include "qgr/shapes.hpp"

#include <json.hpp>

#include <string>

namespace qgr {

using Json = nlohmann::json;

// {"m":..,"n":..,"gamma":[..],"black":[[i,j],..]}
Json key_to_json(const HPrimeKey& key);

// Validates gamma consistency and the Le condition; throws invalid_argument
// with a diagnostic naming the violated invariant.
HPrimeKey key_from_json(const Json& j);

Json index_set_to_json(const IndexSet& s);
IndexSet index_set_from_json(const Json& j);

Json plucker_set_to_json(const PluckerSet& pset);
PluckerSet plucker_set_from_json(const Json& j);

Json necklace_to_json(const GrassmannNecklace& neck);
GrassmannNecklace necklace_from_json(const Json& j);

// {"nodes":[key-or-irrelevant...],"hasse_edges":[[a,b],...]}; edge [a,b]
// means node a is covered by node b.
Json poset_to_json(const HPrimePoset& poset);

// Accepts the emitted schema: the last node must be the irrelevant top and
// the edges must reference valid nodes. The containment closure is not part
// of the wire format and is left empty.
HPrimePoset poset_from_json(const Json& j);

std::string poset_to_dot(const HPrimePoset& poset);

// comma-separated positive integers, e.g. "2,4,5"
IndexSet parse_index_list(const std::string& text);

}  // namespace qgr
