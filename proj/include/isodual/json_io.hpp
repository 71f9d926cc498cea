#pragma once

#include <string>

#include "json.hpp"

#include "isodual/classifier.hpp"
#include "isodual/homset.hpp"
#include "isodual/ideal.hpp"
#include "isodual/poset.hpp"

namespace isodual {

using Json = nlohmann::ordered_json;

Json to_json(const Poset& p);
Poset poset_from_json(const Json& j);

// A map serializes as its image array; the posets travel separately.
Json to_json(const IsotoneMap& phi);

// Sorted cell list [[p,q], ...] for one mask on a grid.
Json cells_to_json(const Grid& grid, Mask cells);

Json to_json(const Ideal& ideal);
Ideal ideal_from_json(const Json& j);

Json to_json(const Witness& w);
Json to_json(const PairReport& report);

// Argument convention shared by the command front end: inline JSON when
// the text starts with '{', otherwise a file path.
Json parse_json_arg(const std::string& arg);

}  // namespace isodual
