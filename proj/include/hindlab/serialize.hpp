#ifndef HINDLAB_SERIALIZE_HPP
#define HINDLAB_SERIALIZE_HPP

#include <json.hpp>

#include "hindlab/groups.hpp"
#include "hindlab/search.hpp"
#include "hindlab/setcore.hpp"

namespace hindlab {

/// Sorted element list.
nlohmann::ordered_json set_to_json(const FinSet& x);

/// List of sorted element lists, members in family order.
nlohmann::ordered_json family_to_json(const DisjointFamily& fam);

/// {"max_size":..., "witness":[[...],...], "color":..., "nodes":...,
///  "exhausted":...}; witness and color are null when absent.
nlohmann::ordered_json search_result_to_json(const SearchResult& r);

/// List of [coordinate, numerator, denominator, tag] quadruples with
/// coordinates ascending; tag is "torsion" or "torsion_free".
nlohmann::ordered_json group_elem_to_json(const GroupElem& g);
GroupElem group_elem_from_json(const nlohmann::json& j);

}  // namespace hindlab

#endif
