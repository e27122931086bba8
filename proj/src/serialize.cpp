#include "hindlab/serialize.hpp"

namespace hindlab {

nlohmann::ordered_json set_to_json(const FinSet& x) {
  return nlohmann::ordered_json(x.elements());
}

nlohmann::ordered_json family_to_json(const DisjointFamily& fam) {
  auto out = nlohmann::ordered_json::array();
  for (const FinSet& m : fam.members()) out.push_back(set_to_json(m));
  return out;
}

nlohmann::ordered_json search_result_to_json(const SearchResult& r) {
  nlohmann::ordered_json j;
  j["max_size"] = r.max_size;
  j["witness"] = r.witness ? family_to_json(*r.witness) : nlohmann::ordered_json(nullptr);
  j["color"] = r.witness_color ? nlohmann::ordered_json(to_int(*r.witness_color))
                               : nlohmann::ordered_json(nullptr);
  j["nodes"] = r.nodes_expanded;
  j["exhausted"] = r.exhausted;
  return j;
}

nlohmann::ordered_json group_elem_to_json(const GroupElem& g) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& [coord, v] : g.entries()) {
    out.push_back(nlohmann::ordered_json::array(
        {coord, v.value().numerator(), v.value().denominator(),
         v.tag() == ComponentTag::torsion ? "torsion" : "torsion_free"}));
  }
  return out;
}

GroupElem group_elem_from_json(const nlohmann::json& j) {
  if (!j.is_array())
    throw std::invalid_argument("group element: expected a list of quadruples");
  std::vector<std::pair<Coord, CircleValue>> entries;
  for (const auto& q : j) {
    if (!q.is_array() || q.size() != 4 || !q.at(0).is_number_integer() ||
        !q.at(1).is_number_integer() || !q.at(2).is_number_integer() ||
        !q.at(3).is_string())
      throw std::invalid_argument(
          "group element: each entry must be [coordinate, numerator, denominator, tag]");
    const std::string tag = q.at(3).get<std::string>();
    if (tag != "torsion" && tag != "torsion_free")
      throw std::invalid_argument("group element: tag must be torsion or torsion_free");
    entries.emplace_back(
        q.at(0).get<Coord>(),
        CircleValue::of(Rational(q.at(1).get<long long>(), q.at(2).get<long long>()),
                        tag == "torsion" ? ComponentTag::torsion
                                         : ComponentTag::torsion_free));
  }
  return GroupElem::from_entries(entries);
}

}  // namespace hindlab
