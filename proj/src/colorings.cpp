#include "hindlab/colorings.hpp"

#include <algorithm>

#include "hindlab/detail/hash.hpp"

namespace hindlab {

Color log_parity_color_of_count(std::uint64_t count) {
  return color_from_int(log_block_of_count(count) % 2);
}

Color color_set_log_parity(const FinSet& x) {
  if (x.empty()) throw std::domain_error("color_set_log_parity: empty set");
  return log_parity_color_of_count(x.size());
}

Color color_group_elem_log_parity(const GroupElem& g) {
  if (g.is_identity())
    throw std::domain_error("color_group_elem_log_parity: identity element");
  return log_parity_color_of_count(g.support_size());
}

Color color_word_log_parity(const Word& w) {
  if (w.empty()) throw std::domain_error("color_word_log_parity: empty word");
  return log_parity_color_of_count(w.length());
}

SetColoring SetColoring::log_parity() {
  SetColoring c;
  c.kind_ = ColoringKind::log_parity;
  return c;
}

SetColoring SetColoring::seeded_random(std::uint64_t seed) {
  SetColoring c;
  c.kind_ = ColoringKind::seeded_random;
  c.seed_ = seed;
  return c;
}

SetColoring SetColoring::table(const Universe& universe,
                               std::span<const std::pair<FinSet, Color>> entries) {
  SetColoring c;
  c.kind_ = ColoringKind::table;
  c.table_n_ = universe.size();
  for (const auto& [set, color] : entries) {
    if (set.empty()) throw std::invalid_argument("SetColoring::table: empty set entry");
    if (set.universe_size() != universe.size())
      throw std::invalid_argument("SetColoring::table: entry universe mismatch");
    if (!c.table_.emplace(set.bits(), color).second)
      throw std::invalid_argument("SetColoring::table: duplicate entry for " + set.str());
  }
  const std::uint64_t expected = universe.full_mask();
  if (c.table_.size() != expected)
    throw std::invalid_argument(
        "SetColoring::table: not total, " + std::to_string(c.table_.size()) + " of " +
        std::to_string(expected) + " nonempty subsets colored");
  return c;
}

SetColoring SetColoring::from_json(const nlohmann::json& j, const Universe& universe) {
  if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string())
    throw std::invalid_argument("coloring spec: expected object with string \"kind\"");
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "log_parity") return log_parity();
  if (kind == "random") {
    const bool usable =
        j.contains("seed") &&
        (j.at("seed").is_number_unsigned() ||
         (j.at("seed").is_number_integer() && j.at("seed").get<std::int64_t>() >= 0));
    if (!usable)
      throw std::invalid_argument(
          "coloring spec: random kind needs nonnegative integer \"seed\"");
    return seeded_random(j.at("seed").get<std::uint64_t>());
  }
  if (kind == "table") {
    if (!j.contains("entries") || !j.at("entries").is_array())
      throw std::invalid_argument("coloring spec: table kind needs \"entries\" array");
    std::vector<std::pair<FinSet, Color>> entries;
    for (const auto& e : j.at("entries")) {
      if (!e.is_array() || e.size() != 2 || !e.at(0).is_array())
        throw std::invalid_argument(
            "coloring spec: each entry must be [[elements...], color]");
      std::vector<int> elems;
      for (const auto& v : e.at(0)) {
        if (!v.is_number_integer())
          throw std::invalid_argument("coloring spec: non-integer element");
        elems.push_back(v.get<int>());
      }
      if (!std::is_sorted(elems.begin(), elems.end()))
        throw std::invalid_argument("coloring spec: entry elements must be sorted");
      if (!e.at(1).is_number_integer())
        throw std::invalid_argument("coloring spec: color must be 0 or 1");
      entries.emplace_back(FinSet::from_elements(universe, elems),
                           color_from_int(e.at(1).get<int>()));
    }
    return table(universe, entries);
  }
  throw std::invalid_argument("coloring spec: unknown kind \"" + kind + "\"");
}

nlohmann::json SetColoring::to_json() const {
  nlohmann::ordered_json j;
  switch (kind_) {
    case ColoringKind::log_parity:
      j["kind"] = "log_parity";
      break;
    case ColoringKind::seeded_random:
      j["kind"] = "random";
      j["seed"] = seed_;
      break;
    case ColoringKind::table: {
      j["kind"] = "table";
      Universe u(table_n_);
      std::vector<std::uint64_t> keys;
      keys.reserve(table_.size());
      for (const auto& [bits, color] : table_) keys.push_back(bits);
      std::sort(keys.begin(), keys.end());
      auto entries = nlohmann::ordered_json::array();
      for (std::uint64_t bits : keys) {
        FinSet s(u, bits);
        entries.push_back(
            nlohmann::ordered_json::array({s.elements(), to_int(table_.at(bits))}));
      }
      j["entries"] = std::move(entries);
      break;
    }
  }
  return j;
}

Color SetColoring::color(const FinSet& x) const {
  if (x.empty()) throw std::domain_error("SetColoring::color: empty set");
  switch (kind_) {
    case ColoringKind::log_parity:
      return log_parity_color_of_count(x.size());
    case ColoringKind::seeded_random: {
      detail::KeyedHash h(seed_);
      return (h.absorb(x.bits()).digest() & 1) ? Color::one : Color::zero;
    }
    case ColoringKind::table: {
      auto it = table_.find(x.bits());
      if (it == table_.end() || x.universe_size() > table_n_)
        throw std::out_of_range("SetColoring::color: " + x.str() +
                                " is outside the table's universe");
      return it->second;
    }
  }
  throw std::logic_error("SetColoring::color: bad kind");
}

std::string SetColoring::describe() const {
  switch (kind_) {
    case ColoringKind::log_parity:
      return "log_parity";
    case ColoringKind::seeded_random:
      return "random(seed=" + std::to_string(seed_) + ")";
    case ColoringKind::table:
      return "table(" + std::to_string(table_.size()) + " entries, n=" +
             std::to_string(table_n_) + ")";
  }
  return "?";
}

std::optional<Color> is_monochromatic(const SetColoring& coloring,
                                      std::span<const FinSet> items) {
  if (items.empty()) throw std::invalid_argument("is_monochromatic: no items");
  Color first = coloring.color(items.front());
  for (std::size_t i = 1; i < items.size(); ++i)
    if (coloring.color(items[i]) != first) return std::nullopt;
  return first;
}

}  // namespace hindlab
