#ifndef HINDLAB_COLORINGS_HPP
#define HINDLAB_COLORINGS_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hindlab/groups.hpp"
#include "hindlab/setcore.hpp"
#include "hindlab/words.hpp"

namespace hindlab {

enum class Color : std::uint8_t { zero = 0, one = 1 };

constexpr Color flip(Color c) { return c == Color::zero ? Color::one : Color::zero; }
constexpr int to_int(Color c) { return static_cast<int>(c); }
constexpr Color color_from_int(int v) {
  if (v != 0 && v != 1) throw std::invalid_argument("Color: value must be 0 or 1");
  return v == 0 ? Color::zero : Color::one;
}

/// Parity of the log block of a positive count.
Color log_parity_color_of_count(std::uint64_t count);

/// Log-parity colorings of the three object kinds, sharing one core with
/// the size functional swapped: |x|, |supp(g)|, l(w).
Color color_set_log_parity(const FinSet& x);
Color color_group_elem_log_parity(const GroupElem& g);
Color color_word_log_parity(const Word& w);

enum class ColoringKind { log_parity, table, seeded_random };

/// A total 2-coloring of the nonempty subsets of a universe. Pure: the
/// color depends only on (kind, seed/table, element bits), never on
/// evaluation order, so concurrent queries are safe.
class SetColoring {
 public:
  static SetColoring log_parity();
  static SetColoring seeded_random(std::uint64_t seed);

  /// Table coloring; checked total over the nonempty subsets of `universe`.
  static SetColoring table(const Universe& universe,
                           std::span<const std::pair<FinSet, Color>> entries);

  /// Coloring spec format:
  ///   {"kind":"log_parity"}
  ///   {"kind":"random","seed":<u64>}
  ///   {"kind":"table","entries":[[<sorted element list>,<0|1>],...]}
  /// `universe` bounds the totality check for table colorings (ignored
  /// otherwise).
  static SetColoring from_json(const nlohmann::json& j, const Universe& universe);
  nlohmann::json to_json() const;

  Color color(const FinSet& x) const;

  ColoringKind kind() const { return kind_; }
  std::uint64_t seed() const { return seed_; }

  /// True when the color depends only on |x|; enables the size-multiset
  /// symmetry reduction in search.
  bool permutation_invariant() const { return kind_ == ColoringKind::log_parity; }

  /// Human-readable spec echo for reports.
  std::string describe() const;

 private:
  SetColoring() = default;

  ColoringKind kind_ = ColoringKind::log_parity;
  std::uint64_t seed_ = 0;
  int table_n_ = 0;
  std::unordered_map<std::uint64_t, Color> table_;
};

/// Common color of all items, or absent when they disagree.
std::optional<Color> is_monochromatic(const SetColoring& coloring,
                                      std::span<const FinSet> items);

}  // namespace hindlab

#endif
