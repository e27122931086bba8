#ifndef HINDLAB_SEARCH_HPP
#define HINDLAB_SEARCH_HPP

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "hindlab/colorings.hpp"
#include "hindlab/setcore.hpp"

namespace hindlab {

struct SearchConfig {
  Universe universe;
  SetColoring coloring;
  /// Stop as soon as a family of this size is found (result then has
  /// exhausted = false).
  std::optional<int> target_size;
  /// Depth cap; families larger than this are not explored (fu_closure
  /// guard). Must be in [1, 20].
  int max_family_size = 20;
  std::optional<std::chrono::milliseconds> time_budget;
  int thread_count = 1;
};

struct SearchResult {
  int max_size = 0;
  std::optional<DisjointFamily> witness;
  std::optional<Color> witness_color;
  std::uint64_t nodes_expanded = 0;
  /// True when the space of families of size <= max_family_size was fully
  /// explored, so max_size is exact rather than a lower bound.
  bool exhausted = false;
};

/// Maximum pairwise-disjoint family whose full FU closure is monochromatic.
///
/// Backtracking over candidate sets in (size, bit pattern) order; a family
/// is extended only by disjoint sets whose added FU elements ({s} and
/// s union c for realized c) keep the common color.  Branch-and-bound
/// prunes branches that cannot exceed the best found.  For permutation-
/// invariant colorings the search runs over member-size multisets instead
/// (single-threaded; the space is tiny).  With thread_count > 1 the
/// general path splits on the first member; max_size and exhausted match
/// the sequential result, the witness may differ but is always rechecked.
/// Every returned witness is rechecked from scratch before returning.
SearchResult max_mono_fu_family(const SearchConfig& config);

/// Exhaustive enumeration of all families of exactly `target` disjoint
/// nonempty sets, in ascending-mask lexicographic order; first one whose
/// FU closure is monochromatic, or absent.  Independent of the search
/// engine.  Guards: n <= 12, target in [1, 4].
std::optional<DisjointFamily> brute_force_oracle(Universe universe,
                                                 const SetColoring& coloring,
                                                 int target);

/// Checks that on every disjoint family (size <= 4) whose FU closure is
/// log-parity monochromatic, member log blocks are pairwise distinct.
/// Exhaustive; guard n <= 12.
bool verify_block_injectivity(Universe universe);

/// Inner check for min_universe_for_mono_pair: does EVERY 2-coloring of
/// the nonempty subsets of [n] admit disjoint nonempty x, y with
/// x, y, x union y monochromatic?  Two independent implementations;
/// guard n <= 4.
bool every_coloring_has_mono_pair_naive(int n);
bool every_coloring_has_mono_pair_bitmask(int n);

/// Smallest n <= max_n for which every 2-coloring admits a monochromatic
/// disjoint pair-with-union, or absent.  Runs both inner implementations
/// and fails loudly if they ever disagree.  Guard: max_n <= 4.
std::optional<int> min_universe_for_mono_pair(int max_n);

}  // namespace hindlab

#endif
