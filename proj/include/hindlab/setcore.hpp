#ifndef HINDLAB_SETCORE_HPP
#define HINDLAB_SETCORE_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hindlab {

/// Thrown when an operation with union semantics receives overlapping sets.
struct disjointness_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Ground set {0, ..., n-1}, n <= 64 so that a subset fits in one word.
class Universe {
 public:
  explicit Universe(int n) : n_(n) {
    if (n < 1 || n > 64) throw std::out_of_range("Universe: n must be in [1, 64]");
  }

  int size() const { return n_; }

  std::uint64_t full_mask() const {
    return n_ == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n_) - 1);
  }

  friend bool operator==(const Universe&, const Universe&) = default;

 private:
  int n_;
};

/// A finite subset of a Universe, stored as a bit vector in one word.
/// Immutable value type; equality is bitwise.
class FinSet {
 public:
  FinSet(Universe universe, std::uint64_t bits) : n_(universe.size()), bits_(bits) {
    if (bits & ~universe.full_mask())
      throw std::out_of_range("FinSet: bit outside universe");
  }

  /// Builds {elements}; duplicates collapse. Elements must lie in [0, n).
  static FinSet from_elements(Universe universe, std::span<const int> elements);
  static FinSet from_elements(Universe universe, std::initializer_list<int> elements) {
    return from_elements(universe, std::span<const int>(elements.begin(), elements.size()));
  }

  std::uint64_t bits() const { return bits_; }
  Universe universe() const { return Universe(n_); }
  int universe_size() const { return n_; }

  int size() const { return __builtin_popcountll(bits_); }
  bool empty() const { return bits_ == 0; }
  bool contains(int e) const { return e >= 0 && e < n_ && (bits_ >> e) & 1; }
  bool disjoint_with(const FinSet& other) const { return (bits_ & other.bits_) == 0; }
  bool subset_of(const FinSet& other) const { return (bits_ & ~other.bits_) == 0; }

  /// Least element; set must be nonempty.
  int min_element() const {
    if (empty()) throw std::domain_error("FinSet: min of empty set");
    return __builtin_ctzll(bits_);
  }

  /// Elements in ascending order (the canonical serialization).
  std::vector<int> elements() const;

  std::string str() const;

  friend bool operator==(const FinSet& a, const FinSet& b) {
    return a.n_ == b.n_ && a.bits_ == b.bits_;
  }

 private:
  int n_;
  std::uint64_t bits_;
};

/// An ordered family of nonempty, pairwise disjoint FinSets over one
/// universe.  Members are kept sorted by least element so that equal
/// families compare equal and witness output is deterministic.
class DisjointFamily {
 public:
  /// Validates and canonicalizes. Throws disjointness_error on overlap,
  /// std::invalid_argument on empty members or mixed universes.
  static DisjointFamily of(std::vector<FinSet> members);

  const std::vector<FinSet>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  const FinSet& operator[](std::size_t i) const { return members_[i]; }

  /// Union of all members.
  std::uint64_t union_bits() const { return union_bits_; }

  /// Member cardinalities in family order.
  std::vector<int> member_sizes() const;

  friend bool operator==(const DisjointFamily& a, const DisjointFamily& b) {
    return a.members_ == b.members_;
  }

 private:
  DisjointFamily() = default;
  std::vector<FinSet> members_;
  std::uint64_t union_bits_ = 0;
};

/// Union of two disjoint sets; throws disjointness_error on overlap.
FinSet disjoint_union(const FinSet& x, const FinSet& y);

/// All 2^m - 1 unions of nonempty subfamilies, indexed by submask of the
/// member list (mask 1, 2, 3, ... with bit i selecting member i).
/// Guard: m <= 20.
std::vector<FinSet> fu_closure(const DisjointFamily& family);

/// The unique k with 2^k <= count < 2^(k+1). count must be >= 1.
int log_block_of_count(std::uint64_t count);

/// log_block_of_count(|x|); x must be nonempty.
int log_block(const FinSet& x);

/// The set of positions of 1-bits in m's binary expansion.
/// Requires 0 < m, and m < 2^n so the result fits the universe.
FinSet binary_support(std::uint64_t m, Universe universe);

/// Sum of 2^i over i in x; inverse of binary_support, with
/// from_binary_support(empty) = 0.
std::uint64_t from_binary_support(const FinSet& x);

}  // namespace hindlab

#endif
