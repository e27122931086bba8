#ifndef HINDLAB_GROUPS_HPP
#define HINDLAB_GROUPS_HPP

#include <boost/rational.hpp>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hindlab/setcore.hpp"

namespace hindlab {

using Rational = boost::rational<long long>;
using Coord = std::uint32_t;

/// Thrown when elements disagree on a coordinate's component group.
struct component_spec_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Thrown by sum_subsystem_refine when a pigeonhole/blocking step leaves
/// fewer than two elements. Reports the coordinate at fault.
struct insufficient_family_error : std::runtime_error {
  Coord coordinate;
  explicit insufficient_family_error(Coord c)
      : std::runtime_error("sum_subsystem_refine: family exhausted at coordinate " +
                           std::to_string(c)),
        coordinate(c) {}
};

/// torsion_free: the component group is the rationals.
/// torsion: the component group is the rationals mod 1 (which contains
/// every quasicyclic group), values kept in [0, 1).
enum class ComponentTag : std::uint8_t { torsion_free, torsion };

/// Maps each coordinate in use to its component group.
using ComponentSpec = std::map<Coord, ComponentTag>;

/// floor(p/q) computed exactly.
long long rational_floor(const Rational& r);

/// One coordinate's value: an exact rational, reduced mod 1 on torsion
/// coordinates. Zero is representable but never stored inside a GroupElem.
class CircleValue {
 public:
  static CircleValue torsion(Rational v) {
    v -= rational_floor(v);  // into [0,1)
    return CircleValue(v, ComponentTag::torsion);
  }
  static CircleValue torsion_free(Rational v) {
    return CircleValue(v, ComponentTag::torsion_free);
  }
  static CircleValue of(Rational v, ComponentTag tag) {
    return tag == ComponentTag::torsion ? torsion(v) : torsion_free(v);
  }

  const Rational& value() const { return value_; }
  ComponentTag tag() const { return tag_; }
  bool is_zero() const { return value_.numerator() == 0; }

  /// Order in the component group; nullopt means infinite.
  std::optional<long long> order() const {
    if (is_zero()) return 1;
    if (tag_ == ComponentTag::torsion) return value_.denominator();
    return std::nullopt;
  }

  CircleValue operator+(const CircleValue& other) const {
    if (tag_ != other.tag_)
      throw component_spec_error("CircleValue: component group mismatch");
    return of(value_ + other.value_, tag_);
  }
  CircleValue operator-() const { return of(-value_, tag_); }

  friend bool operator==(const CircleValue&, const CircleValue&) = default;
  friend bool operator<(const CircleValue& a, const CircleValue& b) {
    if (a.tag_ != b.tag_) return a.tag_ < b.tag_;
    return a.value_ < b.value_;
  }

  std::string str() const;

 private:
  CircleValue(Rational v, ComponentTag tag) : value_(std::move(v)), tag_(tag) {}
  Rational value_;
  ComponentTag tag_;
};

/// An element of the direct sum of component groups: a finite map from
/// coordinate to nonzero value. The support is exactly the key set.
class GroupElem {
 public:
  GroupElem() = default;  // identity

  static GroupElem single(Coord c, const CircleValue& v) {
    GroupElem g;
    if (!v.is_zero()) g.entries_.emplace(c, v);
    return g;
  }

  /// Builds from (coordinate, value) pairs; zero values are dropped,
  /// repeated coordinates are a spec error.
  static GroupElem from_entries(std::span<const std::pair<Coord, CircleValue>> entries);

  const std::map<Coord, CircleValue>& entries() const { return entries_; }
  bool is_identity() const { return entries_.empty(); }

  std::vector<Coord> support() const;
  std::size_t support_size() const { return entries_.size(); }

  /// Value at a coordinate; nullopt encodes zero.
  std::optional<CircleValue> projection(Coord c) const {
    auto it = entries_.find(c);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
  }

  GroupElem operator-() const;

  friend bool operator==(const GroupElem&, const GroupElem&) = default;
  friend bool operator<(const GroupElem& a, const GroupElem& b) {
    return a.entries_ < b.entries_;
  }

  std::string str() const;

 private:
  friend GroupElem add(const GroupElem& x, const GroupElem& y);
  std::map<Coord, CircleValue> entries_;
};

/// Coordinatewise exact sum; torsion coordinates reduce mod 1 and zero
/// results drop out of the map. Throws component_spec_error when the two
/// elements disagree on a shared coordinate's component group.
GroupElem add(const GroupElem& x, const GroupElem& y);

/// Component spec induced by a set of elements; throws on conflicts.
ComponentSpec component_spec_of(std::span<const GroupElem> elems);

/// The 2^m - 1 subset sums in canonical submask order. Duplicate group
/// elements are retained, so the count is always 2^m - 1. Guard: m <= 20.
std::vector<GroupElem> fs_closure(std::span<const GroupElem> items);

/// Deduplicated view of a closure (or any list), canonically sorted.
std::vector<GroupElem> distinct_elements(std::span<const GroupElem> items);

/// A family whose supports pairwise intersect in exactly the root.
struct DeltaSystem {
  std::vector<Coord> root;  // sorted
  std::vector<GroupElem> family;

  /// Validates the pairwise-intersection invariant.
  static DeltaSystem of(std::vector<Coord> root, std::vector<GroupElem> family);
};

/// Searches for a subfamily of size >= min_size whose supports form a
/// Delta-system. Candidate roots are the pairwise support intersections
/// (plus the empty root); per root the largest compatible subfamily is
/// taken. Returns the largest system found, or nullopt if none reaches
/// min_size. Guard: |family| <= 2000.
std::optional<DeltaSystem> find_delta_system(std::span<const GroupElem> family,
                                             std::size_t min_size);

/// Output of sum_subsystem_refine: each element is the sum of the original
/// family members listed in its block; blocks are pairwise disjoint.
struct SumSubsystem {
  std::vector<GroupElem> elements;
  std::vector<std::vector<std::size_t>> blocks;  // indices into the input family
  std::vector<Coord> root;                       // refined root, subset of the input root
};

/// Processes the root coordinates one by one: bucket the family by the
/// common projection value; a value of infinite order keeps the coordinate
/// in every future sum, a value of finite order q is killed by summing
/// cells of q elements. The result is a sum subsystem whose supports form
/// a Delta-system with the refined root and whose finite sums have
/// additive supports. Throws insufficient_family_error when a step leaves
/// fewer than two elements.
SumSubsystem sum_subsystem_refine(const DeltaSystem& ds);

/// True iff for every nonempty subset, the support of the sum equals the
/// union of the supports. Guard: |items| <= 12.
bool verify_support_additivity(std::span<const GroupElem> items);

/// |supp| of a sum of `count` Delta-system members, each with support size
/// l and root size root_size, when support additivity holds:
/// count*l - (count-1)*root_size. Requires root_size < l.
std::uint64_t merged_support_size(std::uint64_t l, std::uint64_t root_size,
                                  std::uint64_t count);

/// Symmetric difference, the Boolean-group operation on finite sets.
/// Agrees with disjoint_union on disjoint inputs.
FinSet sym_diff(const FinSet& x, const FinSet& y);

}  // namespace hindlab

#endif
