#include "hindlab/setcore.hpp"

#include <algorithm>
#include <bit>

namespace hindlab {

FinSet FinSet::from_elements(Universe universe, std::span<const int> elements) {
  std::uint64_t bits = 0;
  for (int e : elements) {
    if (e < 0 || e >= universe.size())
      throw std::out_of_range("make_set: element " + std::to_string(e) +
                              " outside universe of size " + std::to_string(universe.size()));
    bits |= std::uint64_t{1} << e;
  }
  return FinSet(universe, bits);
}

std::vector<int> FinSet::elements() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (std::uint64_t b = bits_; b != 0; b &= b - 1)
    out.push_back(__builtin_ctzll(b));
  return out;
}

std::string FinSet::str() const {
  std::string s = "{";
  bool first = true;
  for (int e : elements()) {
    if (!first) s += ",";
    s += std::to_string(e);
    first = false;
  }
  return s + "}";
}

DisjointFamily DisjointFamily::of(std::vector<FinSet> members) {
  DisjointFamily fam;
  if (members.empty()) throw std::invalid_argument("DisjointFamily: no members");
  const int n = members.front().universe_size();
  std::uint64_t seen = 0;
  for (const FinSet& m : members) {
    if (m.universe_size() != n)
      throw std::invalid_argument("DisjointFamily: mixed universes");
    if (m.empty()) throw std::invalid_argument("DisjointFamily: empty member");
    if (seen & m.bits())
      throw disjointness_error("DisjointFamily: members overlap");
    seen |= m.bits();
  }
  std::sort(members.begin(), members.end(),
            [](const FinSet& a, const FinSet& b) { return a.min_element() < b.min_element(); });
  fam.members_ = std::move(members);
  fam.union_bits_ = seen;
  return fam;
}

std::vector<int> DisjointFamily::member_sizes() const {
  std::vector<int> out;
  out.reserve(members_.size());
  for (const FinSet& m : members_) out.push_back(m.size());
  return out;
}

FinSet disjoint_union(const FinSet& x, const FinSet& y) {
  if (x.universe_size() != y.universe_size())
    throw std::invalid_argument("disjoint_union: mixed universes");
  if (!x.disjoint_with(y))
    throw disjointness_error("disjoint_union: inputs share elements");
  return FinSet(x.universe(), x.bits() | y.bits());
}

std::vector<FinSet> fu_closure(const DisjointFamily& family) {
  const std::size_t m = family.size();
  if (m > 20) throw std::length_error("fu_closure: family larger than 20 members");
  const std::uint32_t total = (std::uint32_t{1} << m) - 1;
  std::vector<FinSet> out;
  out.reserve(total);
  const Universe u = family[0].universe();
  for (std::uint32_t mask = 1; mask <= total; ++mask) {
    // union over set bits; reuse the previously emitted union of mask
    // without its lowest bit (that mask is mask & (mask-1), emitted earlier).
    std::uint32_t rest = mask & (mask - 1);
    std::uint64_t bits = family[__builtin_ctz(mask)].bits();
    if (rest != 0) bits |= out[rest - 1].bits();
    out.push_back(FinSet(u, bits));
  }
  return out;
}

int log_block_of_count(std::uint64_t count) {
  if (count == 0) throw std::domain_error("log_block: empty set has no log block");
  return std::bit_width(count) - 1;
}

int log_block(const FinSet& x) { return log_block_of_count(static_cast<std::uint64_t>(x.size())); }

FinSet binary_support(std::uint64_t m, Universe universe) {
  if (m == 0) throw std::domain_error("binary_support: m must be positive");
  if (m & ~universe.full_mask())
    throw std::out_of_range("binary_support: m does not fit universe");
  return FinSet(universe, m);
}

std::uint64_t from_binary_support(const FinSet& x) { return x.bits(); }

}  // namespace hindlab
