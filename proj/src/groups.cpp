#include "hindlab/groups.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

namespace hindlab {

long long rational_floor(const Rational& r) {
  long long p = r.numerator(), q = r.denominator();  // q > 0
  long long d = p / q;
  if (p % q != 0 && p < 0) --d;
  return d;
}

std::string CircleValue::str() const {
  std::string s = std::to_string(value_.numerator());
  if (value_.denominator() != 1) s += "/" + std::to_string(value_.denominator());
  return s + (tag_ == ComponentTag::torsion ? " (torsion)" : "");
}

GroupElem GroupElem::from_entries(std::span<const std::pair<Coord, CircleValue>> entries) {
  GroupElem g;
  for (const auto& [c, v] : entries) {
    if (g.entries_.count(c))
      throw component_spec_error("GroupElem: repeated coordinate " + std::to_string(c));
    if (!v.is_zero()) g.entries_.emplace(c, v);
  }
  return g;
}

std::vector<Coord> GroupElem::support() const {
  std::vector<Coord> out;
  out.reserve(entries_.size());
  for (const auto& [c, v] : entries_) out.push_back(c);
  return out;
}

GroupElem GroupElem::operator-() const {
  GroupElem g;
  for (const auto& [c, v] : entries_) g.entries_.emplace(c, -v);
  return g;
}

std::string GroupElem::str() const {
  if (entries_.empty()) return "0";
  std::string s = "{";
  bool first = true;
  for (const auto& [c, v] : entries_) {
    if (!first) s += ", ";
    s += std::to_string(c) + ": " + v.str();
    first = false;
  }
  return s + "}";
}

GroupElem add(const GroupElem& x, const GroupElem& y) {
  GroupElem out = x;
  auto& entries = out.entries_;
  for (const auto& [c, v] : y.entries()) {
    auto it = entries.find(c);
    if (it == entries.end()) {
      entries.emplace(c, v);
    } else {
      CircleValue sum = it->second + v;  // checks tag agreement
      if (sum.is_zero())
        entries.erase(it);
      else
        it->second = sum;
    }
  }
  return out;
}

ComponentSpec component_spec_of(std::span<const GroupElem> elems) {
  ComponentSpec spec;
  for (const GroupElem& g : elems) {
    for (const auto& [c, v] : g.entries()) {
      auto [it, inserted] = spec.emplace(c, v.tag());
      if (!inserted && it->second != v.tag())
        throw component_spec_error("conflicting component group at coordinate " +
                                   std::to_string(c));
    }
  }
  return spec;
}

std::vector<GroupElem> fs_closure(std::span<const GroupElem> items) {
  const std::size_t m = items.size();
  if (m < 1) throw std::invalid_argument("fs_closure: empty input");
  if (m > 20) throw std::length_error("fs_closure: more than 20 items");
  component_spec_of(items);  // reject inconsistent families up front
  const std::uint32_t total = (std::uint32_t{1} << m) - 1;
  std::vector<GroupElem> out;
  out.reserve(total);
  for (std::uint32_t mask = 1; mask <= total; ++mask) {
    std::uint32_t rest = mask & (mask - 1);
    const GroupElem& low = items[__builtin_ctz(mask)];
    out.push_back(rest == 0 ? low : add(out[rest - 1], low));
  }
  return out;
}

std::vector<GroupElem> distinct_elements(std::span<const GroupElem> items) {
  std::vector<GroupElem> out(items.begin(), items.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

std::vector<Coord> support_intersection(const std::vector<Coord>& a,
                                        const std::vector<Coord>& b) {
  std::vector<Coord> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool contains_all(const std::vector<Coord>& sup, const std::vector<Coord>& root) {
  return std::includes(sup.begin(), sup.end(), root.begin(), root.end());
}

// Branch-and-bound maximum independent set over a conflict graph, with a
// node budget; past the budget the best set found so far is kept (the
// greedy-by-index set is always among the explored ones).
class MaxIndependentSet {
 public:
  explicit MaxIndependentSet(const std::vector<std::vector<bool>>& conflict)
      : conflict_(conflict), n_(conflict.size()) {}

  std::vector<std::size_t> run() {
    std::vector<std::size_t> chosen;
    std::vector<bool> alive(n_, true);
    dfs(chosen, alive, 0);
    return best_;
  }

 private:
  void dfs(std::vector<std::size_t>& chosen, std::vector<bool>& alive, std::size_t from) {
    if (nodes_++ > kBudget) return;
    std::size_t remaining = 0;
    for (std::size_t v = from; v < n_; ++v) remaining += alive[v];
    if (chosen.size() + remaining <= best_.size()) return;
    std::size_t v = from;
    while (v < n_ && !alive[v]) ++v;
    if (v == n_) {
      if (chosen.size() > best_.size()) best_ = chosen;
      return;
    }
    // include v
    std::vector<std::size_t> killed;
    for (std::size_t u = v + 1; u < n_; ++u)
      if (alive[u] && conflict_[v][u]) {
        alive[u] = false;
        killed.push_back(u);
      }
    chosen.push_back(v);
    dfs(chosen, alive, v + 1);
    chosen.pop_back();
    for (std::size_t u : killed) alive[u] = true;
    // exclude v
    alive[v] = false;
    dfs(chosen, alive, v + 1);
    alive[v] = true;
  }

  static constexpr std::size_t kBudget = 200000;
  const std::vector<std::vector<bool>>& conflict_;
  std::size_t n_;
  std::vector<std::size_t> best_;
  std::size_t nodes_ = 0;
};

}  // namespace

DeltaSystem DeltaSystem::of(std::vector<Coord> root, std::vector<GroupElem> family) {
  std::sort(root.begin(), root.end());
  root.erase(std::unique(root.begin(), root.end()), root.end());
  std::vector<std::vector<Coord>> sups;
  sups.reserve(family.size());
  for (const GroupElem& g : family) sups.push_back(g.support());
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = i + 1; j < family.size(); ++j)
      if (support_intersection(sups[i], sups[j]) != root)
        throw std::invalid_argument("DeltaSystem: pairwise intersection differs from root");
  return DeltaSystem{std::move(root), std::move(family)};
}

std::optional<DeltaSystem> find_delta_system(std::span<const GroupElem> family,
                                             std::size_t min_size) {
  if (family.size() > 2000)
    throw std::length_error("find_delta_system: family larger than 2000");
  if (min_size < 1) throw std::invalid_argument("find_delta_system: min_size must be >= 1");
  if (family.empty()) return std::nullopt;

  std::vector<std::vector<Coord>> sups;
  sups.reserve(family.size());
  for (const GroupElem& g : family) sups.push_back(g.support());

  std::set<std::vector<Coord>> roots;
  roots.insert({});
  for (std::size_t i = 0; i < sups.size(); ++i)
    for (std::size_t j = i + 1; j < sups.size(); ++j)
      roots.insert(support_intersection(sups[i], sups[j]));

  std::vector<Coord> best_root;
  std::vector<std::size_t> best_members;
  for (const std::vector<Coord>& root : roots) {
    std::vector<std::size_t> group;
    for (std::size_t i = 0; i < sups.size(); ++i)
      if (contains_all(sups[i], root)) group.push_back(i);
    if (group.size() <= best_members.size()) continue;  // cannot improve

    std::vector<std::vector<Coord>> petals(group.size());
    for (std::size_t k = 0; k < group.size(); ++k) {
      std::vector<Coord> petal;
      std::set_difference(sups[group[k]].begin(), sups[group[k]].end(), root.begin(),
                          root.end(), std::back_inserter(petal));
      petals[k] = std::move(petal);
    }
    std::vector<std::vector<bool>> conflict(group.size(),
                                            std::vector<bool>(group.size(), false));
    for (std::size_t a = 0; a < group.size(); ++a)
      for (std::size_t b = a + 1; b < group.size(); ++b)
        if (!support_intersection(petals[a], petals[b]).empty())
          conflict[a][b] = conflict[b][a] = true;

    std::vector<std::size_t> picked = MaxIndependentSet(conflict).run();
    if (picked.size() > best_members.size()) {
      best_members.clear();
      for (std::size_t k : picked) best_members.push_back(group[k]);
      std::sort(best_members.begin(), best_members.end());
      best_root = root;
    }
  }

  if (best_members.size() < min_size) return std::nullopt;
  std::vector<GroupElem> members;
  members.reserve(best_members.size());
  for (std::size_t i : best_members) members.push_back(family[i]);
  return DeltaSystem::of(std::move(best_root), std::move(members));
}

SumSubsystem sum_subsystem_refine(const DeltaSystem& ds) {
  component_spec_of(ds.family);  // reject inconsistent families up front

  struct Item {
    GroupElem elem;
    std::vector<std::size_t> block;
  };
  std::vector<Item> current;
  current.reserve(ds.family.size());
  for (std::size_t i = 0; i < ds.family.size(); ++i)
    current.push_back({ds.family[i], {i}});

  std::vector<Coord> refined_root;
  for (Coord alpha : ds.root) {
    // pigeonhole: the largest bucket of a common projection value at alpha
    std::map<Rational, std::vector<std::size_t>> buckets;
    for (std::size_t i = 0; i < current.size(); ++i) {
      auto v = current[i].elem.projection(alpha);
      buckets[v ? v->value() : Rational(0)].push_back(i);
    }
    const std::vector<std::size_t>* chosen = nullptr;
    Rational chosen_value;
    for (const auto& [value, idxs] : buckets) {
      if (!chosen || idxs.size() > chosen->size() ||
          (idxs.size() == chosen->size() && idxs.front() < chosen->front())) {
        chosen = &idxs;
        chosen_value = value;
      }
    }

    std::vector<Item> next;
    if (chosen_value.numerator() == 0) {
      // alpha already vanishes on the whole bucket and on all its sums
      for (std::size_t i : *chosen) next.push_back(std::move(current[i]));
    } else {
      auto order = current[(*chosen)[0]].elem.projection(alpha)->order();
      if (!order) {
        // infinite order: every sum of k members projects to k*t != 0
        for (std::size_t i : *chosen) next.push_back(std::move(current[i]));
        refined_root.push_back(alpha);
      } else {
        // finite order q: sum cells of q elements to kill the coordinate
        const std::size_t q = static_cast<std::size_t>(*order);
        for (std::size_t cell = 0; cell + q <= chosen->size(); cell += q) {
          Item merged = std::move(current[(*chosen)[cell]]);
          for (std::size_t k = 1; k < q; ++k) {
            Item& other = current[(*chosen)[cell + k]];
            merged.elem = add(merged.elem, other.elem);
            merged.block.insert(merged.block.end(), other.block.begin(), other.block.end());
          }
          std::sort(merged.block.begin(), merged.block.end());
          next.push_back(std::move(merged));
        }
      }
    }
    if (next.size() < 2) throw insufficient_family_error(alpha);
    current = std::move(next);
  }

  SumSubsystem out;
  for (Item& item : current) {
    out.elements.push_back(std::move(item.elem));
    out.blocks.push_back(std::move(item.block));
  }
  out.root = std::move(refined_root);

  // construction postcondition: supports form a Delta-system with the
  // refined root
  std::vector<std::vector<Coord>> sups;
  for (const GroupElem& g : out.elements) sups.push_back(g.support());
  for (std::size_t i = 0; i < sups.size(); ++i)
    for (std::size_t j = i + 1; j < sups.size(); ++j)
      if (support_intersection(sups[i], sups[j]) != out.root)
        throw std::logic_error("sum_subsystem_refine: refined family is not a Delta-system");
  return out;
}

bool verify_support_additivity(std::span<const GroupElem> items) {
  const std::size_t m = items.size();
  if (m > 12) throw std::length_error("verify_support_additivity: more than 12 items");
  if (m == 0) return true;
  std::vector<std::vector<Coord>> sups;
  sups.reserve(m);
  for (const GroupElem& g : items) sups.push_back(g.support());
  const std::uint32_t total = (std::uint32_t{1} << m) - 1;
  std::vector<GroupElem> sums(total + 1);
  std::vector<std::vector<Coord>> unions(total + 1);
  for (std::uint32_t mask = 1; mask <= total; ++mask) {
    std::uint32_t rest = mask & (mask - 1);
    std::size_t low = static_cast<std::size_t>(__builtin_ctz(mask));
    sums[mask] = rest == 0 ? items[low] : add(sums[rest], items[low]);
    std::vector<Coord> u;
    std::set_union(unions[rest].begin(), unions[rest].end(), sups[low].begin(),
                   sups[low].end(), std::back_inserter(u));
    unions[mask] = std::move(u);
    if (sums[mask].support() != unions[mask]) return false;
  }
  return true;
}

std::uint64_t merged_support_size(std::uint64_t l, std::uint64_t root_size,
                                  std::uint64_t count) {
  if (l == 0 || count == 0)
    throw std::domain_error("merged_support_size: l and count must be positive");
  if (root_size >= l)
    throw std::domain_error("merged_support_size: root size must be smaller than l");
  return count * l - (count - 1) * root_size;
}

FinSet sym_diff(const FinSet& x, const FinSet& y) {
  if (x.universe_size() != y.universe_size())
    throw std::invalid_argument("sym_diff: mixed universes");
  return FinSet(x.universe(), x.bits() ^ y.bits());
}

}  // namespace hindlab
