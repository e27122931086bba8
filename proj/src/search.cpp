#include "hindlab/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <numeric>
#include <thread>

namespace hindlab {

namespace {

using Clock = std::chrono::steady_clock;

std::uint64_t low_mask(int k) {
  return k >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << k) - 1);
}

void validate(const SearchConfig& config) {
  if (config.max_family_size < 1 || config.max_family_size > 20)
    throw std::invalid_argument("SearchConfig: max_family_size must be in [1, 20]");
  if (config.thread_count < 1)
    throw std::invalid_argument("SearchConfig: thread_count must be >= 1");
  if (config.target_size && *config.target_size < 1)
    throw std::invalid_argument("SearchConfig: target_size must be >= 1");
  if (config.time_budget && config.time_budget->count() <= 0)
    throw std::invalid_argument("SearchConfig: time_budget must be positive");
  if (!config.coloring.permutation_invariant() && config.universe.size() > 20)
    throw std::invalid_argument(
        "SearchConfig: universe larger than 20 needs a permutation-invariant coloring "
        "(candidate enumeration is exhaustive)");
}

/// Size-multiset search for permutation-invariant colorings: only the
/// member-size multiset matters, and a subfamily union's size is the sum
/// of its member sizes.
struct SizeSearch {
  int n;
  std::vector<Color> color_by_size;  // index k = color of any k-element set
  std::optional<int> target;
  int max_family;
  std::optional<Clock::time_point> deadline;

  std::uint64_t nodes = 0;
  int best = 0;
  std::vector<int> best_sizes;
  bool target_hit = false;
  bool timed_out = false;

  std::vector<int> sizes;  // non-decreasing
  std::vector<int> sums;   // realized subfamily-union sizes
  Color color = Color::zero;

  void dfs(int min_next, int total) {
    if ((int)sizes.size() == max_family) return;
    if (!sizes.empty() && (int)sizes.size() + (n - total) / min_next <= best) return;
    for (int s = min_next; total + s <= n; ++s) {
      if (target_hit || timed_out) return;
      Color c = color_by_size[s];
      if (!sizes.empty() && c != color) continue;
      bool ok = true;
      for (std::size_t j = 0; j < sums.size() && ok; ++j)
        if (color_by_size[sums[j] + s] != c) ok = false;
      if (!ok) continue;
      ++nodes;
      if (deadline && (nodes & 1023) == 0 && Clock::now() > *deadline) {
        timed_out = true;
        return;
      }
      if (sizes.empty()) color = c;
      std::size_t old = sums.size();
      sizes.push_back(s);
      sums.push_back(s);
      for (std::size_t j = 0; j < old; ++j) sums.push_back(sums[j] + s);
      if ((int)sizes.size() > best) {
        best = (int)sizes.size();
        best_sizes = sizes;
        if (target && best >= *target) target_hit = true;
      }
      if (!target_hit && !timed_out) dfs(s, total + s);
      sizes.pop_back();
      sums.resize(old);
    }
  }
};

SearchResult search_by_sizes(const SearchConfig& config,
                             std::optional<Clock::time_point> deadline) {
  const int n = config.universe.size();
  SizeSearch s;
  s.n = n;
  s.color_by_size.resize(n + 1, Color::zero);
  for (int k = 1; k <= n; ++k)
    s.color_by_size[k] = config.coloring.color(FinSet(config.universe, low_mask(k)));
  s.target = config.target_size;
  s.max_family = config.max_family_size;
  s.deadline = deadline;
  s.dfs(1, 0);

  SearchResult r;
  r.max_size = s.best;
  r.nodes_expanded = s.nodes;
  r.exhausted = !s.timed_out && !s.target_hit;
  if (s.best > 0) {
    std::vector<FinSet> members;
    int offset = 0;
    for (int k : s.best_sizes) {
      members.emplace_back(config.universe, low_mask(k) << offset);
      offset += k;
    }
    r.witness = DisjointFamily::of(std::move(members));
    r.witness_color = s.color_by_size[s.best_sizes.front()];
  }
  return r;
}

/// General backtracking search over explicit candidate masks, in
/// (popcount, value) order; splits on the first member across threads.
struct GeneralShared {
  std::atomic<int> best{0};
  std::atomic<bool> stop{false};
  std::atomic<bool> timed_out{false};
  std::atomic<bool> target_hit{false};
  std::atomic<std::size_t> next{0};
};

struct GeneralLocal {
  int best = 0;
  std::size_t best_first = SIZE_MAX;  // subtree index of the witness
  std::vector<std::uint32_t> witness;
  std::uint64_t nodes = 0;
  bool completed = true;
};

struct GeneralWorker {
  const std::vector<std::uint32_t>& candidates;
  const std::vector<Color>& colors;  // index mask-1
  int n;
  int max_family;
  std::optional<int> target;
  std::optional<Clock::time_point> deadline;
  GeneralShared& shared;

  GeneralLocal local;
  std::size_t current_first = 0;
  std::vector<std::uint32_t> family;
  std::vector<std::uint32_t> closure;

  bool halted() { return shared.stop.load(std::memory_order_relaxed); }

  void expand(std::size_t i, std::uint32_t used, std::optional<Color> fam_color) {
    const std::uint32_t s = candidates[i];
    if (s & used) return;
    const Color c = colors[s - 1];
    if (fam_color && c != *fam_color) return;
    const Color fc = fam_color ? *fam_color : c;
    const std::size_t old = closure.size();
    for (std::size_t j = 0; j < old; ++j)
      if (colors[(closure[j] | s) - 1] != fc) return;
    ++local.nodes;
    if (deadline && (local.nodes & 1023) == 0 && Clock::now() > *deadline) {
      shared.timed_out.store(true);
      shared.stop.store(true);
      local.completed = false;
      return;
    }
    family.push_back(s);
    closure.push_back(s);
    for (std::size_t j = 0; j < old; ++j) closure.push_back(closure[j] | s);
    if ((int)family.size() > local.best) {
      local.best = (int)family.size();
      local.witness = family;
      local.best_first = current_first;
      int cur = shared.best.load(std::memory_order_relaxed);
      while (cur < local.best &&
             !shared.best.compare_exchange_weak(cur, local.best)) {
      }
      if (target && local.best >= *target) {
        shared.target_hit.store(true);
        shared.stop.store(true);
      }
    }
    if (!halted()) dfs(i + 1, used | s, fc);
    family.pop_back();
    closure.resize(old);
  }

  void dfs(std::size_t start, std::uint32_t used, Color fam_color) {
    if ((int)family.size() == max_family) return;
    const int slack = n - std::popcount(used);
    // prune branches that cannot beat the local best nor tie the shared
    // best; ties with the shared best stay explored so the merged witness
    // is the sequential one
    if ((int)family.size() + slack <= local.best) return;
    if ((int)family.size() + slack < shared.best.load(std::memory_order_relaxed)) return;
    for (std::size_t i = start; i < candidates.size(); ++i) {
      if (halted()) {
        local.completed = false;
        return;
      }
      expand(i, used, fam_color);
    }
  }

  void run() {
    for (;;) {
      const std::size_t f = shared.next.fetch_add(1, std::memory_order_relaxed);
      if (f >= candidates.size()) break;
      if (halted()) {
        local.completed = false;
        break;
      }
      current_first = f;
      expand(f, 0, std::nullopt);
    }
  }
};

SearchResult search_general(const SearchConfig& config,
                            std::optional<Clock::time_point> deadline) {
  const int n = config.universe.size();
  const std::uint32_t total = static_cast<std::uint32_t>(config.universe.full_mask());
  std::vector<Color> colors(total);
  for (std::uint32_t m = 1; m <= total; ++m)
    colors[m - 1] = config.coloring.color(FinSet(config.universe, m));
  std::vector<std::uint32_t> candidates(total);
  std::iota(candidates.begin(), candidates.end(), 1u);
  std::sort(candidates.begin(), candidates.end(), [](std::uint32_t a, std::uint32_t b) {
    return std::pair(std::popcount(a), a) < std::pair(std::popcount(b), b);
  });

  GeneralShared shared;
  const int nthreads = std::min<int>(config.thread_count, (int)candidates.size());
  std::vector<GeneralLocal> locals(nthreads);
  auto work = [&](int wid) {
    GeneralWorker w{candidates, colors, n,  config.max_family_size, config.target_size,
                    deadline,   shared, {}, 0,
                    {},         {}};
    w.run();
    locals[wid] = std::move(w.local);
  };
  if (nthreads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(work, t);
    for (auto& t : pool) t.join();
  }

  SearchResult r;
  const GeneralLocal* winner = nullptr;
  bool completed = true;
  for (const auto& L : locals) {
    r.nodes_expanded += L.nodes;
    completed = completed && L.completed;
    if (L.best > r.max_size ||
        (L.best == r.max_size && winner && L.best_first < winner->best_first))
      winner = &L, r.max_size = L.best;
    else if (L.best == r.max_size && !winner && L.best > 0)
      winner = &L;
  }
  r.exhausted = completed && !shared.timed_out.load() && !shared.target_hit.load();
  if (winner && winner->best > 0) {
    std::vector<FinSet> members;
    for (std::uint32_t m : winner->witness) members.emplace_back(config.universe, m);
    r.witness = DisjointFamily::of(std::move(members));
    r.witness_color = colors[winner->witness.front() - 1];
  }
  return r;
}

}  // namespace

SearchResult max_mono_fu_family(const SearchConfig& config) {
  validate(config);
  std::optional<Clock::time_point> deadline;
  if (config.time_budget) deadline = Clock::now() + *config.time_budget;

  SearchResult r = config.coloring.permutation_invariant()
                       ? search_by_sizes(config, deadline)
                       : search_general(config, deadline);

  if (r.witness) {
    std::vector<FinSet> closure = fu_closure(*r.witness);
    auto mono = is_monochromatic(config.coloring, closure);
    if (!mono || !r.witness_color || *mono != *r.witness_color ||
        (int)r.witness->size() != r.max_size)
      throw std::logic_error("max_mono_fu_family: witness failed independent recheck");
  }
  return r;
}

std::optional<DisjointFamily> brute_force_oracle(Universe universe,
                                                 const SetColoring& coloring,
                                                 int target) {
  if (universe.size() > 12)
    throw std::length_error("brute_force_oracle: universe larger than 12");
  if (target < 1 || target > 4)
    throw std::length_error("brute_force_oracle: target outside [1, 4]");
  const std::uint64_t total = universe.full_mask();
  std::vector<std::uint64_t> picked;
  std::optional<DisjointFamily> found;
  auto rec = [&](auto&& self, std::uint64_t first, std::uint64_t used) -> bool {
    if ((int)picked.size() == target) {
      std::vector<FinSet> members;
      members.reserve(picked.size());
      for (std::uint64_t m : picked) members.emplace_back(universe, m);
      DisjointFamily fam = DisjointFamily::of(std::move(members));
      if (is_monochromatic(coloring, fu_closure(fam))) {
        found = std::move(fam);
        return true;
      }
      return false;
    }
    for (std::uint64_t m = first; m <= total; ++m) {
      if (m & used) continue;
      picked.push_back(m);
      if (self(self, m + 1, used | m)) return true;
      picked.pop_back();
    }
    return false;
  };
  rec(rec, 1, 0);
  return found;
}

bool verify_block_injectivity(Universe universe) {
  if (universe.size() > 12)
    throw std::length_error("verify_block_injectivity: universe larger than 12");
  const std::uint64_t total = universe.full_mask();
  auto block_of = [](std::uint64_t m) {
    return static_cast<int>(std::bit_width(static_cast<unsigned>(std::popcount(m)))) - 1;
  };
  auto color_of = [block_of](std::uint64_t m) { return block_of(m) & 1; };
  std::vector<std::uint64_t> family, closure;
  bool ok = true;
  // extensions of a non-mono family stay non-mono (the closure only
  // grows), so pruning on the incremental check enumerates exactly the
  // mono-closure families
  auto rec = [&](auto&& self, std::uint64_t first, std::uint64_t used, int color) -> void {
    if (!ok || family.size() == 4) return;
    for (std::uint64_t m = first; m <= total; ++m) {
      if (m & used) continue;
      const int c = color_of(m);
      if (!family.empty() && c != color) continue;
      bool mono = true;
      const std::size_t old = closure.size();
      for (std::size_t j = 0; j < old && mono; ++j)
        if (color_of(closure[j] | m) != c) mono = false;
      if (!mono) continue;
      for (std::uint64_t prev : family)
        if (block_of(prev) == block_of(m)) {
          ok = false;
          return;
        }
      family.push_back(m);
      closure.push_back(m);
      for (std::size_t j = 0; j < old; ++j) closure.push_back(closure[j] | m);
      self(self, m + 1, used | m, c);
      family.pop_back();
      closure.resize(old);
      if (!ok) return;
    }
  };
  rec(rec, 1, 0, 0);
  return ok;
}

bool every_coloring_has_mono_pair_naive(int n) {
  if (n < 1 || n > 4)
    throw std::length_error("every_coloring_has_mono_pair_naive: n outside [1, 4]");
  const int S = (1 << n) - 1;
  const std::uint64_t colorings = std::uint64_t{1} << S;
  for (std::uint64_t c = 0; c < colorings; ++c) {
    bool mono = false;
    for (int x = 1; x <= S && !mono; ++x) {
      for (int y = x + 1; y <= S && !mono; ++y) {
        if (x & y) continue;
        const int cx = (c >> (x - 1)) & 1;
        const int cy = (c >> (y - 1)) & 1;
        const int cu = (c >> ((x | y) - 1)) & 1;
        mono = cx == cy && cy == cu;
      }
    }
    if (!mono) return false;  // this coloring defeats every disjoint pair
  }
  return true;
}

bool every_coloring_has_mono_pair_bitmask(int n) {
  if (n < 1 || n > 4)
    throw std::length_error("every_coloring_has_mono_pair_bitmask: n outside [1, 4]");
  const int S = (1 << n) - 1;
  std::vector<std::uint32_t> triples;
  for (int x = 1; x <= S; ++x)
    for (int y = x + 1; y <= S; ++y)
      if (!(x & y))
        triples.push_back((1u << (x - 1)) | (1u << (y - 1)) | (1u << ((x | y) - 1)));
  const std::uint32_t end = 1u << S;
  for (std::uint32_t c = 0; c < end; ++c) {
    bool mono = false;
    for (std::uint32_t tm : triples) {
      const std::uint32_t masked = c & tm;
      if (masked == 0 || masked == tm) {
        mono = true;
        break;
      }
    }
    if (!mono) return false;
  }
  return true;
}

std::optional<int> min_universe_for_mono_pair(int max_n) {
  if (max_n < 1 || max_n > 4)
    throw std::length_error("min_universe_for_mono_pair: max_n outside [1, 4]");
  for (int n = 1; n <= max_n; ++n) {
    const bool a = every_coloring_has_mono_pair_naive(n);
    const bool b = every_coloring_has_mono_pair_bitmask(n);
    if (a != b)
      throw std::logic_error(
          "min_universe_for_mono_pair: independent implementations disagree at n=" +
          std::to_string(n));
    if (a) return n;
  }
  return std::nullopt;
}

}  // namespace hindlab
