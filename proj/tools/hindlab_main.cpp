// Experiment runner: exposes the library over six subcommands and emits
// json / csv / text reports. Exit codes: 0 success, 1 verification
// failure, 2 usage error.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hindlab/colorings.hpp"
#include "hindlab/groups.hpp"
#include "hindlab/ordinals.hpp"
#include "hindlab/search.hpp"
#include "hindlab/serialize.hpp"
#include "hindlab/setcore.hpp"
#include "hindlab/words.hpp"

#ifndef HINDLAB_VERSION
#define HINDLAB_VERSION "0.0.0"
#endif

namespace {

using nlohmann::ordered_json;
using namespace hindlab;

struct GlobalOpts {
  std::string format = "text";
  std::string out_path;
  std::uint64_t seed = 0;
  int threads = 1;
  std::optional<int> time_budget_secs;
};

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string quoted = "\"";
  for (char c : field) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

void emit_csv_row(std::ostream& os, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) os << ',';
    os << csv_escape(cells[i]);
  }
  os << "\r\n";
  os.flush();
}

/// Collected command output plus optional streaming for long sweeps.
struct Report {
  std::string command;
  ordered_json inputs;
  ordered_json results;
  std::vector<std::string> csv_header;
  std::vector<std::vector<std::string>> csv_rows;
  std::vector<std::string> text_lines;
  int exit_code = 0;

  const GlobalOpts* opts = nullptr;
  std::ostream* stream = nullptr;
  bool streamed_header = false;

  /// In csv/text formats rows appear as soon as they are computed.
  void stream_row(const std::vector<std::string>& cells, const std::string& line) {
    csv_rows.push_back(cells);
    text_lines.push_back(line);
    if (opts->format == "csv") {
      if (!streamed_header) {
        emit_csv_row(*stream, csv_header);
        streamed_header = true;
      }
      emit_csv_row(*stream, cells);
    } else if (opts->format == "text") {
      *stream << line << "\n";
      stream->flush();
    }
  }
};

void emit_report(Report& r, const GlobalOpts& opts, std::ostream& os,
                 std::int64_t wall_ms) {
  if (opts.format == "json") {
    ordered_json j;
    j["command"] = r.command;
    j["inputs"] = r.inputs;
    j["results"] = r.results;
    j["wall_time_ms"] = wall_ms;
    j["version"] = HINDLAB_VERSION;
    os << j.dump() << "\n";
    return;
  }
  if (opts.format == "csv") {
    if (!r.streamed_header) {
      emit_csv_row(os, r.csv_header);
      for (const auto& row : r.csv_rows) emit_csv_row(os, row);
    }
    return;
  }
  // text: every line was already streamed as it was computed
  (void)os;
  std::cerr << r.command << ": wall time " << wall_ms << " ms\n";
}

SetColoring load_coloring(const std::string& spec, std::uint64_t seed, Universe universe) {
  if (spec == "log_parity") return SetColoring::log_parity();
  if (spec == "random") return SetColoring::seeded_random(seed);
  std::ifstream in(spec);
  if (!in) throw std::invalid_argument("coloring file not readable: " + spec);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument("coloring file " + spec + " is not valid json: " +
                                e.what());
  }
  return SetColoring::from_json(j, universe);
}

std::pair<int, int> parse_range(const std::string& text) {
  auto dots = text.find("..");
  if (dots == std::string::npos) {
    int n = std::stoi(text);
    return {n, n};
  }
  int a = std::stoi(text.substr(0, dots));
  int b = std::stoi(text.substr(dots + 2));
  if (a < 1 || b < a) throw std::invalid_argument("bad range: " + text);
  return {a, b};
}

// ---------------------------------------------------------------- commands

void run_color_table(Report& r, int n) {
  Universe u(n);
  auto rows = ordered_json::array();
  for (int size = 1; size <= n; ++size) {
    const int block = log_block_of_count(static_cast<std::uint64_t>(size));
    const int color = to_int(log_parity_color_of_count(static_cast<std::uint64_t>(size)));
    rows.push_back(ordered_json{{"size", size}, {"block", block}, {"color", color}});
    r.stream_row({std::to_string(size), std::to_string(block), std::to_string(color)},
                 "size " + std::to_string(size) + ": block " + std::to_string(block) +
                     " color " + std::to_string(color));
  }
  r.results = ordered_json{{"n", n}, {"rows", rows}};
}

void run_search_max(Report& r, const GlobalOpts& opts, const std::string& range_text,
                    const std::string& coloring_spec, std::optional<int> target) {
  auto [lo, hi] = parse_range(range_text);
  if (hi > 64) throw std::invalid_argument("search-max: range exceeds universe cap 64");
  SetColoring coloring = load_coloring(coloring_spec, opts.seed, Universe(hi));
  auto runs = ordered_json::array();
  for (int n = lo; n <= hi; ++n) {
    SearchConfig config{Universe(n),
                        coloring,
                        target,
                        20,
                        opts.time_budget_secs
                            ? std::optional<std::chrono::milliseconds>(
                                  std::chrono::seconds(*opts.time_budget_secs))
                            : std::nullopt,
                        opts.threads};
    SearchResult res = max_mono_fu_family(config);
    if (res.witness) {
      // independent recheck before anything is printed
      auto mono = is_monochromatic(coloring, fu_closure(*res.witness));
      if (!mono || mono != res.witness_color)
        throw std::logic_error("search-max: witness failed recheck at n=" +
                               std::to_string(n));
    }
    const ordered_json payload = search_result_to_json(res);
    ordered_json run;
    run["n"] = n;
    for (const auto& [key, value] : payload.items()) run[key] = value;
    runs.push_back(std::move(run));
    r.stream_row({std::to_string(n), std::to_string(res.max_size),
                  res.exhausted ? "true" : "false"},
                 "n=" + std::to_string(n) + ": max_size " + std::to_string(res.max_size) +
                     (res.exhausted ? " (exhausted)" : " (lower bound)") + ", witness " +
                     (res.witness ? family_to_json(*res.witness).dump() : "none"));
  }
  r.results = ordered_json{{"coloring", coloring.describe()}, {"runs", runs}};
}

void run_hindman_min_n(Report& r, int max_n) {
  auto per_n = ordered_json::array();
  for (int n = 1; n <= max_n; ++n) {
    const bool naive = every_coloring_has_mono_pair_naive(n);
    const bool bitmask = every_coloring_has_mono_pair_bitmask(n);
    per_n.push_back(
        ordered_json{{"n", n}, {"naive", naive}, {"bitmask", bitmask}});
  }
  std::optional<int> min_n = min_universe_for_mono_pair(max_n);
  r.results = ordered_json{{"max_n", max_n},
                           {"min_n", min_n ? ordered_json(*min_n) : ordered_json(nullptr)},
                           {"per_n", per_n}};
  const std::string shown = min_n ? std::to_string(*min_n) : "absent";
  r.csv_header = {"min_n"};
  r.stream_row({shown}, "min_n: " + shown);
}

// verify suites ------------------------------------------------------------

struct SuiteOutcome {
  std::uint64_t checked = 0;
  std::uint64_t violations = 0;
  ordered_json witness = nullptr;
};

SuiteOutcome suite_flip_lemma(int n) {
  SuiteOutcome out;
  Universe u(n);
  const std::uint64_t total = u.full_mask();
  for (std::uint64_t x = 1; x <= total; ++x) {
    for (std::uint64_t y = x + 1; y <= total; ++y) {
      if (x & y) continue;
      FinSet sx(u, x), sy(u, y);
      if (log_block(sx) != log_block(sy)) continue;
      ++out.checked;
      const int k = log_block(sx);
      FinSet sunion = disjoint_union(sx, sy);
      const bool ok = log_block(sunion) == k + 1 &&
                      color_set_log_parity(sunion) == flip(color_set_log_parity(sx));
      if (!ok) {
        ++out.violations;
        if (out.witness.is_null())
          out.witness = ordered_json{{"x", set_to_json(sx)},
                                     {"y", set_to_json(sy)},
                                     {"union", set_to_json(sunion)}};
      }
    }
  }
  return out;
}

SuiteOutcome suite_injectivity(int n) {
  SuiteOutcome out;
  out.checked = 1;
  if (!verify_block_injectivity(Universe(n))) {
    out.violations = 1;
    out.witness = "a monochromatic family with a repeated log block exists";
  }
  return out;
}

GroupElem fixture_elem(Coord root_coord, const CircleValue& root_value, Coord petal_base,
                       int index) {
  std::vector<std::pair<Coord, CircleValue>> entries;
  entries.emplace_back(root_coord, root_value);
  entries.emplace_back(petal_base + 2 * index,
                       CircleValue::torsion(Rational(1, 4)));
  entries.emplace_back(petal_base + 2 * index + 1,
                       CircleValue::torsion(Rational(1, 8)));
  return GroupElem::from_entries(entries);
}

SuiteOutcome suite_support_additivity() {
  SuiteOutcome out;
  struct Case {
    const char* name;
    CircleValue root_value;
  };
  const Case cases[] = {
      {"torsion order 2", CircleValue::torsion(Rational(1, 2))},
      {"torsion order 3", CircleValue::torsion(Rational(1, 3))},
      {"torsion order 4", CircleValue::torsion(Rational(3, 4))},
      {"torsion-free", CircleValue::torsion_free(Rational(7, 3))},
  };
  for (const Case& c : cases) {
    std::vector<GroupElem> family;
    for (int i = 0; i < 8; ++i) family.push_back(fixture_elem(0, c.root_value, 10, i));
    DeltaSystem ds = DeltaSystem::of({0}, family);
    SumSubsystem refined = sum_subsystem_refine(ds);
    ++out.checked;
    if (!verify_support_additivity(refined.elements)) {
      ++out.violations;
      if (out.witness.is_null()) out.witness = c.name;
    }
  }
  // empty root: family passes through unchanged
  std::vector<GroupElem> disjoint;
  for (int i = 0; i < 6; ++i)
    disjoint.push_back(GroupElem::single(
        static_cast<Coord>(30 + i), CircleValue::torsion(Rational(1, 2 + i))));
  SumSubsystem refined = sum_subsystem_refine(DeltaSystem::of({}, disjoint));
  ++out.checked;
  if (refined.elements.size() != disjoint.size() ||
      !verify_support_additivity(refined.elements)) {
    ++out.violations;
    if (out.witness.is_null()) out.witness = "empty root";
  }
  return out;
}

SuiteOutcome suite_length_formula() {
  SuiteOutcome out;
  // exhaustive fixed-ends families: z, w powers of g0 (length <= 2),
  // middles over {g_i, g0} with g_i endpoints, length <= 3, two or three
  // members; every fp product length must match the formula
  auto root_words = []() {
    std::vector<Word> ws{Word()};
    for (int len = 1; len <= 2; ++len) {
      std::vector<Letter> pos(len, Letter{0, 1}), neg(len, Letter{0, -1});
      ws.push_back(Word::reduced_from(pos));
      ws.push_back(Word::reduced_from(neg));
    }
    return ws;
  }();
  auto middles_over = [](std::uint32_t fresh) {
    std::vector<Word> ys;
    const Letter letters[] = {{fresh, 1}, {fresh, -1}, {0, 1}, {0, -1}};
    std::vector<Letter> buf;
    auto rec = [&](auto&& self, int remaining) -> void {
      if (!buf.empty() && buf.front().generator == fresh &&
          buf.back().generator == fresh) {
        Word w = Word::reduced_from(buf);
        if (w.length() == buf.size()) ys.push_back(w);
      }
      if (remaining == 0) return;
      for (const Letter& l : letters) {
        if (!buf.empty() && buf.back().generator == l.generator &&
            buf.back().sign == -l.sign)
          continue;
        buf.push_back(l);
        self(self, remaining - 1);
        buf.pop_back();
      }
    };
    rec(rec, 3);
    return ys;
  };
  const auto y1 = middles_over(1), y2 = middles_over(2), y3 = middles_over(3);
  auto uses_g0 = [](const Word& y) {
    for (const Letter& l : y.letters())
      if (l.generator == 0) return true;
    return false;
  };

  auto check_family = [&](const Word& z, const Word& w, std::vector<Word> middles) {
    FixedEndsFamily fam = FixedEndsFamily::of(z, w, std::move(middles));
    const std::uint64_t n = fam.junction_cancellation();
    const auto products = fp_closure(fam.members());
    const std::size_t m = fam.members().size();
    for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
      std::vector<std::uint64_t> lengths;
      for (std::size_t i = 0; i < m; ++i)
        if ((mask >> i) & 1) lengths.push_back(fam.members()[i].length());
      ++out.checked;
      if (products[mask - 1].length() != product_length_formula(lengths, n)) {
        ++out.violations;
        if (out.witness.is_null())
          out.witness = ordered_json{{"z", z.str()},
                                     {"w", w.str()},
                                     {"product", products[mask - 1].str()}};
      }
    }
  };
  for (const Word& z : root_words)
    for (const Word& w : root_words) {
      // with z = w = empty the root is empty, so at most one middle may
      // touch g0 or the freshness precondition fails
      const bool g0_in_root = !z.empty() || !w.empty();
      for (const Word& a : y1)
        for (const Word& b : y2) {
          const int ab_users = uses_g0(a) + uses_g0(b);
          if (g0_in_root || ab_users <= 1) check_family(z, w, {a, b});
          for (const Word& c : y3) {
            if (!g0_in_root && ab_users + uses_g0(c) > 1) continue;
            check_family(z, w, {a, b, c});
          }
        }
    }

  // block-flip inequality: with k = floor(log2 l), m = floor(log2(l-n)),
  // the product of 2^{k-m}+1 factors has length 2^{k-m}(l-n)+l, landing in
  // [2^{k+1}, 2^{k+2})
  for (std::uint64_t l = 1; l <= 64; ++l) {
    for (std::uint64_t n = 0; n < l; ++n) {
      const int k = log_block_of_count(l);
      const int m = log_block_of_count(l - n);
      const std::uint64_t count = (std::uint64_t{1} << (k - m)) + 1;
      std::vector<std::uint64_t> lengths(count, l);
      const std::uint64_t len = product_length_formula(lengths, n);
      ++out.checked;
      const bool ok = len == (std::uint64_t{1} << (k - m)) * (l - n) + l &&
                      (std::uint64_t{1} << (k + 1)) <= len &&
                      len < (std::uint64_t{1} << (k + 2));
      if (!ok) {
        ++out.violations;
        if (out.witness.is_null()) out.witness = ordered_json{{"l", l}, {"n", n}};
      }
    }
  }
  return out;
}

SuiteOutcome suite_absorption() {
  SuiteOutcome out;
  // all CNF ordinals with exponents <= 3 and coefficients <= 3
  std::vector<CnfOrdinal> all;
  for (int c3 = 0; c3 <= 3; ++c3)
    for (int c2 = 0; c2 <= 3; ++c2)
      for (int c1 = 0; c1 <= 3; ++c1)
        for (int c0 = 0; c0 <= 3; ++c0) {
          std::vector<CnfOrdinal::Term> terms;
          if (c3) terms.push_back({3, (std::uint64_t)c3});
          if (c2) terms.push_back({2, (std::uint64_t)c2});
          if (c1) terms.push_back({1, (std::uint64_t)c1});
          if (c0) terms.push_back({0, (std::uint64_t)c0});
          all.push_back(CnfOrdinal::from_terms(std::move(terms)));
        }
  for (const CnfOrdinal& g : all) {
    for (const CnfOrdinal& d : all) {
      ++out.checked;
      const bool expect = g.is_zero() || !(d < times_omega(g));
      if (absorbs(g, d) != expect) {
        ++out.violations;
        if (out.witness.is_null())
          out.witness = ordered_json{{"gamma", g.str()}, {"delta", d.str()}};
      }
    }
  }
  return out;
}

SuiteOutcome suite_max_semigroup(std::uint64_t seed, int cases) {
  SuiteOutcome out;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> size_dist(1, 10), exp_dist(0, 4), coeff_dist(1, 5),
      terms_dist(0, 3);
  for (int c = 0; c < cases; ++c) {
    std::vector<CnfOrdinal> items;
    const int count = size_dist(rng);
    for (int i = 0; i < count; ++i) {
      std::vector<CnfOrdinal::Term> terms;
      int e = exp_dist(rng);
      for (int t = terms_dist(rng); t >= 0 && e >= 0; --t) {
        terms.push_back({(std::uint32_t)e, (std::uint64_t)coeff_dist(rng)});
        e -= 1 + terms_dist(rng);
      }
      items.push_back(CnfOrdinal::from_terms(std::move(terms)));
    }
    std::vector<CnfOrdinal> expect(items);
    std::sort(expect.begin(), expect.end());
    expect.erase(std::unique(expect.begin(), expect.end()), expect.end());
    ++out.checked;
    bool ok = max_semigroup_fs(items) == expect;
    // the law itself: the max over every nonempty subset is a member
    for (std::uint32_t mask = 1; ok && mask < (1u << count); ++mask) {
      CnfOrdinal best;
      for (int i = 0; i < count; ++i)
        if ((mask >> i) & 1 && best < items[i]) best = items[i];
      ok = std::find(expect.begin(), expect.end(), best) != expect.end();
    }
    if (!ok) {
      ++out.violations;
      if (out.witness.is_null()) {
        auto w = ordered_json::array();
        for (const auto& o : items) w.push_back(o.str());
        out.witness = w;
      }
    }
  }
  return out;
}

void run_verify(Report& r, const GlobalOpts& opts, const std::string& suite, int n,
                int cases) {
  SuiteOutcome out;
  if (suite == "flip-lemma") {
    if (n > 12) throw std::invalid_argument("verify flip-lemma: n capped at 12");
    out = suite_flip_lemma(n);
  } else if (suite == "injectivity") {
    out = suite_injectivity(n);
  } else if (suite == "support-additivity") {
    out = suite_support_additivity();
  } else if (suite == "length-formula") {
    out = suite_length_formula();
  } else if (suite == "absorption") {
    out = suite_absorption();
  } else if (suite == "max-semigroup") {
    out = suite_max_semigroup(opts.seed, cases);
  }
  const bool pass = out.violations == 0;
  r.results = ordered_json{{"suite", suite},
                           {"checked", out.checked},
                           {"violations", out.violations},
                           {"pass", pass},
                           {"witness", out.witness}};
  r.csv_header = {"suite", "checked", "violations", "pass"};
  std::string line = "suite " + suite + ": checked " + std::to_string(out.checked) +
                     ", violations " + std::to_string(out.violations) +
                     (pass ? ", PASS" : ", FAIL witness " + out.witness.dump());
  r.stream_row({suite, std::to_string(out.checked), std::to_string(out.violations),
                pass ? "true" : "false"},
               line);
  r.exit_code = pass ? 0 : 1;
}

Word random_reduced_word(std::mt19937_64& rng, std::span<const std::uint32_t> gens,
                         int length) {
  std::vector<Letter> letters;
  std::uniform_int_distribution<std::size_t> gen_dist(0, gens.size() - 1);
  std::uniform_int_distribution<int> sign_dist(0, 1);
  while ((int)letters.size() < length) {
    Letter l{gens[gen_dist(rng)], sign_dist(rng) ? 1 : -1};
    if (!letters.empty() && letters.back().generator == l.generator &&
        letters.back().sign == -l.sign)
      continue;
    letters.push_back(l);
  }
  return Word::reduced_from(letters);
}

void run_freegroup_check(Report& r, const GlobalOpts& opts, int cases) {
  std::mt19937_64 rng(opts.seed);
  std::uniform_int_distribution<int> zlen_dist(0, 3), ylen_dist(1, 5),
      count_dist(2, 5);
  const std::uint32_t root_gens[] = {0, 1};
  std::uint64_t products_checked = 0, mismatches = 0;
  ordered_json witness = nullptr;
  for (int c = 0; c < cases; ++c) {
    const Word z = random_reduced_word(rng, root_gens, zlen_dist(rng));
    const Word w = random_reduced_word(rng, root_gens, zlen_dist(rng));
    // interior letters may only reuse generators that are really in the root
    std::vector<std::uint32_t> root_interior;
    for (std::uint32_t g : root_gens)
      if (z.support().count(g) || w.support().count(g)) root_interior.push_back(g);
    const int count = count_dist(rng);
    std::vector<Word> middles;
    for (int i = 0; i < count; ++i) {
      const std::uint32_t fresh[] = {static_cast<std::uint32_t>(10 + 3 * i),
                                     static_cast<std::uint32_t>(11 + 3 * i)};
      std::vector<std::uint32_t> interior{fresh[0], fresh[1]};
      interior.insert(interior.end(), root_interior.begin(), root_interior.end());
      const int len = ylen_dist(rng);
      std::vector<Letter> letters;
      std::uniform_int_distribution<std::size_t> ipick(0, interior.size() - 1);
      std::uniform_int_distribution<int> fpick(0, 1), sign_dist(0, 1);
      while ((int)letters.size() < len) {
        const bool endpoint = letters.empty() || (int)letters.size() == len - 1;
        const std::uint32_t g = endpoint ? fresh[fpick(rng)] : interior[ipick(rng)];
        Letter l{g, sign_dist(rng) ? 1 : -1};
        if (!letters.empty() && letters.back().generator == l.generator &&
            letters.back().sign == -l.sign)
          continue;
        letters.push_back(l);
      }
      middles.push_back(Word::reduced_from(letters));
    }
    FixedEndsFamily fam = FixedEndsFamily::of(z, w, std::move(middles));
    const std::uint64_t n = fam.junction_cancellation();
    const auto products = fp_closure(fam.members());
    for (std::uint32_t mask = 1; mask < (1u << count); ++mask) {
      std::vector<std::uint64_t> lengths;
      for (int i = 0; i < count; ++i)
        if ((mask >> i) & 1) lengths.push_back(fam.members()[i].length());
      ++products_checked;
      if (products[mask - 1].length() != product_length_formula(lengths, n)) {
        ++mismatches;
        if (witness.is_null())
          witness = ordered_json{{"case", c},
                                 {"z", z.str()},
                                 {"w", w.str()},
                                 {"mask", mask},
                                 {"product", products[mask - 1].str()}};
      }
    }
  }
  const bool pass = mismatches == 0;
  r.results = ordered_json{{"cases", cases},
                           {"products_checked", products_checked},
                           {"mismatches", mismatches},
                           {"pass", pass},
                           {"witness", witness}};
  r.csv_header = {"cases", "products_checked", "mismatches", "pass"};
  r.stream_row({std::to_string(cases), std::to_string(products_checked),
                std::to_string(mismatches), pass ? "true" : "false"},
               "freegroup-check: " + std::to_string(products_checked) +
                   " products across " + std::to_string(cases) + " families, " +
                   std::to_string(mismatches) + " mismatches" +
                   (pass ? ", PASS" : ", FAIL witness " + witness.dump()));
  r.exit_code = pass ? 0 : 1;
}

void run_ordinal_demo(Report& r, const GlobalOpts& opts, const std::string& bound_text,
                      int target, const std::string& coloring_name, int coeff_cap) {
  const CnfOrdinal bound = CnfOrdinal::parse(bound_text);
  OrdinalColoring coloring;
  if (coloring_name == "zero")
    coloring = [](const CnfOrdinal&) { return Color::zero; };
  else if (coloring_name == "coeff-parity")
    coloring = coeff_sum_parity_coloring();
  else if (coloring_name == "random")
    coloring = seeded_ordinal_coloring(opts.seed);
  else
    throw std::invalid_argument("ordinal-demo: unknown coloring " + coloring_name);

  const std::vector<CnfOrdinal> seq =
      greedy_mono_sequence(coloring, bound, static_cast<std::size_t>(target),
                           static_cast<std::uint64_t>(coeff_cap));
  const bool collapse = fp_equals_set(seq);
  auto seq_json = ordered_json::array();
  std::string joined;
  for (const auto& o : seq) {
    seq_json.push_back(o.str());
    if (!joined.empty()) joined += ' ';
    joined += o.str();
  }
  r.results = ordered_json{{"bound", bound.str()},
                           {"target", target},
                           {"coloring", coloring_name},
                           {"sequence", seq_json},
                           {"color", to_int(coloring(seq.front()))},
                           {"fp_equals_set", collapse}};
  r.csv_header = {"sequence", "color", "fp_equals_set"};
  r.stream_row({joined, std::to_string(to_int(coloring(seq.front()))),
                collapse ? "true" : "false"},
               "sequence [" + joined + "], color " +
                   std::to_string(to_int(coloring(seq.front()))) +
                   (collapse ? ", all increasing sums collapse to their last term"
                             : ", COLLAPSE CHECK FAILED"));
  r.exit_code = collapse ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  GlobalOpts opts;
  if (const char* env = std::getenv("HINDLAB_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v >= 1 && v <= 1024) opts.threads = (int)v;
  }

  CLI::App app{"Experimental search for monochromatic finite-union structures"};
  app.require_subcommand(1);
  app.set_version_flag("--version", HINDLAB_VERSION);
  app.add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  app.add_option("--out", opts.out_path, "Write the report to this path");
  app.add_option("--seed", opts.seed, "Seed for random colorings / generators")
      ->capture_default_str();
  app.add_option("--threads", opts.threads,
                 "Search threads (default from HINDLAB_THREADS, flag wins)")
      ->check(CLI::PositiveNumber);
  int budget_secs = 0;
  auto* budget_opt = app.add_option("--time-budget-secs", budget_secs,
                                    "Search time budget in seconds")
                         ->check(CLI::PositiveNumber);

  int table_n = 8;
  auto* cmd_table = app.add_subcommand("color-table", "Log-parity color per set size");
  cmd_table->add_option("--n", table_n, "Universe size")
      ->check(CLI::Range(1, 64))
      ->capture_default_str();

  std::string range_text = "4..8", coloring_spec = "log_parity";
  std::optional<int> target;
  auto* cmd_search = app.add_subcommand(
      "search-max", "Maximum monochromatic FU family over a range of universe sizes");
  cmd_search->add_option("--n-range", range_text, "Inclusive range A..B (or single N)")
      ->capture_default_str();
  cmd_search->add_option("--coloring", coloring_spec,
                         "log_parity | random | path to a coloring spec file")
      ->capture_default_str();
  cmd_search->add_option("--target", target, "Stop early at this family size");

  int hindman_max_n = 4;
  auto* cmd_hindman = app.add_subcommand(
      "hindman-min-n",
      "Smallest n such that every 2-coloring admits a monochromatic disjoint pair with union");
  cmd_hindman->add_option("--max-n", hindman_max_n, "Largest n to try (cap 4)")
      ->check(CLI::Range(1, 4))
      ->capture_default_str();

  std::string suite;
  int verify_n = 10, verify_cases = 1000;
  auto* cmd_verify = app.add_subcommand("verify", "Run a named invariant suite");
  cmd_verify
      ->add_option("suite", suite, "Which suite to run")
      ->required()
      ->check(CLI::IsMember({"flip-lemma", "injectivity", "support-additivity",
                             "length-formula", "absorption", "max-semigroup"}));
  cmd_verify->add_option("--n", verify_n, "Universe size for the set suites")
      ->check(CLI::Range(1, 12))
      ->capture_default_str();
  cmd_verify->add_option("--cases", verify_cases, "Random cases for max-semigroup")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  int fg_cases = 10000;
  auto* cmd_freegroup = app.add_subcommand(
      "freegroup-check", "Randomized product-length formula vs direct reduction");
  cmd_freegroup->add_option("--cases", fg_cases, "Number of random families")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  std::string bound_text = "w^3", ord_coloring = "zero";
  int ord_target = 3, coeff_cap = 8;
  auto* cmd_ordinal = app.add_subcommand(
      "ordinal-demo", "Greedy monochromatic ordinal sequence with collapsing sums");
  cmd_ordinal->add_option("--bound", bound_text, "Ordinal bound in CNF text form")
      ->capture_default_str();
  cmd_ordinal->add_option("--target", ord_target, "Sequence length")
      ->check(CLI::Range(1, 15))
      ->capture_default_str();
  cmd_ordinal
      ->add_option("--ordinal-coloring", ord_coloring, "zero | coeff-parity | random")
      ->check(CLI::IsMember({"zero", "coeff-parity", "random"}))
      ->capture_default_str();
  cmd_ordinal->add_option("--coeff-cap", coeff_cap, "Coefficient cap for enumeration")
      ->check(CLI::Range(1, 64))
      ->capture_default_str();

  for (CLI::App* sub : {cmd_table, cmd_search, cmd_hindman, cmd_verify, cmd_freegroup,
                        cmd_ordinal})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  if (budget_opt->count() > 0) opts.time_budget_secs = budget_secs;

  std::ofstream file_out;
  std::ostream* os = &std::cout;
  if (!opts.out_path.empty()) {
    file_out.open(opts.out_path);
    if (!file_out) {
      std::cerr << "cannot write to " << opts.out_path << "\n";
      return 2;
    }
    os = &file_out;
  }

  Report report;
  report.opts = &opts;
  report.stream = os;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    if (app.got_subcommand(cmd_table)) {
      report.command = "color-table";
      report.inputs = ordered_json{{"n", table_n}};
      report.csv_header = {"size", "block", "color"};
      run_color_table(report, table_n);
    } else if (app.got_subcommand(cmd_search)) {
      report.command = "search-max";
      report.inputs = ordered_json{
          {"n_range", range_text},
          {"coloring", coloring_spec},
          {"seed", opts.seed},
          {"threads", opts.threads},
          {"target", target ? ordered_json(*target) : ordered_json(nullptr)},
          {"time_budget_secs", opts.time_budget_secs
                                   ? ordered_json(*opts.time_budget_secs)
                                   : ordered_json(nullptr)}};
      report.csv_header = {"n", "max_size", "exhausted"};
      run_search_max(report, opts, range_text, coloring_spec, target);
    } else if (app.got_subcommand(cmd_hindman)) {
      report.command = "hindman-min-n";
      report.inputs = ordered_json{{"max_n", hindman_max_n}};
      report.csv_header = {"min_n"};
      run_hindman_min_n(report, hindman_max_n);
    } else if (app.got_subcommand(cmd_verify)) {
      report.command = "verify";
      report.inputs = ordered_json{{"suite", suite},
                                   {"n", verify_n},
                                   {"cases", verify_cases},
                                   {"seed", opts.seed}};
      run_verify(report, opts, suite, verify_n, verify_cases);
    } else if (app.got_subcommand(cmd_freegroup)) {
      report.command = "freegroup-check";
      report.inputs = ordered_json{{"cases", fg_cases}, {"seed", opts.seed}};
      run_freegroup_check(report, opts, fg_cases);
    } else if (app.got_subcommand(cmd_ordinal)) {
      report.command = "ordinal-demo";
      report.inputs = ordered_json{{"bound", bound_text},
                                   {"target", ord_target},
                                   {"ordinal_coloring", ord_coloring},
                                   {"coeff_cap", coeff_cap},
                                   {"seed", opts.seed}};
      run_ordinal_demo(report, opts, bound_text, ord_target, ord_coloring, coeff_cap);
    }
  } catch (const construction_failure& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return 1;
  } catch (const insufficient_family_error& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::length_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "internal verification failure: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  const auto wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - t0)
                           .count();

  emit_report(report, opts, *os, wall_ms);
  if (os == &file_out) {
    file_out.close();
    if (!file_out) {
      std::cerr << "write to " << opts.out_path << " failed\n";
      return 2;
    }
  }
  return report.exit_code;
}
