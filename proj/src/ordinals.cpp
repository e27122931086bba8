#include "hindlab/ordinals.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "hindlab/detail/hash.hpp"

namespace hindlab {

CnfOrdinal CnfOrdinal::finite(std::uint64_t n) {
  CnfOrdinal o;
  if (n > 0) o.terms_.push_back({0, n});
  return o;
}

CnfOrdinal CnfOrdinal::omega_power(std::uint32_t e) {
  CnfOrdinal o;
  o.terms_.push_back({e, 1});
  return o;
}

CnfOrdinal CnfOrdinal::from_terms(std::vector<Term> terms) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].coefficient == 0)
      throw std::invalid_argument("CnfOrdinal: zero coefficient");
    if (i > 0 && terms[i - 1].exponent <= terms[i].exponent)
      throw std::invalid_argument("CnfOrdinal: exponents must strictly decrease");
  }
  CnfOrdinal o;
  o.terms_ = std::move(terms);
  return o;
}

namespace {

std::uint64_t parse_nat(std::string_view s, const char* what) {
  std::uint64_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size() || s.empty())
    throw std::invalid_argument("CnfOrdinal::parse: bad " + std::string(what) + " '" +
                                std::string(s) + "'");
  return v;
}

}  // namespace

CnfOrdinal CnfOrdinal::parse(std::string_view text) {
  if (text == "0") return CnfOrdinal();
  if (text.empty()) throw std::invalid_argument("CnfOrdinal::parse: empty input");
  std::vector<Term> terms;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t plus = text.find('+', pos);
    std::string_view tok = text.substr(pos, plus == std::string_view::npos
                                                ? std::string_view::npos
                                                : plus - pos);
    if (tok.empty()) throw std::invalid_argument("CnfOrdinal::parse: empty term");
    std::uint64_t exp = 0, coeff = 0;
    if (tok[0] == 'w') {
      exp = 1;
      tok.remove_prefix(1);
      if (!tok.empty() && tok[0] == '^') {
        std::size_t star = tok.find('*');
        exp = parse_nat(tok.substr(1, star == std::string_view::npos
                                          ? std::string_view::npos
                                          : star - 1),
                        "exponent");
        tok = star == std::string_view::npos ? std::string_view{} : tok.substr(star);
      }
      coeff = 1;
      if (!tok.empty()) {
        if (tok[0] != '*')
          throw std::invalid_argument("CnfOrdinal::parse: expected '*' in term");
        coeff = parse_nat(tok.substr(1), "coefficient");
      }
    } else {
      coeff = parse_nat(tok, "finite part");
    }
    if (exp > 0xffffffffULL)
      throw std::invalid_argument("CnfOrdinal::parse: exponent too large");
    if (coeff == 0) throw std::invalid_argument("CnfOrdinal::parse: zero coefficient");
    if (!terms.empty() && terms.back().exponent <= exp)
      throw std::invalid_argument(
          "CnfOrdinal::parse: exponents must strictly decrease (canonical form)");
    terms.push_back({static_cast<std::uint32_t>(exp), coeff});
    if (plus == std::string_view::npos) break;
    pos = plus + 1;
  }
  return from_terms(std::move(terms));
}

std::string CnfOrdinal::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i > 0) out += '+';
    const Term& t = terms_[i];
    if (t.exponent == 0) {
      out += std::to_string(t.coefficient);
      continue;
    }
    out += 'w';
    if (t.exponent > 1) out += "^" + std::to_string(t.exponent);
    if (t.coefficient > 1) out += "*" + std::to_string(t.coefficient);
  }
  return out;
}

std::uint32_t CnfOrdinal::leading_exponent() const {
  if (is_zero()) throw std::domain_error("CnfOrdinal: leading exponent of 0");
  return terms_.front().exponent;
}

std::strong_ordering operator<=>(const CnfOrdinal& a, const CnfOrdinal& b) {
  return std::lexicographical_compare_three_way(
      a.terms_.begin(), a.terms_.end(), b.terms_.begin(), b.terms_.end(),
      [](const CnfOrdinal::Term& x, const CnfOrdinal::Term& y) {
        return std::tie(x.exponent, x.coefficient) <=> std::tie(y.exponent, y.coefficient);
      });
}

CnfOrdinal ord_add(const CnfOrdinal& gamma, const CnfOrdinal& delta) {
  if (delta.is_zero()) return gamma;
  const std::uint32_t e = delta.leading_exponent();
  std::vector<CnfOrdinal::Term> terms;
  std::uint64_t merge = 0;
  for (const auto& t : gamma.terms()) {
    if (t.exponent > e)
      terms.push_back(t);
    else if (t.exponent == e)
      merge = t.coefficient;
    // exponent < e: absorbed
  }
  for (std::size_t i = 0; i < delta.terms().size(); ++i) {
    CnfOrdinal::Term t = delta.terms()[i];
    if (i == 0) t.coefficient += merge;
    terms.push_back(t);
  }
  return CnfOrdinal::from_terms(std::move(terms));
}

CnfOrdinal times_omega(const CnfOrdinal& alpha) {
  if (alpha.is_zero()) throw std::domain_error("times_omega: alpha must be nonzero");
  return CnfOrdinal::omega_power(alpha.leading_exponent() + 1);
}

bool absorbs(const CnfOrdinal& gamma, const CnfOrdinal& delta) {
  return ord_add(gamma, delta) == delta;
}

OrdinalColoring seeded_ordinal_coloring(std::uint64_t seed) {
  return [seed](const CnfOrdinal& o) {
    detail::KeyedHash h(seed);
    for (const auto& t : o.terms()) h.absorb(t.exponent).absorb(t.coefficient);
    return (h.digest() & 1) ? Color::one : Color::zero;
  };
}

OrdinalColoring coeff_sum_parity_coloring() {
  return [](const CnfOrdinal& o) {
    std::uint64_t s = 0;
    for (const auto& t : o.terms()) s += t.coefficient;
    return (s & 1) ? Color::one : Color::zero;
  };
}

std::vector<CnfOrdinal> enumerate_below(const CnfOrdinal& bound, std::uint64_t coeff_cap) {
  if (bound.is_zero()) return {};
  if (coeff_cap == 0) throw std::invalid_argument("enumerate_below: coeff_cap must be >= 1");
  const std::uint32_t max_exp = bound.leading_exponent();
  double log_count = (max_exp + 1) * std::log2(static_cast<double>(coeff_cap) + 1.0);
  if (log_count > 24)  // ~1.6e7 coefficient patterns
    throw std::length_error("enumerate_below: candidate space too large");

  // Coefficient vector (c_max .. c_0), each in [0, cap]; ordinal order is
  // lexicographic most-significant-first, so an ascending odometer emits
  // ordinals in increasing order.
  std::vector<std::uint64_t> c(max_exp + 1, 0);
  std::vector<CnfOrdinal> out;
  for (;;) {
    // advance odometer (least significant position = c_0 = last slot)
    int i = static_cast<int>(c.size()) - 1;
    while (i >= 0 && c[i] == coeff_cap) c[i--] = 0;
    if (i < 0) break;
    ++c[i];
    std::vector<CnfOrdinal::Term> terms;
    for (std::uint32_t k = 0; k <= max_exp; ++k)
      if (c[k] > 0) terms.push_back({max_exp - k, c[k]});
    CnfOrdinal o = CnfOrdinal::from_terms(std::move(terms));
    if (!(o < bound)) break;  // ascending, so nothing later qualifies either
    out.push_back(std::move(o));
  }
  return out;
}

std::vector<CnfOrdinal> greedy_mono_sequence(const OrdinalColoring& coloring,
                                             const CnfOrdinal& bound,
                                             std::size_t target_length,
                                             std::uint64_t coeff_cap) {
  if (target_length < 1)
    throw std::invalid_argument("greedy_mono_sequence: target_length must be >= 1");
  if (bound < CnfOrdinal::omega_power(static_cast<std::uint32_t>(target_length)))
    throw std::invalid_argument(
        "greedy_mono_sequence: bound must be >= w^target_length for absorption headroom");

  const std::vector<CnfOrdinal> all = enumerate_below(bound, coeff_cap);
  std::size_t ones = 0;
  for (const auto& o : all)
    if (coloring(o) == Color::one) ++ones;
  // majority cell; ties go to color 0
  const Color majority = (2 * ones > all.size()) ? Color::one : Color::zero;

  std::vector<CnfOrdinal> seq;
  std::size_t cursor = 0;
  for (std::size_t xi = 0; xi < target_length; ++xi) {
    if (xi > 0) {
      const CnfOrdinal threshold = times_omega(seq.back());
      while (cursor < all.size() && !(threshold < all[cursor])) ++cursor;
    }
    while (cursor < all.size() && coloring(all[cursor]) != majority) ++cursor;
    if (cursor == all.size())
      throw construction_failure(
          xi, "greedy_mono_sequence: no ordinal of the majority color in block " +
                  std::to_string(xi));
    seq.push_back(all[cursor++]);
  }

  for (const auto& o : seq)
    if (coloring(o) != majority)
      throw std::logic_error("greedy_mono_sequence: output not monochromatic");
  if (!fp_equals_set(seq))
    throw std::logic_error("greedy_mono_sequence: output sums do not collapse");
  return seq;
}

bool fp_equals_set(std::span<const CnfOrdinal> sequence) {
  const std::size_t m = sequence.size();
  if (m < 1) throw std::invalid_argument("fp_equals_set: empty sequence");
  if (m > 15) throw std::length_error("fp_equals_set: more than 15 elements");
  for (std::size_t i = 0; i + 1 < m; ++i)
    if (!(sequence[i] < sequence[i + 1]))
      throw std::invalid_argument("fp_equals_set: sequence must be strictly increasing");
  const std::uint32_t total = (std::uint32_t{1} << m) - 1;
  for (std::uint32_t mask = 1; mask <= total; ++mask) {
    CnfOrdinal sum;
    int last = -1;
    for (std::size_t i = 0; i < m; ++i) {
      if ((mask >> i) & 1) {
        sum = ord_add(sum, sequence[i]);
        last = static_cast<int>(i);
      }
    }
    if (!(sum == sequence[last])) return false;
  }
  return true;
}

std::vector<CnfOrdinal> max_semigroup_fs(std::span<const CnfOrdinal> items) {
  if (items.empty()) throw std::invalid_argument("max_semigroup_fs: no items");
  std::vector<CnfOrdinal> out(items.begin(), items.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace hindlab
