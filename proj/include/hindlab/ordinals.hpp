#ifndef HINDLAB_ORDINALS_HPP
#define HINDLAB_ORDINALS_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hindlab/colorings.hpp"

namespace hindlab {

/// greedy_mono_sequence found no eligible ordinal in some block.
struct construction_failure : std::runtime_error {
  std::size_t block;
  construction_failure(std::size_t block_, const std::string& what)
      : std::runtime_error(what), block(block_) {}
};

/// An ordinal below omega^omega in Cantor normal form:
/// sum of w^{e_i} * c_i with strictly decreasing exponents and positive
/// coefficients.  The empty term list is 0.  Immutable value type.
class CnfOrdinal {
 public:
  struct Term {
    std::uint32_t exponent;
    std::uint64_t coefficient;
    friend bool operator==(const Term&, const Term&) = default;
  };

  CnfOrdinal() = default;  // zero

  static CnfOrdinal finite(std::uint64_t n);
  static CnfOrdinal omega_power(std::uint32_t e);

  /// Validates canonical form: strictly decreasing exponents, no zero
  /// coefficients.
  static CnfOrdinal from_terms(std::vector<Term> terms);

  /// Text form: "w^2*3+w*2+5".  "^1" and "*1" may be omitted (and are
  /// omitted by str()); "0" is the zero ordinal.  Terms must appear in
  /// strictly decreasing exponent order.
  static CnfOrdinal parse(std::string_view text);
  std::string str() const;

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Leading exponent; ordinal must be nonzero.
  std::uint32_t leading_exponent() const;

  friend bool operator==(const CnfOrdinal&, const CnfOrdinal&) = default;

  /// Ordinal order = lexicographic on the (exponent, coefficient) term
  /// list, missing terms smallest.
  friend std::strong_ordering operator<=>(const CnfOrdinal& a, const CnfOrdinal& b);

 private:
  std::vector<Term> terms_;
};

/// Ordinal addition in CNF: terms of gamma below delta's leading exponent
/// are absorbed, equal leading exponents merge coefficients. Noncommutative.
CnfOrdinal ord_add(const CnfOrdinal& gamma, const CnfOrdinal& delta);

/// alpha * omega = w^{e+1} where e is alpha's leading exponent.
/// alpha must be nonzero.
CnfOrdinal times_omega(const CnfOrdinal& alpha);

/// True iff gamma + delta = delta.
bool absorbs(const CnfOrdinal& gamma, const CnfOrdinal& delta);

using OrdinalColoring = std::function<Color(const CnfOrdinal&)>;

/// Pure keyed-hash coloring of the term list; reproducible across runs.
OrdinalColoring seeded_ordinal_coloring(std::uint64_t seed);

/// Parity of the coefficient sum.
OrdinalColoring coeff_sum_parity_coloring();

/// All nonzero CNF ordinals < bound whose coefficients are <= coeff_cap,
/// in increasing ordinal order.  Guard: at most ~10^7 candidates.
std::vector<CnfOrdinal> enumerate_below(const CnfOrdinal& bound, std::uint64_t coeff_cap);

/// Greedy monochromatic construction: gamma_0 = first ordinal of the
/// majority color; each later gamma_xi = first ordinal of that color
/// strictly above times_omega(gamma_{xi-1}).  The threshold makes every
/// increasing-index sum collapse to its last summand.  Output is
/// unconditionally rechecked (monochromatic + fp_equals_set).
/// bound must be >= w^target_length; failure in block xi raises
/// construction_failure{xi}.
std::vector<CnfOrdinal> greedy_mono_sequence(const OrdinalColoring& coloring,
                                             const CnfOrdinal& bound,
                                             std::size_t target_length,
                                             std::uint64_t coeff_cap = 8);

/// True iff every increasing-index sum over the sequence equals its last
/// summand.  sequence must be strictly increasing; guard: size <= 15.
bool fp_equals_set(std::span<const CnfOrdinal> sequence);

/// FS closure under the max semigroup operation: the max over any subset
/// is an element of it, so the closure is exactly the distinct inputs.
/// Returns them sorted ascending.  items must be nonempty.
std::vector<CnfOrdinal> max_semigroup_fs(std::span<const CnfOrdinal> items);

}  // namespace hindlab

#endif
