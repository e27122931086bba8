#ifndef HINDLAB_WORDS_HPP
#define HINDLAB_WORDS_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

namespace hindlab {

constexpr std::uint32_t kMaxGenerators = 1u << 16;

/// A signed generator. Free-semigroup words use sign +1 only.
struct Letter {
  std::uint32_t generator;
  int sign;  // +1 or -1

  Letter inverse() const { return {generator, -sign}; }
  friend bool operator==(const Letter&, const Letter&) = default;
};

/// A reduced word over signed generators. Always reduced after
/// construction: no adjacent cancelling pair survives.
class Word {
 public:
  Word() = default;  // empty word

  /// Reduces an arbitrary letter sequence (single stack pass).
  static Word reduced_from(std::span<const Letter> letters);
  static Word reduced_from(std::initializer_list<Letter> letters) {
    return reduced_from(std::span<const Letter>(letters.begin(), letters.size()));
  }

  /// Parses whitespace-separated tokens "g<i>" / "g<i>^-1".
  /// Rejects malformed tokens and unreduced input with a diagnostic.
  static Word parse(std::string_view text);

  /// A word over unsigned generators (all signs +1).
  static Word positive(std::span<const std::uint32_t> generators);
  static Word positive(std::initializer_list<std::uint32_t> generators) {
    return positive(std::span<const std::uint32_t>(generators.begin(), generators.size()));
  }

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  /// Generators occurring with either sign.
  std::set<std::uint32_t> support() const;

  /// True when every sign is +1 (a free-semigroup word).
  bool is_positive() const;

  Word inverse() const;

  /// Token form; the empty word prints as "".
  std::string str() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word& a, const Word& b) {
    return std::lexicographical_compare_three_way(
        a.letters_.begin(), a.letters_.end(), b.letters_.begin(), b.letters_.end(),
        [](const Letter& x, const Letter& y) {
          return std::tie(x.generator, x.sign) <=> std::tie(y.generator, y.sign);
        });
  }

 private:
  std::vector<Letter> letters_;
};

/// Free-group multiplication: concatenate, then cancel at the junction.
/// For positive words no cancellation occurs and lengths add.
Word concat_reduce(const Word& x, const Word& y);

/// All 2^m - 1 products over strictly increasing index tuples, fully
/// reduced, in canonical index-mask order (factor order is fixed by index
/// order; products are not commuted). Guard: m <= 15.
std::vector<Word> fp_closure(std::span<const Word> sequence);

struct WordDecomposition {
  Word prefix;  // maximal prefix over root generators
  Word middle;  // nonempty; endpoints avoid the root
  Word suffix;  // maximal suffix over root generators
};

/// Splits x = prefix . middle . suffix with supp(prefix), supp(suffix)
/// inside the root and the first and last letters of middle outside it.
/// Throws std::domain_error when supp(x) is contained in the root (no
/// nonempty middle exists).
WordDecomposition decompose(const Word& x, const std::set<std::uint32_t>& root);

/// Sum of the lengths minus t*n for t+1 factors: the reduced length of a
/// product of fixed-(z, w) family members whose junctions cancel exactly n
/// letters each. Every length must exceed n.
std::uint64_t product_length_formula(std::span<const std::uint64_t> lengths, std::uint64_t n);

/// Generators occurring in x with either sign.
std::set<std::uint32_t> word_support(const Word& x);

/// A family x_i = z . y_i . w with fixed ends and fresh middles: the
/// middles' endpoints avoid the root (= supp(z) u supp(w)) and their
/// non-root generators are pairwise disjoint, so every increasing-index
/// product reduces only at the junctions and the length formula applies
/// with n = l(w) + l(z) - l(reduce(w.z)).
class FixedEndsFamily {
 public:
  /// Validates the construction preconditions; throws std::invalid_argument.
  static FixedEndsFamily of(Word z, Word w, std::vector<Word> middles);

  const Word& z() const { return z_; }
  const Word& w() const { return w_; }
  const std::vector<Word>& members() const { return members_; }
  const std::vector<Word>& middles() const { return middles_; }

  /// n = l(w) + l(z) - l(reduce(w.z)), the per-junction cancellation.
  std::uint64_t junction_cancellation() const;

 private:
  Word z_, w_;
  std::vector<Word> middles_;
  std::vector<Word> members_;
};

}  // namespace hindlab

#endif
