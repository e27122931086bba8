#include "hindlab/words.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>

namespace hindlab {

namespace {

void check_generator(std::uint32_t g) {
  if (g >= kMaxGenerators)
    throw std::out_of_range("Word: generator index " + std::to_string(g) +
                            " exceeds the alphabet bound");
}

void push_reduced(std::vector<Letter>& stack, const Letter& l) {
  if (!stack.empty() && stack.back().generator == l.generator &&
      stack.back().sign == -l.sign) {
    stack.pop_back();
  } else {
    stack.push_back(l);
  }
}

std::string token_of(const Letter& l) {
  std::string t = "g" + std::to_string(l.generator);
  if (l.sign < 0) t += "^-1";
  return t;
}

}  // namespace

Word Word::reduced_from(std::span<const Letter> letters) {
  Word w;
  w.letters_.reserve(letters.size());
  for (const Letter& l : letters) {
    check_generator(l.generator);
    if (l.sign != 1 && l.sign != -1)
      throw std::invalid_argument("Word: letter sign must be +1 or -1");
    push_reduced(w.letters_, l);
  }
  return w;
}

Word Word::parse(std::string_view text) {
  std::vector<Letter> letters;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i >= text.size()) break;
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    std::string_view tok = text.substr(i, j - i);
    i = j;

    if (tok.size() < 2 || tok[0] != 'g')
      throw std::invalid_argument("Word::parse: bad token '" + std::string(tok) + "'");
    int sign = 1;
    std::string_view digits = tok.substr(1);
    if (auto pos = digits.find('^'); pos != std::string_view::npos) {
      if (digits.substr(pos) != "^-1")
        throw std::invalid_argument("Word::parse: bad exponent in '" + std::string(tok) +
                                    "' (only ^-1 is allowed)");
      sign = -1;
      digits = digits.substr(0, pos);
    }
    std::uint32_t g = 0;
    auto [p, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), g);
    if (ec != std::errc{} || p != digits.data() + digits.size())
      throw std::invalid_argument("Word::parse: bad generator index in '" + std::string(tok) +
                                  "'");
    check_generator(g);
    letters.push_back({g, sign});
  }
  // reject unreduced input rather than silently reducing
  for (std::size_t k = 0; k + 1 < letters.size(); ++k) {
    if (letters[k].generator == letters[k + 1].generator &&
        letters[k].sign == -letters[k + 1].sign)
      throw std::invalid_argument("Word::parse: unreduced input, tokens " +
                                  std::to_string(k) + " and " + std::to_string(k + 1) +
                                  " cancel (" + token_of(letters[k]) + " " +
                                  token_of(letters[k + 1]) + ")");
  }
  Word w;
  w.letters_ = std::move(letters);
  return w;
}

Word Word::positive(std::span<const std::uint32_t> generators) {
  Word w;
  w.letters_.reserve(generators.size());
  for (std::uint32_t g : generators) {
    check_generator(g);
    w.letters_.push_back({g, 1});
  }
  return w;
}

std::set<std::uint32_t> Word::support() const {
  std::set<std::uint32_t> out;
  for (const Letter& l : letters_) out.insert(l.generator);
  return out;
}

bool Word::is_positive() const {
  return std::all_of(letters_.begin(), letters_.end(),
                     [](const Letter& l) { return l.sign == 1; });
}

Word Word::inverse() const {
  Word w;
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    w.letters_.push_back(it->inverse());
  return w;
}

std::string Word::str() const {
  std::string out;
  for (std::size_t k = 0; k < letters_.size(); ++k) {
    if (k > 0) out += ' ';
    out += token_of(letters_[k]);
  }
  return out;
}

Word concat_reduce(const Word& x, const Word& y) {
  std::vector<Letter> stack = x.letters();
  // both inputs are reduced, so cancellation happens only at the junction
  for (const Letter& l : y.letters()) push_reduced(stack, l);
  Word w;
  // already reduced; go through reduced_from anyway to keep one invariant path
  return Word::reduced_from(stack);
}

std::vector<Word> fp_closure(std::span<const Word> sequence) {
  const std::size_t m = sequence.size();
  if (m < 1) throw std::invalid_argument("fp_closure: empty sequence");
  if (m > 15) throw std::length_error("fp_closure: more than 15 factors");
  const std::uint32_t total = (std::uint32_t{1} << m) - 1;
  std::vector<Word> out;
  out.reserve(total);
  for (std::uint32_t mask = 1; mask <= total; ++mask) {
    // factors in increasing index order: previously emitted product of
    // mask without its highest bit, times the highest-index factor
    std::uint32_t high = std::bit_width(mask) - 1;
    std::uint32_t rest = mask & ~(std::uint32_t{1} << high);
    const Word& last = sequence[high];
    out.push_back(rest == 0 ? last : concat_reduce(out[rest - 1], last));
  }
  return out;
}

WordDecomposition decompose(const Word& x, const std::set<std::uint32_t>& root) {
  const auto& ls = x.letters();
  std::size_t begin = 0, end = ls.size();
  while (begin < end && root.count(ls[begin].generator)) ++begin;
  if (begin == end)
    throw std::domain_error("decompose: support of the word lies inside the root");
  while (end > begin && root.count(ls[end - 1].generator)) --end;
  WordDecomposition d;
  d.prefix = Word::reduced_from(std::span(ls.data(), begin));
  d.middle = Word::reduced_from(std::span(ls.data() + begin, end - begin));
  d.suffix = Word::reduced_from(std::span(ls.data() + end, ls.size() - end));
  return d;
}

std::uint64_t product_length_formula(std::span<const std::uint64_t> lengths,
                                     std::uint64_t n) {
  if (lengths.empty())
    throw std::invalid_argument("product_length_formula: need at least one factor");
  std::uint64_t sum = 0;
  for (std::uint64_t l : lengths) {
    if (l <= n)
      throw std::domain_error("product_length_formula: factor length " + std::to_string(l) +
                              " does not exceed the junction cancellation " +
                              std::to_string(n));
    sum += l;
  }
  return sum - (lengths.size() - 1) * n;
}

std::set<std::uint32_t> word_support(const Word& x) { return x.support(); }

FixedEndsFamily FixedEndsFamily::of(Word z, Word w, std::vector<Word> middles) {
  if (middles.empty()) throw std::invalid_argument("FixedEndsFamily: no middles");
  std::set<std::uint32_t> root = z.support();
  root.merge(w.support());

  std::set<std::uint32_t> seen_fresh;
  for (const Word& y : middles) {
    if (y.empty()) throw std::invalid_argument("FixedEndsFamily: empty middle");
    if (root.count(y.letters().front().generator) ||
        root.count(y.letters().back().generator))
      throw std::invalid_argument("FixedEndsFamily: middle endpoint lies in the root");
    for (std::uint32_t g : y.support()) {
      if (root.count(g)) continue;  // interior root letters are fine
      if (!seen_fresh.insert(g).second)
        throw std::invalid_argument(
            "FixedEndsFamily: non-root generator " + std::to_string(g) +
            " shared between middles");
    }
  }

  FixedEndsFamily fam;
  fam.members_.reserve(middles.size());
  for (const Word& y : middles)
    fam.members_.push_back(concat_reduce(concat_reduce(z, y), w));
  fam.z_ = std::move(z);
  fam.w_ = std::move(w);
  fam.middles_ = std::move(middles);
  return fam;
}

std::uint64_t FixedEndsFamily::junction_cancellation() const {
  return z_.length() + w_.length() - concat_reduce(w_, z_).length();
}

}  // namespace hindlab
