#include "fibconj/substitution.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "fibconj/error.hpp"
#include "fibconj/kernels.hpp"

namespace fibconj {

namespace {

void check_letters(std::span<const Letter> w, std::size_t alphabet_size) {
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i] >= alphabet_size)
      throw Error(ErrorKind::AlphabetMismatch, "letter " + std::to_string(w[i]) + " at offset " +
                                                   std::to_string(i) + " is outside an alphabet of size " +
                                                   std::to_string(alphabet_size));
}

void require_primitive(const Substitution& s, const char* what) {
  if (!is_primitive(s)) throw Error(ErrorKind::PrimitivityRequired, std::string(what) + " requires a primitive substitution");
}

}  // namespace

Substitution::Substitution(std::vector<Word> images) : images_(std::move(images)) {
  if (images_.empty()) throw Error(ErrorKind::InvalidArgument, "substitution needs at least one letter");
  for (std::size_t a = 0; a < images_.size(); ++a) {
    if (images_[a].empty())
      throw Error(ErrorKind::InvalidArgument, "image of letter " + std::to_string(a) + " is empty");
    check_letters(images_[a], images_.size());
  }
}

const Word& Substitution::image(Letter a) const {
  if (a >= images_.size())
    throw Error(ErrorKind::AlphabetMismatch, "letter " + std::to_string(a) + " is outside the alphabet");
  return images_[a];
}

std::size_t Substitution::max_image_length() const {
  std::size_t longest = 0;
  for (const auto& w : images_) longest = std::max(longest, w.size());
  return longest;
}

Word substitute(const Substitution& s, std::span<const Letter> w) {
  check_letters(w, s.alphabet_size());
  Word out;
  for (Letter a : w) {
    const auto& img = s.images()[a];
    out.insert(out.end(), img.begin(), img.end());
  }
  return out;
}

Substitution power(const Substitution& s, unsigned k) {
  if (k == 0) throw Error(ErrorKind::InvalidArgument, "power must be at least 1");
  std::vector<Word> images = s.images();
  for (unsigned i = 1; i < k; ++i)
    for (auto& img : images) img = substitute(s, img);
  return Substitution(std::move(images));
}

Word fixed_point_prefix(const Substitution& s, Letter seed, std::size_t len) {
  const auto& img = s.image(seed);
  if (img.front() != seed)
    throw Error(ErrorKind::NotAFixedPointSeed, "image of letter " + std::to_string(seed) + " does not start with it");
  if (img.size() < 2)
    throw Error(ErrorKind::NonGrowingSeed, "image of letter " + std::to_string(seed) + " has length 1");

  // x = s(x): letter i of x expands to a block further along the same word.
  Word out(img.begin(), img.end());
  for (std::size_t i = 1; out.size() < len; ++i) {
    const auto& next = s.images()[out[i]];
    out.insert(out.end(), next.begin(), next.end());
  }
  out.resize(len);
  return out;
}

std::optional<Letter> default_seed(const Substitution& s) {
  for (Letter a = 0; a < s.alphabet_size(); ++a) {
    const auto& img = s.images()[a];
    if (img.front() == a && img.size() >= 2) return a;
  }
  return std::nullopt;
}

std::vector<Word> factors_in_order(std::span<const Letter> w, std::size_t n) {
  std::vector<Word> out;
  std::set<Word> seen;
  for (std::size_t i = 0; n > 0 && i + n <= w.size(); ++i) {
    Word f(w.begin() + static_cast<std::ptrdiff_t>(i), w.begin() + static_cast<std::ptrdiff_t>(i + n));
    if (seen.insert(f).second) out.push_back(std::move(f));
  }
  return out;
}

FactorLanguage language(const Substitution& s, std::size_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "factor length must be positive");
  require_primitive(s, "language");

  FactorLanguage result{n, {}};
  if (s.max_image_length() == 1) {
    // Primitive and non-growing: a single letter mapped to itself.
    result.words.insert(Word(n, 0));
    return result;
  }

  // Seed with the n-factors of some s^j(0), then close under
  // y -> n-factors of s(y). Every n-factor of s(s(y)) is covered by at most n
  // consecutive letters of s(y), and |s(y)| >= n, so the closure from any
  // seed reaches all of L^n for a primitive growing substitution.
  Word grown{0};
  while (grown.size() < n) grown = substitute(s, grown);

  std::deque<Word> pending;
  auto add_factors = [&](const Word& w) {
    for (std::size_t i = 0; i + n <= w.size(); ++i) {
      Word f(w.begin() + static_cast<std::ptrdiff_t>(i), w.begin() + static_cast<std::ptrdiff_t>(i + n));
      if (result.words.insert(f).second) pending.push_back(std::move(f));
    }
  };
  add_factors(grown);
  while (!pending.empty()) {
    Word y = std::move(pending.front());
    pending.pop_front();
    add_factors(substitute(s, y));
  }
  return result;
}

std::size_t complexity(const Substitution& s, std::size_t n) { return language(s, n).size(); }

std::vector<std::int64_t> parikh_vector(std::span<const Letter> w, std::size_t alphabet_size) {
  check_letters(w, alphabet_size);
  std::vector<std::int64_t> counts(alphabet_size, 0);
  for (Letter a : w) ++counts[a];
  return counts;
}

IntMatrix incidence_matrix(const Substitution& s) {
  const auto k = s.alphabet_size();
  IntMatrix m(k);
  for (std::size_t a = 0; a < k; ++a)
    for (Letter b : s.images()[a]) ++m(a, b);
  return m;
}

bool is_primitive(const Substitution& s) {
  // Wielandt: a primitive k x k matrix has M^((k-1)^2+1) > 0, and for
  // non-negative matrices positivity at that exponent implies primitivity.
  const std::uint64_t k = s.alphabet_size();
  const auto support = kernels::BoolMatrix::support_of(incidence_matrix(s));
  return kernels::bool_power(support, (k - 1) * (k - 1) + 1).all_set();
}

bool is_injective(const Substitution& s) {
  std::set<Word> distinct(s.images().begin(), s.images().end());
  return distinct.size() == s.alphabet_size();
}

bool has_full_rank(const Substitution& s) { return is_nonsingular(incidence_matrix(s)); }

Substitution permute_letters(const Substitution& s, std::span<const Letter> perm) {
  const auto k = s.alphabet_size();
  if (perm.size() != k) throw Error(ErrorKind::AlphabetMismatch, "permutation size differs from alphabet size");
  std::vector<bool> hit(k, false);
  for (Letter x : perm) {
    if (x >= k || hit[x]) throw Error(ErrorKind::InvalidArgument, "letter map is not a permutation");
    hit[x] = true;
  }
  std::vector<Word> images(k);
  for (std::size_t a = 0; a < k; ++a) {
    Word img;
    for (Letter b : s.images()[a]) img.push_back(perm[b]);
    images[perm[a]] = std::move(img);
  }
  return Substitution(std::move(images));
}

Relabeling canonical_relabel(const Substitution& s, Letter seed) {
  const auto k = s.alphabet_size();
  // Letters of the fixed point are exactly those reachable from the seed.
  std::vector<bool> reachable(k, false);
  std::vector<Letter> stack{seed};
  reachable.at(seed) = true;
  while (!stack.empty()) {
    const Letter a = stack.back();
    stack.pop_back();
    for (Letter b : s.images()[a])
      if (!reachable[b]) {
        reachable[b] = true;
        stack.push_back(b);
      }
  }
  for (std::size_t a = 0; a < k; ++a)
    if (!reachable[a])
      throw Error(ErrorKind::UnreachableLetter,
                  "letter " + std::to_string(a) + " never occurs in the fixed point of letter " + std::to_string(seed));

  std::vector<Letter> perm(k, static_cast<Letter>(k));
  Letter next = 0;
  std::size_t scanned = 0;
  for (std::size_t len = 16; next < k; len *= 2) {
    const Word prefix = fixed_point_prefix(s, seed, len);
    for (; scanned < prefix.size() && next < k; ++scanned)
      if (perm[prefix[scanned]] == k) perm[prefix[scanned]] = next++;
  }
  return {permute_letters(s, perm), perm};
}

std::vector<Letter> first_letters(const Substitution& s) {
  std::vector<Letter> out;
  for (const auto& w : s.images()) out.push_back(w.front());
  return out;
}

std::vector<Letter> last_letters(const Substitution& s) {
  std::vector<Letter> out;
  for (const auto& w : s.images()) out.push_back(w.back());
  return out;
}

}  // namespace fibconj
