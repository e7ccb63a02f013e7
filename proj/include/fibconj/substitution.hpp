#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "fibconj/int_matrix.hpp"

namespace fibconj {

/// Letters are 0-based indices into an alphabet {0, ..., k-1}. How they are
/// rendered (0-based digits, 1-based digits, a-z) is a grammar concern.
using Letter = std::uint32_t;
using Word = std::vector<Letter>;

/// A substitution on k letters: one non-empty image word per letter.
/// Immutable once constructed.
class Substitution {
 public:
  explicit Substitution(std::vector<Word> images);

  std::size_t alphabet_size() const noexcept { return images_.size(); }
  const Word& image(Letter a) const;
  const std::vector<Word>& images() const noexcept { return images_; }

  /// Longest image length; 1 means the substitution never grows a word.
  std::size_t max_image_length() const;

  friend bool operator==(const Substitution&, const Substitution&) = default;
  friend auto operator<=>(const Substitution&, const Substitution&) = default;

 private:
  std::vector<Word> images_;
};

/// The set of length-N factors of a substitution subshift.
struct FactorLanguage {
  std::size_t length = 0;
  std::set<Word> words;

  bool contains(std::span<const Letter> w) const {
    return words.contains(Word(w.begin(), w.end()));
  }
  std::size_t size() const noexcept { return words.size(); }
  friend bool operator==(const FactorLanguage&, const FactorLanguage&) = default;
};

/// A substitution together with the letter permutation that produced it from
/// some source substitution; permutation[old] = new.
struct Relabeling {
  Substitution substitution;
  std::vector<Letter> permutation;
};

Word substitute(const Substitution& s, std::span<const Letter> w);
Substitution power(const Substitution& s, unsigned k);

/// First `len` letters of the one-sided fixed point lim s^k(seed).
Word fixed_point_prefix(const Substitution& s, Letter seed, std::size_t len);

/// Smallest letter whose image starts with itself and has length >= 2.
std::optional<Letter> default_seed(const Substitution& s);

FactorLanguage language(const Substitution& s, std::size_t n);
std::size_t complexity(const Substitution& s, std::size_t n);

IntMatrix incidence_matrix(const Substitution& s);
std::vector<std::int64_t> parikh_vector(std::span<const Letter> w, std::size_t alphabet_size);

bool is_primitive(const Substitution& s);
bool is_injective(const Substitution& s);
bool has_full_rank(const Substitution& s);

/// Renames letters by perm (perm[old] = new). perm must be a bijection.
Substitution permute_letters(const Substitution& s, std::span<const Letter> perm);

/// Relabels letters in order of first occurrence in the one-sided fixed point
/// grown from `seed`.
Relabeling canonical_relabel(const Substitution& s, Letter seed);

/// a -> first letter of s(a), and a -> last letter of s(a).
std::vector<Letter> first_letters(const Substitution& s);
std::vector<Letter> last_letters(const Substitution& s);

/// All length-n factors of w, in order of first occurrence.
std::vector<Word> factors_in_order(std::span<const Letter> w, std::size_t n);

}  // namespace fibconj
