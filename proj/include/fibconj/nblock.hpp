#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "fibconj/substitution.hpp"

namespace fibconj {

/// Bijection between the length-N factors of a subshift and a standard
/// alphabet {0, ..., p-1}; letter i codes blocks()[i].
class BlockCode {
 public:
  BlockCode(std::size_t block_length, std::vector<Word> blocks);

  std::size_t block_length() const noexcept { return block_length_; }
  std::size_t size() const noexcept { return blocks_.size(); }
  const std::vector<Word>& blocks() const noexcept { return blocks_; }
  const Word& block(Letter code) const;
  std::optional<Letter> code_of(std::span<const Letter> window) const;
  /// pi_0: first letter of the coded block.
  Letter first_letter(Letter code) const;

 private:
  std::size_t block_length_;
  std::vector<Word> blocks_;
  std::map<Word, Letter> index_;
};

struct NBlockPresentation {
  Substitution substitution;
  BlockCode code;
  /// Standard letter of the first N-block of the fixed point (a seed of the
  /// block substitution).
  Letter seed;
};

/// The N-block substitution with blocks numbered by first occurrence in the
/// one-sided fixed point of s grown from `seed`.
NBlockPresentation nblock_substitution(const Substitution& s, std::size_t n, Letter seed);

/// Sliding window code: letter i of the result codes w[i, i+N).
Word block_encode(std::span<const Letter> w, const BlockCode& code);
Word project_first(std::span<const Letter> w, const BlockCode& code);

/// Checks pi_0 . s_N = s . pi_0 on every block letter, and that the fixed
/// point of the block substitution projects onto the fixed point of s for
/// `depth` letters.
bool verify_key_equation(const Substitution& s, std::size_t n, std::size_t depth, Letter seed);
bool verify_key_equation(const Substitution& s, std::size_t n, std::size_t depth);

}  // namespace fibconj
