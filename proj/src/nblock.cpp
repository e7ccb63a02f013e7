#include "fibconj/nblock.hpp"

#include <string>

#include "fibconj/error.hpp"

namespace fibconj {

BlockCode::BlockCode(std::size_t block_length, std::vector<Word> blocks)
    : block_length_(block_length), blocks_(std::move(blocks)) {
  if (block_length_ == 0) throw Error(ErrorKind::InvalidArgument, "block length must be positive");
  for (Letter i = 0; i < blocks_.size(); ++i) {
    if (blocks_[i].size() != block_length_) throw Error(ErrorKind::InvalidArgument, "block of the wrong length");
    if (!index_.emplace(blocks_[i], i).second) throw Error(ErrorKind::InvalidArgument, "duplicate block in code");
  }
}

const Word& BlockCode::block(Letter code) const {
  if (code >= blocks_.size())
    throw Error(ErrorKind::AlphabetMismatch, "letter " + std::to_string(code) + " is outside the block alphabet");
  return blocks_[code];
}

std::optional<Letter> BlockCode::code_of(std::span<const Letter> window) const {
  const auto it = index_.find(Word(window.begin(), window.end()));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Letter BlockCode::first_letter(Letter code) const { return block(code).front(); }

NBlockPresentation nblock_substitution(const Substitution& s, std::size_t n, Letter seed) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "block length must be positive");
  const std::size_t expected = complexity(s, n);  // also enforces primitivity

  // Canonical coding: grow the fixed point until every n-block has shown up.
  std::vector<Word> blocks;
  for (std::size_t len = 2 * n + 16; blocks.size() < expected; len *= 2)
    blocks = factors_in_order(fixed_point_prefix(s, seed, len), n);
  if (blocks.size() != expected)
    throw Error(ErrorKind::Internal, "fixed point shows more n-blocks than the language has");
  BlockCode code(n, std::move(blocks));

  std::vector<Word> images;
  images.reserve(code.size());
  for (const auto& block : code.blocks()) {
    const Word expanded = substitute(s, block);
    const std::size_t keep = s.images()[block.front()].size();
    Word img;
    for (std::size_t i = 0; i < keep; ++i) {
      const auto letter = code.code_of(std::span<const Letter>(expanded).subspan(i, n));
      if (!letter) throw Error(ErrorKind::Internal, "image of a block leaves the language");
      img.push_back(*letter);
    }
    images.push_back(std::move(img));
  }
  return {Substitution(std::move(images)), std::move(code), 0};
}

Word block_encode(std::span<const Letter> w, const BlockCode& code) {
  const std::size_t n = code.block_length();
  if (w.size() < n)
    throw Error(ErrorKind::InvalidArgument, "word of length " + std::to_string(w.size()) +
                                                " is shorter than the block length " + std::to_string(n));
  Word out;
  out.reserve(w.size() - n + 1);
  for (std::size_t i = 0; i + n <= w.size(); ++i) {
    const auto letter = code.code_of(w.subspan(i, n));
    if (!letter) {
      std::string window;
      for (std::size_t j = i; j < i + n; ++j) window += (j > i ? "," : "") + std::to_string(w[j]);
      throw Error(ErrorKind::NotInLanguage, "window [" + window + "] at offset " + std::to_string(i) +
                                                " is not an n-block of the language");
    }
    out.push_back(*letter);
  }
  return out;
}

Word project_first(std::span<const Letter> w, const BlockCode& code) {
  Word out;
  out.reserve(w.size());
  for (Letter c : w) out.push_back(code.first_letter(c));
  return out;
}

bool verify_key_equation(const Substitution& s, std::size_t n, std::size_t depth, Letter seed) {
  const auto presentation = nblock_substitution(s, n, seed);
  const auto& block_sub = presentation.substitution;
  const auto& code = presentation.code;

  for (Letter b = 0; b < block_sub.alphabet_size(); ++b) {
    const Word lhs = project_first(block_sub.images()[b], code);
    const Word rhs = s.image(code.first_letter(b));
    if (lhs != rhs) return false;
  }
  if (depth == 0) return true;
  return project_first(fixed_point_prefix(block_sub, presentation.seed, depth), code) ==
         fixed_point_prefix(s, seed, depth);
}

bool verify_key_equation(const Substitution& s, std::size_t n, std::size_t depth) {
  const auto seed = default_seed(s);
  if (!seed) throw Error(ErrorKind::NotAFixedPointSeed, "substitution has no growing fixed-point seed");
  return verify_key_equation(s, n, depth, *seed);
}

}  // namespace fibconj
