#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "fibconj/kernels.hpp"
#include "fibconj/nblock.hpp"
#include "fibconj/quad_int.hpp"
#include "fibconj/substitution.hpp"

namespace fibconj {

/// 0 -> 01, 1 -> 0.
Substitution fibonacci_substitution();
/// 0 -> 10, 1 -> 0.
Substitution reverse_fibonacci_substitution();
/// First len letters of f = 0100101001...
Word fibonacci_word(std::size_t len);

/// F_1 = F_2 = 1. Valid for 1 <= n <= 92.
std::uint64_t fib(unsigned n);

/// floor(n * x), exactly.
std::int64_t floor_mul(QuadInt x, std::int64_t n);

/// Coding of the rotation z -> z + gamma (mod 1) by [0, gamma) -> 0 and
/// (gamma, 1) -> 1. Points hitting 0 or gamma exactly are coded both ways:
/// `left` is the code of z - eps and `right` the code of z + eps. Away from
/// those indices the two words agree.
struct RotationCoding {
  std::int64_t from = 0;
  Word left;
  Word right;
  std::vector<std::int64_t> ambiguous_at;

  bool ambiguous() const noexcept { return !ambiguous_at.empty(); }
};

RotationCoding rotation_code(QuadInt z, std::int64_t from, std::int64_t to);

/// w_1 = 1, w_2 = 00, w_3 = 101, w_n = w_{n-2} w_{n-3} w_{n-2}.
Word singular_word(unsigned n);

struct ReturnWords {
  Word u;  ///< w_n w_{n+1}
  Word v;  ///< w_n w_{n-1}
};
ReturnWords return_words(unsigned n);

/// Decomposition blocks for the F_{n-2}-block presentation of the Fibonacci
/// system; |b0| = F_n and |b1| = F_{n-1}.
struct DecompositionBlocks {
  unsigned n = 0;
  BlockCode code;
  Word b0;
  Word b1;
};
DecompositionBlocks decomposition_blocks(unsigned n);

/// One way of reading w as (proper suffix of a block) (b0|b1)* (proper prefix
/// of a block). `induced` has 0 for b0 and 1 for b1; `cuts` are the start
/// offsets of the complete blocks.
struct BlockParse {
  std::size_t head = 0;
  std::size_t tail = 0;
  std::vector<std::size_t> cuts;
  Word induced;
};

/// All parses (up to max_parses). Throws NotDecomposable, reporting the
/// longest parsable prefix, when there is none.
std::vector<BlockParse> parse_concatenation(std::span<const Letter> w, std::span<const Letter> b0,
                                            std::span<const Letter> b1, std::size_t max_parses = 4096);

/// 0 -> 00, 1 -> 1.
Word double_zeros(std::span<const Letter> w);

/// floor((n+2) Phi) - floor(n Phi) - floor(2 Phi), n >= 1.
int doubled_letter(std::int64_t n);

using kernels::Repetition;
std::vector<Repetition> find_fourth_powers(std::span<const Letter> w, std::size_t max_period);

}  // namespace fibconj
