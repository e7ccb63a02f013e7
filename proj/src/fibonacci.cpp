#include "fibconj/fibonacci.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <string>

#include "fibconj/error.hpp"

namespace fibconj {

Substitution fibonacci_substitution() { return Substitution({{0, 1}, {0}}); }

Substitution reverse_fibonacci_substitution() { return Substitution({{1, 0}, {0}}); }

Word fibonacci_word(std::size_t len) { return fixed_point_prefix(fibonacci_substitution(), 0, len); }

std::uint64_t fib(unsigned n) {
  if (n == 0 || n > 92) throw Error(ErrorKind::InvalidArgument, "fib(n) needs 1 <= n <= 92");
  std::uint64_t a = 1, b = 1;
  for (unsigned i = 2; i < n; ++i) {
    const auto next = a + b;
    a = b;
    b = next;
  }
  return n == 1 ? a : b;
}

std::int64_t floor_mul(QuadInt x, std::int64_t n) { return (n * x).floor(); }

RotationCoding rotation_code(QuadInt z, std::int64_t from, std::int64_t to) {
  if (to < from) throw Error(ErrorKind::InvalidArgument, "rotation window is empty");
  const QuadInt gamma = QuadInt::gamma();
  RotationCoding out;
  out.from = from;
  for (std::int64_t n = from; n <= to; ++n) {
    const QuadInt t = (z + n * gamma).frac();
    if (t == QuadInt(0)) {
      // z - eps lands just below 1, z + eps just above 0.
      out.left.push_back(1);
      out.right.push_back(0);
      out.ambiguous_at.push_back(n);
    } else if (t == gamma) {
      out.left.push_back(0);
      out.right.push_back(1);
      out.ambiguous_at.push_back(n);
    } else {
      const Letter x = t < gamma ? 0 : 1;
      out.left.push_back(x);
      out.right.push_back(x);
    }
  }
  return out;
}

Word singular_word(unsigned n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "singular words are indexed from 1");
  std::vector<Word> w{{}, {1}, {0, 0}, {1, 0, 1}};
  for (unsigned i = 4; i <= n; ++i) {
    Word next = w[i - 2];
    next.insert(next.end(), w[i - 3].begin(), w[i - 3].end());
    next.insert(next.end(), w[i - 2].begin(), w[i - 2].end());
    w.push_back(std::move(next));
  }
  return w[n];
}

ReturnWords return_words(unsigned n) {
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "return words need n >= 2");
  const Word wn = singular_word(n);
  ReturnWords out{wn, wn};
  const Word next = singular_word(n + 1);
  const Word prev = singular_word(n - 1);
  out.u.insert(out.u.end(), next.begin(), next.end());
  out.v.insert(out.v.end(), prev.begin(), prev.end());
  return out;
}

DecompositionBlocks decomposition_blocks(unsigned n) {
  if (n < 5) throw Error(ErrorKind::InvalidArgument, "decomposition blocks need n >= 5");
  const std::size_t block_length = fib(n - 2);
  auto presentation = nblock_substitution(fibonacci_substitution(), block_length, 0);

  const auto rw = return_words(n - 3);
  Word trimmed = singular_word(n - 3);
  trimmed.pop_back();
  Word u = rw.u, v = rw.v;
  u.insert(u.end(), trimmed.begin(), trimmed.end());
  v.insert(v.end(), trimmed.begin(), trimmed.end());

  DecompositionBlocks out{n, presentation.code, block_encode(u, presentation.code), block_encode(v, presentation.code)};
  if (out.b0.size() != fib(n) || out.b1.size() != fib(n - 1))
    throw Error(ErrorKind::Internal, "decomposition block lengths differ from F_n, F_{n-1}");
  return out;
}

namespace {

bool matches_at(std::span<const Letter> w, std::size_t pos, std::span<const Letter> block) {
  return pos + block.size() <= w.size() && std::equal(block.begin(), block.end(), w.begin() + static_cast<std::ptrdiff_t>(pos));
}

bool is_proper_suffix(std::span<const Letter> head, std::span<const Letter> block) {
  return head.size() < block.size() && std::equal(head.begin(), head.end(), block.end() - static_cast<std::ptrdiff_t>(head.size()));
}

bool is_proper_prefix(std::span<const Letter> tail, std::span<const Letter> block) {
  return tail.size() < block.size() && std::equal(tail.begin(), tail.end(), block.begin());
}

std::size_t common_prefix(std::span<const Letter> w, std::size_t pos, std::span<const Letter> block) {
  std::size_t k = 0;
  while (pos + k < w.size() && k < block.size() && w[pos + k] == block[k]) ++k;
  return k;
}

}  // namespace

std::vector<BlockParse> parse_concatenation(std::span<const Letter> w, std::span<const Letter> b0,
                                            std::span<const Letter> b1, std::size_t max_parses) {
  if (b0.empty() || b1.empty()) throw Error(ErrorKind::InvalidArgument, "decomposition blocks must be non-empty");
  const std::size_t len = w.size();
  const std::array<std::span<const Letter>, 2> blocks{b0, b1};

  // can_finish[i]: from offset i the rest splits into blocks and a proper prefix.
  std::vector<char> can_finish(len + 1, 0);
  for (std::size_t i = len + 1; i-- > 0;) {
    const auto rest = w.subspan(i);
    bool ok = is_proper_prefix(rest, b0) || is_proper_prefix(rest, b1);
    for (const auto& block : blocks)
      if (!ok && matches_at(w, i, block) && can_finish[i + block.size()]) ok = true;
    can_finish[i] = ok;
  }

  std::vector<BlockParse> parses;
  const std::size_t max_head = std::min(len, std::max(b0.size(), b1.size()) - 1);
  std::vector<std::size_t> cuts;
  Word induced;
  std::function<void(std::size_t, std::size_t)> walk = [&](std::size_t head, std::size_t pos) {
    if (parses.size() >= max_parses) return;
    const auto rest = w.subspan(pos);
    if (is_proper_prefix(rest, b0) || is_proper_prefix(rest, b1))
      parses.push_back({head, rest.size(), cuts, induced});
    for (Letter x = 0; x < 2; ++x) {
      const auto& block = blocks[x];
      if (!matches_at(w, pos, block) || !can_finish[pos + block.size()]) continue;
      cuts.push_back(pos);
      induced.push_back(x);
      walk(head, pos + block.size());
      cuts.pop_back();
      induced.pop_back();
    }
  };

  std::size_t longest = 0;
  for (std::size_t head = 0; head <= max_head; ++head) {
    const auto prefix = w.first(head);
    if (!(is_proper_suffix(prefix, b0) || is_proper_suffix(prefix, b1))) continue;
    if (can_finish[head]) {
      walk(head, head);
      continue;
    }
    // Track how far a failing reading gets, for the error report.
    std::size_t pos = head;
    while (true) {
      longest = std::max(longest, pos + std::max(common_prefix(w, pos, b0), common_prefix(w, pos, b1)));
      if (matches_at(w, pos, b0)) pos += b0.size();
      else if (matches_at(w, pos, b1)) pos += b1.size();
      else break;
    }
  }
  if (parses.empty())
    throw Error(ErrorKind::NotDecomposable, "word of length " + std::to_string(len) +
                                                " is not a concatenation of the blocks; longest parsable prefix " +
                                                std::to_string(std::min(longest, len)));
  return parses;
}

Word double_zeros(std::span<const Letter> w) {
  Word out;
  out.reserve(2 * w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] > 1) throw Error(ErrorKind::AlphabetMismatch, "double_zeros needs a binary word; offset " + std::to_string(i));
    out.push_back(w[i]);
    if (w[i] == 0) out.push_back(0);
  }
  return out;
}

int doubled_letter(std::int64_t n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "doubled_letter is indexed from 1");
  const QuadInt golden = QuadInt::golden();
  const auto value = floor_mul(golden, n + 2) - floor_mul(golden, n) - floor_mul(golden, 2);
  if (value != 0 && value != 1) throw Error(ErrorKind::Internal, "floor formula left {0,1} at n = " + std::to_string(n));
  return static_cast<int>(value);
}

std::vector<Repetition> find_fourth_powers(std::span<const Letter> w, std::size_t max_period) {
  return kernels::fourth_powers(w, max_period);
}

}  // namespace fibconj
