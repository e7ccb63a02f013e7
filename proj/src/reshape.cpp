#include "fibconj/reshape.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "fibconj/error.hpp"
#include "fibconj/fibonacci.hpp"

namespace fibconj {

Substitution partition_reshape(const Substitution& s, const ReshapeSpec& spec) {
  const auto k = s.alphabet_size();
  std::vector<int> owner(k, -1);
  for (int part = 0; part < 2; ++part)
    for (Letter a : part == 0 ? spec.b0 : spec.b1) {
      if (a >= k) throw Error(ErrorKind::AlphabetMismatch, "reshape block letter outside the alphabet");
      if (owner[a] != -1) throw Error(ErrorKind::InvalidArgument, "reshape blocks share letter " + std::to_string(a));
      owner[a] = part;
    }
  if (std::find(owner.begin(), owner.end(), -1) != owner.end())
    throw Error(ErrorKind::InvalidArgument, "reshape blocks do not cover the alphabet");

  std::vector<Word> images(k);
  auto recut = [&](const Word& block, const std::vector<std::size_t>& cuts, const char* name) {
    const Word image = substitute(s, block);
    if (cuts.size() != block.size())
      throw Error(ErrorKind::InvalidArgument, std::string("cut count for ") + name + " is " + std::to_string(cuts.size()) +
                                                  ", block has " + std::to_string(block.size()) + " letters");
    if (std::accumulate(cuts.begin(), cuts.end(), std::size_t{0}) != image.size())
      throw Error(ErrorKind::InvalidArgument, std::string("cuts for ") + name + " do not sum to the image length " +
                                                  std::to_string(image.size()));
    std::size_t pos = 0;
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (cuts[i] == 0) throw Error(ErrorKind::InvalidArgument, "cut lengths must be positive");
      images[block[i]].assign(image.begin() + static_cast<std::ptrdiff_t>(pos),
                              image.begin() + static_cast<std::ptrdiff_t>(pos + cuts[i]));
      pos += cuts[i];
    }
  };
  recut(spec.b0, spec.cuts0, "b0");
  recut(spec.b1, spec.cuts1, "b1");
  return Substitution(std::move(images));
}

Word rotate_word(std::span<const Letter> w) {
  if (w.empty()) throw Error(ErrorKind::InvalidArgument, "cannot rotate the empty word");
  Word out(w.begin() + 1, w.end());
  out.push_back(w.front());
  return out;
}

Word eta_length_pattern(unsigned n) {
  if (n < 5) throw Error(ErrorKind::InvalidArgument, "eta_n needs n >= 5");
  Word w{0};
  for (unsigned i = 0; i < n - 4; ++i) w = substitute(fibonacci_substitution(), w);
  return rotate_word(w);
}

EtaFamilyMember eta_family(unsigned n) { return eta_family(n, eta_length_pattern(n)); }

EtaFamilyMember eta_family(unsigned n, const Word& pattern) {
  if (n < 5) throw Error(ErrorKind::InvalidArgument, "eta_n needs n >= 5");
  const std::size_t total = fib(n), f1 = fib(n - 1), f2 = fib(n - 2), f3 = fib(n - 3);

  if (pattern.size() != f2) throw Error(ErrorKind::InvalidArgument, "length pattern must have F_{n-2} letters");
  if (pattern.front() != 1 || pattern.back() != 0)
    throw Error(ErrorKind::InvalidArgument, "length pattern must start with 1 and end with 0");
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    if (pattern[i] > 1) throw Error(ErrorKind::InvalidArgument, "length pattern must be binary");
    if (i > 0 && pattern[i] == 1 && pattern[i - 1] == 1)
      throw Error(ErrorKind::InvalidArgument, "length pattern must not contain 11");
  }

  // Built on 1-based labels as in the construction, stored 0-based.
  std::vector<Word> images(total);
  auto interval = [](std::size_t first, std::size_t last) {
    Word w;
    for (std::size_t x = first; x <= last; ++x) w.push_back(static_cast<Letter>(x - 1));
    return w;
  };
  const std::size_t medium_head = f3 + 1, large_head = f1 + 1;

  images[medium_head - 1] = interval(f1, f1 + 1);
  for (std::size_t a = medium_head + 1; a <= f1; ++a) images[a - 1] = interval(a + f2, a + f2);

  // Large letters cut 1..F_{n-1} into pieces of length 2 - v_k.
  std::vector<bool> large_cut(f1 + 1, false);
  std::size_t pos = 1;
  for (std::size_t k = 0; k < f2; ++k) {
    const std::size_t len = 2 - pattern[k];
    images[large_head + k - 1] = interval(pos, pos + len - 1);
    pos += len;
    if (pos <= f1) large_cut[pos - 1] = true;
  }
  if (pos != f1 + 1) throw Error(ErrorKind::InvalidArgument, "length pattern does not tile 1..F_{n-1}");

  // Small letters cut 1..F_{n-1}-1 exactly where the large letters do not.
  std::size_t start = 1;
  std::size_t small = 1;
  for (std::size_t c = 1; c <= f1 - 1; ++c) {
    if (large_cut[c]) continue;
    if (small > f3) throw Error(ErrorKind::InvalidArgument, "length pattern yields too many small pieces");
    images[small - 1] = interval(start, c);
    ++small;
    start = c + 1;
  }
  if (small != f3 + 1 || start != f1)
    throw Error(ErrorKind::InvalidArgument, "length pattern does not yield F_{n-3} small pieces");

  EtaFamilyMember out{n, Substitution(std::move(images)), {}, static_cast<Letter>(medium_head - 1),
                      static_cast<Letter>(large_head - 1), pattern};
  out.species.reserve(total);
  for (std::size_t a = 1; a <= total; ++a)
    out.species.push_back(a <= f3 ? Species::Small : (a <= f1 ? Species::Medium : Species::Large));
  return out;
}

std::vector<Letter> first_letter_map(const Substitution& s, unsigned k) {
  const auto first = first_letters(s);
  std::vector<Letter> out(s.alphabet_size());
  for (Letter a = 0; a < s.alphabet_size(); ++a) {
    Letter x = a;
    for (unsigned i = 0; i < k; ++i) x = first[x];
    out[a] = x;
  }
  return out;
}

namespace {

// first_hit[a] = smallest k in [1, max_steps] with a letter of `targets` in
// s^k(a), or 0 if none.
std::vector<std::size_t> steps_to_reach(const Substitution& s, const std::vector<bool>& targets, std::size_t max_steps) {
  const auto k = s.alphabet_size();
  std::vector<std::size_t> first_hit(k, 0);
  // current[b]: s^(step-1)(b) contains a target.
  std::vector<bool> current = targets;
  for (std::size_t step = 1; step <= max_steps; ++step) {
    std::vector<bool> next(k, false);
    for (Letter a = 0; a < k; ++a)
      for (Letter b : s.images()[a])
        if (current[b]) {
          next[a] = true;
          break;
        }
    for (Letter a = 0; a < k; ++a)
      if (next[a] && first_hit[a] == 0) first_hit[a] = step;
    current = std::move(next);
  }
  return first_hit;
}

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b, std::uint64_t cap) {
  return a >= cap - std::min(cap, b) ? cap : a + b;
}

}  // namespace

EtaCertificate inspect_eta(unsigned n) {
  const auto member = eta_family(n);
  const auto& eta = member.substitution;
  const auto k = eta.alphabet_size();
  EtaCertificate cert;
  cert.n = n;

  cert.primitive = is_primitive(eta);
  if (!cert.primitive) cert.failures.emplace_back("primitive");

  cert.full_rank = has_full_rank(eta);
  if (!cert.full_rank) cert.failures.emplace_back("full rank");

  const auto f = first_letter_map(eta, 2);
  cert.first_letter_decreasing = true;
  for (Letter a = 0; a < k; ++a) {
    if (member.species[a] == Species::Small || a == member.medium_head) continue;
    if (f[a] >= a) cert.first_letter_decreasing = false;
  }
  if (!cert.first_letter_decreasing) cert.failures.emplace_back("first letter of eta^2 decreases on L and M minus a_M");

  // |eta^j(a)| via the incidence matrix, saturated well above the bound.
  const std::uint64_t cap = 4 * k + 16;
  std::vector<std::uint64_t> lengths(k, 1);
  cert.small_growth = true;
  for (std::size_t j = 1; j <= 2 * k + 1; ++j) {
    std::vector<std::uint64_t> next(k, 0);
    for (Letter a = 0; a < k; ++a)
      for (Letter b : eta.images()[a]) next[a] = saturating_add(next[a], lengths[b], cap);
    lengths = std::move(next);
    if (j % 2 == 1) {
      const std::size_t m = (j - 1) / 2;
      for (Letter a = 0; a < k; ++a)
        if (member.species[a] == Species::Small && lengths[a] < m + 2) cert.small_growth = false;
    }
  }
  if (!cert.small_growth) cert.failures.emplace_back("|eta^(2m+1)(a)| >= m+2 on S");

  std::vector<bool> small_letters(k, false);
  std::size_t outside_small = 0;
  for (Letter a = 0; a < k; ++a) {
    small_letters[a] = member.species[a] == Species::Small;
    if (!small_letters[a]) ++outside_small;
  }
  const auto to_small = steps_to_reach(eta, small_letters, outside_small);
  cert.reaches_small = true;
  for (Letter a = 0; a < k; ++a)
    if (!small_letters[a] && to_small[a] == 0) cert.reaches_small = false;
  if (!cert.reaches_small) cert.failures.emplace_back("M and L reach S within |M u L| steps");

  std::vector<bool> letter_one(k, false);
  letter_one[0] = true;
  const auto to_one = steps_to_reach(eta, letter_one, 2 * k);
  cert.reaches_one = std::none_of(to_one.begin(), to_one.end(), [](std::size_t x) { return x == 0; });
  cert.max_steps_to_one = *std::max_element(to_one.begin(), to_one.end());
  if (!cert.reaches_one) cert.failures.emplace_back("letter 1 occurs in eta^k(a) for k <= 2 F_n");
  return cert;
}

EtaCertificate certify_eta(unsigned n) {
  auto cert = inspect_eta(n);
  if (!cert.passed()) {
    std::string clauses;
    for (const auto& f : cert.failures) clauses += (clauses.empty() ? "" : "; ") + f;
    throw Error(ErrorKind::CertificateFailure, "eta_" + std::to_string(n) + " fails: " + clauses);
  }
  return cert;
}

}  // namespace fibconj
