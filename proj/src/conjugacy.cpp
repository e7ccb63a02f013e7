#include "fibconj/conjugacy.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "fibconj/error.hpp"
#include "fibconj/fibonacci.hpp"
#include "fibconj/matrices.hpp"

namespace fibconj {

namespace {

void require_primitive(const Substitution& s, const char* what) {
  if (!is_primitive(s)) throw Error(ErrorKind::PrimitivityRequired, std::string(what) + " requires a primitive substitution");
}

// Cycle length of a under the map, or 0 when a is not periodic.
unsigned cycle_length(const std::vector<Letter>& map, Letter a) {
  Letter x = a;
  for (unsigned t = 1; t <= map.size(); ++t) {
    x = map[x];
    if (x == a) return t;
  }
  return 0;
}

}  // namespace

std::vector<CyclicPair> cyclic_pairs(const Substitution& s) {
  require_primitive(s, "cyclic_pairs");
  const auto first = first_letters(s);
  const auto last = last_letters(s);

  std::vector<CyclicPair> pairs;
  unsigned m = 1;
  for (const auto& w : language(s, 2).words) {
    const unsigned left = cycle_length(last, w[0]);
    const unsigned right = cycle_length(first, w[1]);
    if (left == 0 || right == 0) continue;
    m = std::lcm(m, std::lcm(left, right));
    pairs.push_back({w[0], w[1], 0});
  }
  for (auto& p : pairs) p.m = m;
  return pairs;
}

Word pair_window(const Substitution& s, const CyclicPair& pair, std::size_t radius) {
  const Substitution step = power(s, pair.m);
  auto grow = [&](Letter seed) {
    Word w{seed};
    for (int guard = 0; w.size() < radius; ++guard) {
      if (guard > 64) throw Error(ErrorKind::NonGrowingSeed, "cyclic pair does not generate an infinite word");
      w = substitute(step, w);
    }
    return w;
  };
  const Word left = grow(pair.b);
  const Word right = grow(pair.a);
  Word out(left.end() - static_cast<std::ptrdiff_t>(radius), left.end());
  out.insert(out.end(), right.begin(), right.begin() + static_cast<std::ptrdiff_t>(radius));
  return out;
}

std::vector<ZTriple> z_triples(const Substitution& s) {
  const auto pairs = cyclic_pairs(s);
  constexpr std::size_t kRadius = 8;
  std::vector<ZTriple> out;
  for (const auto& bd : pairs)
    for (const auto& ba : pairs) {
      if (ba.b != bd.b || ba.a == bd.a) continue;
      for (const auto& cd : pairs) {
        if (cd.a != bd.a || cd.b == bd.b) continue;
        const Word x = pair_window(s, ba, kRadius);
        const Word y = pair_window(s, bd, kRadius);
        const Word z = pair_window(s, cd, kRadius);
        if (x != y && y != z && x != z) out.push_back({ba, bd, cd});
      }
    }
  return out;
}

std::optional<Bipartition> two_point_factor(const Substitution& s) {
  require_primitive(s, "two_point_factor");
  const auto k = s.alphabet_size();
  if (k < 2) return std::nullopt;
  std::vector<std::vector<Letter>> adjacent(k);
  for (const auto& w : language(s, 2).words) {
    if (w[0] == w[1]) return std::nullopt;
    adjacent[w[0]].push_back(w[1]);
    adjacent[w[1]].push_back(w[0]);
  }
  std::vector<int> colour(k, -1);
  for (Letter start = 0; start < k; ++start) {
    if (colour[start] != -1) continue;
    colour[start] = 0;
    std::vector<Letter> stack{start};
    while (!stack.empty()) {
      const Letter a = stack.back();
      stack.pop_back();
      for (Letter b : adjacent[a]) {
        if (colour[b] == -1) {
          colour[b] = 1 - colour[a];
          stack.push_back(b);
        } else if (colour[b] == colour[a]) {
          return std::nullopt;
        }
      }
    }
  }
  Bipartition out;
  for (Letter a = 0; a < k; ++a) (colour[a] == 0 ? out.part0 : out.part1).push_back(a);
  return out;
}

Substitution time_reversal(const Substitution& s) {
  std::vector<Word> images = s.images();
  for (auto& w : images) std::reverse(w.begin(), w.end());
  return Substitution(std::move(images));
}

bool same_language(const Substitution& s1, const Substitution& s2, std::size_t depth) {
  if (s1.alphabet_size() != s2.alphabet_size())
    throw Error(ErrorKind::AlphabetMismatch, "same_language needs equal alphabet sizes");
  for (std::size_t l = 1; l <= depth; ++l)
    if (language(s1, l).words != language(s2, l).words) return false;
  return true;
}

std::vector<Substitution> substitutions_with_matrix(const IntMatrix& m) {
  const auto k = m.dim();
  if (!m.is_nonnegative()) throw Error(ErrorKind::InvalidArgument, "incidence matrix has a negative entry");
  std::vector<std::vector<Word>> choices(k);
  for (std::size_t a = 0; a < k; ++a) {
    Word letters;
    for (std::size_t b = 0; b < k; ++b) letters.insert(letters.end(), static_cast<std::size_t>(m(a, b)), static_cast<Letter>(b));
    if (letters.empty()) throw Error(ErrorKind::InvalidArgument, "row " + std::to_string(a) + " is zero: no image");
    do choices[a].push_back(letters);
    while (std::next_permutation(letters.begin(), letters.end()));
  }

  std::vector<Substitution> out;
  std::vector<std::size_t> pick(k, 0);
  while (true) {
    std::vector<Word> images;
    for (std::size_t a = 0; a < k; ++a) images.push_back(choices[a][pick[a]]);
    out.emplace_back(std::move(images));
    std::size_t a = k;
    while (a > 0 && pick[a - 1] + 1 == choices[a - 1].size()) pick[--a] = 0;
    if (a == 0) break;
    ++pick[a - 1];
  }
  return out;
}

const char* to_string(CodeVerdict v) noexcept {
  switch (v) {
    case CodeVerdict::Conjugate: return "CONJUGATE";
    case CodeVerdict::Inconclusive: return "INCONCLUSIVE";
    case CodeVerdict::NotIntertwining: return "NOT-INTERTWINING";
  }
  return "?";
}

LetterCodeCertificate letter_code_certificate(const Substitution& s, std::span<const Letter> pi, const Substitution& t,
                                              std::size_t window_bound) {
  if (pi.size() != s.alphabet_size())
    throw Error(ErrorKind::AlphabetMismatch, "letter map must be defined on every source letter");
  for (Letter x : pi)
    if (x >= t.alphabet_size()) throw Error(ErrorKind::AlphabetMismatch, "letter map leaves the target alphabet");
  require_primitive(s, "letter_code_certificate");
  require_primitive(t, "letter_code_certificate");

  auto project = [&](std::span<const Letter> w) {
    Word out;
    for (Letter a : w) out.push_back(pi[a]);
    return out;
  };

  LetterCodeCertificate cert;
  cert.intertwines = true;
  for (Letter a = 0; a < s.alphabet_size(); ++a)
    if (project(s.images()[a]) != t.images()[pi[a]]) cert.intertwines = false;
  if (!cert.intertwines) {
    cert.verdict = CodeVerdict::NotIntertwining;
    return cert;
  }

  for (std::size_t radius = 0; radius <= window_bound; ++radius) {
    std::map<Word, Letter> centre;
    bool determined = true;
    for (const auto& w : language(s, 2 * radius + 1).words) {
      const auto [it, inserted] = centre.emplace(project(w), w[radius]);
      if (!inserted && it->second != w[radius]) {
        determined = false;
        break;
      }
    }
    if (determined) {
      cert.window = radius;
      cert.verdict = CodeVerdict::Conjugate;
      return cert;
    }
  }
  cert.verdict = CodeVerdict::Inconclusive;
  return cert;
}

const char* to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::Conjugate: return "CONJUGATE";
    case Verdict::ExcludedZTriple: return "EXCLUDED (Z-triple)";
    case Verdict::ExcludedTwoPoint: return "EXCLUDED (two-point factor)";
    case Verdict::ExcludedByReversal: return "EXCLUDED (time reversal)";
    case Verdict::NotPrimitive: return "NOT PRIMITIVE";
    case Verdict::Inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

namespace {

constexpr std::size_t kCertificateWindow = 4;

// Surjective maps from a 3-letter alphabet onto {0, 1}.
std::vector<std::vector<Letter>> binary_letter_maps(std::size_t k) {
  std::vector<std::vector<Letter>> maps;
  for (unsigned bits = 1; bits + 1 < (1U << k); ++bits) {
    std::vector<Letter> pi;
    for (std::size_t a = 0; a < k; ++a) pi.push_back((bits >> a) & 1U);
    maps.push_back(std::move(pi));
  }
  return maps;
}

bool find_letter_code(const Substitution& s, CandidateVerdict& out, const char* route) {
  const auto target = fibonacci_substitution();
  for (const auto& pi : binary_letter_maps(s.alphabet_size())) {
    const auto cert = letter_code_certificate(s, pi, target, kCertificateWindow);
    if (cert.verdict == CodeVerdict::Conjugate) {
      out.verdict = Verdict::Conjugate;
      out.letter_map = pi;
      out.window = *cert.window;
      out.provenance = route;
      return true;
    }
  }
  return false;
}

}  // namespace

ThreeSymbolReport classify_three_symbol() {
  ThreeSymbolReport report;
  const auto raw = enumerate_golden(3, 2);
  report.matrices = permutation_classes(raw);

  for (std::size_t mi = 0; mi < report.matrices.size(); ++mi) {
    const auto candidates = substitutions_with_matrix(report.matrices[mi]);
    for (std::size_t ci = 0; ci < candidates.size(); ++ci) {
      CandidateVerdict v{mi, ci, candidates[ci]};
      v.primitive = is_primitive(v.substitution);
      v.injective = is_injective(v.substitution);
      if (!v.primitive) {
        v.verdict = Verdict::NotPrimitive;
        report.candidates.push_back(std::move(v));
        continue;
      }

      const auto reversed = time_reversal(v.substitution);
      if (!z_triples(v.substitution).empty()) {
        v.verdict = Verdict::ExcludedZTriple;
        v.provenance = "Z-triple among its cyclic pairs";
      } else if (two_point_factor(v.substitution)) {
        v.verdict = Verdict::ExcludedTwoPoint;
        v.provenance = "alternating 2-colouring of its 2-factors";
      } else if (!z_triples(reversed).empty() || two_point_factor(reversed)) {
        v.verdict = Verdict::ExcludedByReversal;
        v.provenance = "its time reversal is excluded";
      } else if (!find_letter_code(v.substitution, v, "letter code onto Fibonacci") &&
                 !find_letter_code(reversed, v, "time reversal has a letter code onto Fibonacci")) {
        v.verdict = Verdict::Inconclusive;
        v.provenance = "no obstruction and no letter code within the window bound";
      }
      report.candidates.push_back(std::move(v));
    }
  }
  return report;
}

}  // namespace fibconj
