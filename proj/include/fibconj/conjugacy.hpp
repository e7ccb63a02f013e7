#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fibconj/int_matrix.hpp"
#include "fibconj/substitution.hpp"

namespace fibconj {

/// (b, a): ba is in the language, s^m(b) ends with b and s^m(a) starts with a.
struct CyclicPair {
  Letter b;
  Letter a;
  unsigned m;
  friend bool operator==(const CyclicPair&, const CyclicPair&) = default;
  friend auto operator<=>(const CyclicPair&, const CyclicPair&) = default;
};

/// Cyclic pairs sorted by (b, a); every pair carries the same power m, the
/// lcm of the first- and last-letter cycle lengths involved.
std::vector<CyclicPair> cyclic_pairs(const Substitution& s);

/// Pairs shaped (b,a), (b,d), (c,d) with a != d and b != c.
struct ZTriple {
  CyclicPair ba;
  CyclicPair bd;
  CyclicPair cd;
  friend bool operator==(const ZTriple&, const ZTriple&) = default;
};

std::vector<ZTriple> z_triples(const Substitution& s);

/// Central window [-radius, radius) of the two-sided fixed point of s^m
/// generated by the pair.
Word pair_window(const Substitution& s, const CyclicPair& pair, std::size_t radius);

struct Bipartition {
  std::vector<Letter> part0;  ///< contains letter 0
  std::vector<Letter> part1;
};

/// A 2-colouring of the alphabet under which every 2-factor changes colour.
std::optional<Bipartition> two_point_factor(const Substitution& s);

Substitution time_reversal(const Substitution& s);

/// language(s1, l) == language(s2, l) for every l <= depth.
bool same_language(const Substitution& s1, const Substitution& s2, std::size_t depth);

/// Every substitution whose incidence matrix is m, in lexicographic order of
/// the image tuples.
std::vector<Substitution> substitutions_with_matrix(const IntMatrix& m);

enum class CodeVerdict { Conjugate, Inconclusive, NotIntertwining };
const char* to_string(CodeVerdict v) noexcept;

struct LetterCodeCertificate {
  bool intertwines = false;
  /// Smallest radius W such that pi of a (2W+1)-word fixes its centre letter.
  std::optional<std::size_t> window;
  CodeVerdict verdict = CodeVerdict::Inconclusive;
};

LetterCodeCertificate letter_code_certificate(const Substitution& s, std::span<const Letter> pi,
                                              const Substitution& t, std::size_t window_bound);

enum class Verdict { Conjugate, ExcludedZTriple, ExcludedTwoPoint, ExcludedByReversal, NotPrimitive, Inconclusive };
const char* to_string(Verdict v) noexcept;

struct CandidateVerdict {
  std::size_t matrix_index = 0;
  std::size_t candidate_index = 0;  ///< position in substitutions_with_matrix order
  Substitution substitution;
  bool primitive = false;
  bool injective = false;
  Verdict verdict = Verdict::Inconclusive;
  std::string provenance;
  std::vector<Letter> letter_map;  ///< set when verdict is Conjugate
  std::size_t window = 0;
};

struct ThreeSymbolReport {
  std::vector<IntMatrix> matrices;
  std::vector<CandidateVerdict> candidates;
};

ThreeSymbolReport classify_three_symbol();

}  // namespace fibconj
