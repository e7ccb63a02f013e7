#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fibconj/substitution.hpp"

namespace fibconj {

/// Two letter-disjoint blocks covering the alphabet, and new cut lengths for
/// the images s(b0) and s(b1).
struct ReshapeSpec {
  Word b0;
  Word b1;
  std::vector<std::size_t> cuts0;
  std::vector<std::size_t> cuts1;
};

/// Letter b0[i] gets the i-th piece of s(b0) under cuts0, likewise for b1.
Substitution partition_reshape(const Substitution& s, const ReshapeSpec& spec);

/// rho: w_2 ... w_l w_1.
Word rotate_word(std::span<const Letter> w);

enum class Species { Small, Medium, Large };

/// eta_n on F_n letters (0-based here; the 1-based letter x is x-1).
struct EtaFamilyMember {
  unsigned n = 0;
  Substitution substitution;
  std::vector<Species> species;
  Letter medium_head = 0;  ///< a_M
  Letter large_head = 0;   ///< a_L
  Word length_pattern;     ///< v, the L-image length pattern
};

/// rho(phi^{n-4}(0)).
Word eta_length_pattern(unsigned n);

EtaFamilyMember eta_family(unsigned n);
/// Expert mode: a caller-chosen pattern v, checked only for |v| = F_{n-2},
/// v_1 = 1, v_l = 0 and no "11".
EtaFamilyMember eta_family(unsigned n, const Word& pattern);

/// a -> first letter of s^k(a).
std::vector<Letter> first_letter_map(const Substitution& s, unsigned k);

struct EtaCertificate {
  unsigned n = 0;
  bool primitive = false;
  bool full_rank = false;
  bool first_letter_decreasing = false;  ///< f(a) < a on L and M \ {a_M}, f from eta^2
  bool small_growth = false;             ///< |eta^{2m+1}(a)| >= m+2, a in S
  bool reaches_small = false;            ///< every a in M u L reaches S within |M u L| steps
  bool reaches_one = false;              ///< letter 1 occurs in eta^k(a) for some k <= 2 F_n
  std::size_t max_steps_to_one = 0;
  std::vector<std::string> failures;

  bool passed() const noexcept { return failures.empty(); }
};

/// Runs every clause and records failures without throwing.
EtaCertificate inspect_eta(unsigned n);
/// inspect_eta, raising CertificateFailure when any clause fails.
EtaCertificate certify_eta(unsigned n);

}  // namespace fibconj
