#pragma once

// Text form of substitutions and words.
//
//   substitution := rule (';' rule)* [';']
//   rule         := letter '->' image
//   image        := letter+ | integer (',' integer)*
//   letter       := digit | 'a'..'z'     (single character)
//                 | integer             (only when the alphabet has > 10 labels)
//
// The numbering base is inferred from the left-hand sides: digits starting at
// 0 are 0-based, digits starting at 1 are 1-based, a-z are alphabetic.
// Whitespace is ignored. Rules may appear in any order but each letter of the
// alphabet must have exactly one rule.

#include <string>
#include <string_view>

#include "fibconj/substitution.hpp"

namespace fibconj {

enum class Notation { ZeroBased, OneBased, Alpha };

struct ParsedSubstitution {
  Substitution substitution;
  Notation notation;
};

ParsedSubstitution parse_substitution(std::string_view text);

/// Canonical rendering: rules in letter order, no whitespace. Uses comma
/// lists for images whenever some label needs more than one character.
std::string format_substitution(const Substitution& s, Notation notation);

/// Arrow-separated rendering for reports, e.g. "1->12, 2->3".
std::string format_rules(const Substitution& s, Notation notation);

std::string format_letter(Letter a, Notation notation);
/// Letters concatenated when every label is one character, else comma-separated.
std::string format_word(std::span<const Letter> w, Notation notation, std::size_t alphabet_size);

/// Parses a word over an alphabet of the given size (same label rules).
Word parse_word(std::string_view text, Notation notation, std::size_t alphabet_size);

/// Numeric label of a letter as printed in JSON (0-based or 1-based).
long long letter_label(Letter a, Notation notation);

}  // namespace fibconj
