#pragma once
#include <string>
#include <vector>

#include "fibconj/grammar.hpp"
#include "fibconj/substitution.hpp"
#include "oracles.hpp"

namespace testing {

inline fibconj::Substitution sub(const std::string& text) { return fibconj::parse_substitution(text).substitution; }

/// Digits as letters, shifted down by `base` (1 for one-based labels).
inline fibconj::Word word(const std::string& digits, int base = 0) {
  fibconj::Word w;
  for (char c : digits) w.push_back(static_cast<fibconj::Letter>(c - '0' - base));
  return w;
}

inline std::string digits(const fibconj::Word& w, int base = 0) {
  std::string out;
  for (auto a : w) out.push_back(static_cast<char>('0' + a + base));
  return out;
}

inline oracle::Images images(const fibconj::Substitution& s) { return s.images(); }

inline oracle::Matrix to_rows(const fibconj::IntMatrix& m) {
  oracle::Matrix rows(m.dim(), std::vector<long long>(m.dim()));
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) rows[i][j] = m(i, j);
  return rows;
}

}  // namespace testing
