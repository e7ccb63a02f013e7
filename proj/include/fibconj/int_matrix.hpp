#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace fibconj {

/// Dense square integer matrix, row-major. Used for incidence matrices, where
/// row a is the Parikh vector of the image of letter a.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t dim, std::int64_t fill = 0);
  IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);
  static IntMatrix identity(std::size_t dim);
  static IntMatrix from_row_major(std::size_t dim, std::vector<std::int64_t> entries);

  std::size_t dim() const noexcept { return dim_; }
  std::int64_t operator()(std::size_t row, std::size_t col) const { return data_[row * dim_ + col]; }
  std::int64_t& operator()(std::size_t row, std::size_t col) { return data_[row * dim_ + col]; }
  const std::vector<std::int64_t>& entries() const noexcept { return data_; }

  std::int64_t trace() const;
  std::int64_t row_sum(std::size_t row) const;
  bool is_nonnegative() const;

  IntMatrix operator*(const IntMatrix& rhs) const;
  IntMatrix pow(unsigned exponent) const;
  /// Simultaneous row/column permutation: result(i,j) = M(perm[i], perm[j]).
  IntMatrix permuted(const std::vector<std::size_t>& perm) const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
  friend auto operator<=>(const IntMatrix& a, const IntMatrix& b) {
    if (auto c = a.dim_ <=> b.dim_; c != 0) return c;
    return a.data_ <=> b.data_;
  }

  std::string to_string() const;

 private:
  std::size_t dim_ = 0;
  std::vector<std::int64_t> data_;
};

/// Exact determinant (fraction-free Bareiss elimination over GMP integers).
mpz_class determinant(const IntMatrix& m);

/// Determinant modulo a prime p < 2^31.
std::uint64_t determinant_mod(const IntMatrix& m, std::uint64_t prime);

/// Exact non-singularity test. A non-zero residue modulo any prime is a proof;
/// only when every probe prime vanishes does it fall back to `determinant`.
bool is_nonsingular(const IntMatrix& m);

}  // namespace fibconj
