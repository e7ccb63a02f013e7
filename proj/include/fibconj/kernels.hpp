#pragma once

// Data-parallel inner loops. Each kernel has an OpenMP implementation (the
// one the library calls) and a straightforward serial reference kept for the
// equivalence tests and the benchmark.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "fibconj/int_matrix.hpp"
#include "fibconj/substitution.hpp"

namespace fibconj::kernels {

/// Square boolean matrix with bit-packed rows.
class BoolMatrix {
 public:
  explicit BoolMatrix(std::size_t dim = 0);
  static BoolMatrix support_of(const IntMatrix& m);

  std::size_t dim() const noexcept { return dim_; }
  bool get(std::size_t row, std::size_t col) const;
  void set(std::size_t row, std::size_t col);
  bool all_set() const;

  std::span<const std::uint64_t> row(std::size_t r) const;
  std::span<std::uint64_t> row(std::size_t r);

  friend bool operator==(const BoolMatrix&, const BoolMatrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::size_t words_per_row_ = 0;
  std::vector<std::uint64_t> bits_;
};

BoolMatrix bool_multiply(const BoolMatrix& a, const BoolMatrix& b);
BoolMatrix bool_multiply_serial(const BoolMatrix& a, const BoolMatrix& b);

BoolMatrix bool_power(const BoolMatrix& m, std::uint64_t exponent);
BoolMatrix bool_power_serial(const BoolMatrix& m, std::uint64_t exponent);

struct Repetition {
  std::size_t offset;
  std::size_t period;
  friend bool operator==(const Repetition&, const Repetition&) = default;
  friend auto operator<=>(const Repetition&, const Repetition&) = default;
};

/// Every (offset, period) with w[offset, offset + 4*period) = v v v v,
/// 1 <= period <= max_period. Sorted by (offset, period).
std::vector<Repetition> fourth_powers(std::span<const Letter> w, std::size_t max_period);
/// Direct comparison of the four copies at every offset and period.
std::vector<Repetition> fourth_powers_serial(std::span<const Letter> w, std::size_t max_period);

using MatrixPredicate = std::function<bool(const IntMatrix&)>;

/// All r x r matrices with entries in [0, bound] accepted by `keep`, sorted.
std::vector<IntMatrix> enumerate_matrices(std::size_t r, std::int64_t bound, const MatrixPredicate& keep);
std::vector<IntMatrix> enumerate_matrices_serial(std::size_t r, std::int64_t bound, const MatrixPredicate& keep);

/// out[i] = f(first + i) for i < count.
std::vector<int> tabulate(std::int64_t first, std::size_t count, const std::function<int(std::int64_t)>& f);
std::vector<int> tabulate_serial(std::int64_t first, std::size_t count, const std::function<int(std::int64_t)>& f);

}  // namespace fibconj::kernels
