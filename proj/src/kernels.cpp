#include "fibconj/kernels.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "fibconj/error.hpp"

namespace fibconj::kernels {

BoolMatrix::BoolMatrix(std::size_t dim)
    : dim_(dim), words_per_row_((dim + 63) / 64), bits_(dim * ((dim + 63) / 64), 0) {}

BoolMatrix BoolMatrix::support_of(const IntMatrix& m) {
  BoolMatrix out(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j)
      if (m(i, j) != 0) out.set(i, j);
  return out;
}

bool BoolMatrix::get(std::size_t row, std::size_t col) const {
  return (bits_[row * words_per_row_ + col / 64] >> (col % 64)) & 1U;
}

void BoolMatrix::set(std::size_t row, std::size_t col) {
  bits_[row * words_per_row_ + col / 64] |= std::uint64_t{1} << (col % 64);
}

bool BoolMatrix::all_set() const {
  for (std::size_t r = 0; r < dim_; ++r) {
    const auto bits = row(r);
    for (std::size_t w = 0; w < words_per_row_; ++w) {
      const std::size_t used = std::min<std::size_t>(64, dim_ - 64 * w);
      const std::uint64_t mask = used == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << used) - 1);
      if ((bits[w] & mask) != mask) return false;
    }
  }
  return true;
}

std::span<const std::uint64_t> BoolMatrix::row(std::size_t r) const {
  return {bits_.data() + r * words_per_row_, words_per_row_};
}

std::span<std::uint64_t> BoolMatrix::row(std::size_t r) {
  return {bits_.data() + r * words_per_row_, words_per_row_};
}

namespace {

// Row i of A*B is the union of rows k of B over the set bits k of row i of A.
void multiply_row(const BoolMatrix& a, const BoolMatrix& b, BoolMatrix& out, std::size_t i) {
  auto dst = out.row(i);
  const auto src = a.row(i);
  for (std::size_t w = 0; w < src.size(); ++w) {
    std::uint64_t bits = src[w];
    while (bits) {
      const std::size_t k = 64 * w + static_cast<std::size_t>(std::countr_zero(bits));
      bits &= bits - 1;
      const auto brow = b.row(k);
      for (std::size_t x = 0; x < dst.size(); ++x) dst[x] |= brow[x];
    }
  }
}

void check_same_dim(const BoolMatrix& a, const BoolMatrix& b) {
  if (a.dim() != b.dim()) throw Error(ErrorKind::InvalidArgument, "boolean matrix dimension mismatch");
}

BoolMatrix bool_identity(std::size_t dim) {
  BoolMatrix id(dim);
  for (std::size_t i = 0; i < dim; ++i) id.set(i, i);
  return id;
}

template <typename Multiply>
BoolMatrix power_by_squaring(const BoolMatrix& m, std::uint64_t exponent, Multiply multiply) {
  BoolMatrix result = bool_identity(m.dim());
  BoolMatrix base = m;
  while (exponent > 0) {
    if (exponent & 1U) result = multiply(result, base);
    exponent >>= 1U;
    if (exponent > 0) base = multiply(base, base);
  }
  return result;
}

}  // namespace

BoolMatrix bool_multiply(const BoolMatrix& a, const BoolMatrix& b) {
  check_same_dim(a, b);
  BoolMatrix out(a.dim());
  const auto n = static_cast<std::int64_t>(a.dim());
#pragma omp parallel for schedule(static) if (n >= 128)
  for (std::int64_t i = 0; i < n; ++i) multiply_row(a, b, out, static_cast<std::size_t>(i));
  return out;
}

BoolMatrix bool_multiply_serial(const BoolMatrix& a, const BoolMatrix& b) {
  check_same_dim(a, b);
  BoolMatrix out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      for (std::size_t k = 0; k < a.dim(); ++k)
        if (a.get(i, k) && b.get(k, j)) {
          out.set(i, j);
          break;
        }
  return out;
}

BoolMatrix bool_power(const BoolMatrix& m, std::uint64_t exponent) {
  return power_by_squaring(m, exponent, [](const BoolMatrix& a, const BoolMatrix& b) { return bool_multiply(a, b); });
}

BoolMatrix bool_power_serial(const BoolMatrix& m, std::uint64_t exponent) {
  BoolMatrix result = bool_identity(m.dim());
  for (std::uint64_t e = 0; e < exponent; ++e) result = bool_multiply_serial(result, m);
  return result;
}

std::vector<Repetition> fourth_powers(std::span<const Letter> w, std::size_t max_period) {
  const std::size_t n = w.size();
  const auto periods = static_cast<std::int64_t>(std::min(max_period, n / 4));
  std::vector<std::vector<Repetition>> per_period(static_cast<std::size_t>(std::max<std::int64_t>(periods, 0)));

  // A fourth power of period p starts at i iff w[j] == w[j+p] for the 3p
  // consecutive j in [i, i+3p): slide a run length over the match indicator.
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t pi = 1; pi <= periods; ++pi) {
    const auto p = static_cast<std::size_t>(pi);
    auto& hits = per_period[p - 1];
    const std::size_t span_len = 3 * p;
    std::size_t run = 0;
    for (std::size_t j = n - p; j-- > 0;) {
      run = (w[j] == w[j + p]) ? run + 1 : 0;
      if (run >= span_len && j + 4 * p <= n) hits.push_back({j, p});
    }
  }

  std::vector<Repetition> out;
  for (auto& hits : per_period) out.insert(out.end(), hits.begin(), hits.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Repetition> fourth_powers_serial(std::span<const Letter> w, std::size_t max_period) {
  std::vector<Repetition> out;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t p = 1; p <= max_period && i + 4 * p <= w.size(); ++p) {
      bool match = true;
      for (std::size_t k = p; k < 4 * p && match; ++k) match = w[i + k] == w[i + k % p];
      if (match) out.push_back({i, p});
    }
  return out;
}

namespace {

std::uint64_t count_matrices(std::size_t r, std::int64_t bound) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < r * r; ++i) total *= static_cast<std::uint64_t>(bound + 1);
  return total;
}

IntMatrix decode_matrix(std::size_t r, std::int64_t bound, std::uint64_t index) {
  std::vector<std::int64_t> entries(r * r);
  for (std::size_t i = r * r; i-- > 0;) {
    entries[i] = static_cast<std::int64_t>(index % static_cast<std::uint64_t>(bound + 1));
    index /= static_cast<std::uint64_t>(bound + 1);
  }
  return IntMatrix::from_row_major(r, std::move(entries));
}

void check_enumeration(std::size_t r, std::int64_t bound) {
  if (r == 0 || bound < 0) throw Error(ErrorKind::InvalidArgument, "enumeration needs r >= 1 and bound >= 0");
  if (static_cast<double>(r * r) * std::log2(static_cast<double>(bound + 1)) > 40.0)
    throw Error(ErrorKind::InvalidArgument, "enumeration space too large");
}

}  // namespace

std::vector<IntMatrix> enumerate_matrices(std::size_t r, std::int64_t bound, const MatrixPredicate& keep) {
  check_enumeration(r, bound);
  const auto total = static_cast<std::int64_t>(count_matrices(r, bound));
  std::vector<IntMatrix> out;
#pragma omp parallel
  {
    std::vector<IntMatrix> local;
#pragma omp for schedule(static) nowait
    for (std::int64_t idx = 0; idx < total; ++idx) {
      IntMatrix m = decode_matrix(r, bound, static_cast<std::uint64_t>(idx));
      if (keep(m)) local.push_back(std::move(m));
    }
#pragma omp critical
    out.insert(out.end(), local.begin(), local.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<IntMatrix> enumerate_matrices_serial(std::size_t r, std::int64_t bound, const MatrixPredicate& keep) {
  check_enumeration(r, bound);
  std::vector<IntMatrix> out;
  std::vector<std::int64_t> entries(r * r, 0);
  while (true) {
    IntMatrix m = IntMatrix::from_row_major(r, entries);
    if (keep(m)) out.push_back(std::move(m));
    std::size_t pos = entries.size();
    while (pos > 0 && entries[pos - 1] == bound) entries[--pos] = 0;
    if (pos == 0) break;
    ++entries[pos - 1];
  }
  return out;
}

std::vector<int> tabulate(std::int64_t first, std::size_t count, const std::function<int(std::int64_t)>& f) {
  std::vector<int> out(count);
  const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = f(first + i);
  return out;
}

std::vector<int> tabulate_serial(std::int64_t first, std::size_t count, const std::function<int(std::int64_t)>& f) {
  std::vector<int> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(f(first + static_cast<std::int64_t>(i)));
  return out;
}

}  // namespace fibconj::kernels
