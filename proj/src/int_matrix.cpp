#include "fibconj/int_matrix.hpp"

#include <sstream>
#include <utility>

#include "fibconj/error.hpp"

namespace fibconj {

IntMatrix::IntMatrix(std::size_t dim, std::int64_t fill) : dim_(dim), data_(dim * dim, fill) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows) : dim_(rows.size()) {
  data_.reserve(dim_ * dim_);
  for (const auto& row : rows) {
    if (row.size() != dim_) throw Error(ErrorKind::InvalidArgument, "matrix must be square");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

IntMatrix IntMatrix::identity(std::size_t dim) {
  IntMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_row_major(std::size_t dim, std::vector<std::int64_t> entries) {
  if (entries.size() != dim * dim) throw Error(ErrorKind::InvalidArgument, "matrix must be square");
  IntMatrix m;
  m.dim_ = dim;
  m.data_ = std::move(entries);
  return m;
}

std::int64_t IntMatrix::trace() const {
  std::int64_t t = 0;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

std::int64_t IntMatrix::row_sum(std::size_t row) const {
  std::int64_t s = 0;
  for (std::size_t j = 0; j < dim_; ++j) s += (*this)(row, j);
  return s;
}

bool IntMatrix::is_nonnegative() const {
  for (auto x : data_)
    if (x < 0) return false;
  return true;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (dim_ != rhs.dim_) throw Error(ErrorKind::InvalidArgument, "matrix dimension mismatch");
  IntMatrix out(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t k = 0; k < dim_; ++k) {
      const auto a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < dim_; ++j) out(i, j) += a * rhs(k, j);
    }
  return out;
}

IntMatrix IntMatrix::pow(unsigned exponent) const {
  IntMatrix result = identity(dim_);
  IntMatrix base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

IntMatrix IntMatrix::permuted(const std::vector<std::size_t>& perm) const {
  IntMatrix out(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) out(i, j) = (*this)(perm[i], perm[j]);
  return out;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < dim_; ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < dim_; ++j) os << (j ? "," : "") << (*this)(i, j);
    os << ']';
  }
  os << ']';
  return os.str();
}

mpz_class determinant(const IntMatrix& m) {
  const std::size_t n = m.dim();
  if (n == 0) return 1;
  std::vector<mpz_class> a(n * n);
  for (std::size_t i = 0; i < n * n; ++i) a[i] = static_cast<long>(m.entries()[i]);
  auto at = [&](std::size_t i, std::size_t j) -> mpz_class& { return a[i * n + j]; };

  mpz_class previous = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      std::size_t pivot = k + 1;
      while (pivot < n && at(pivot, k) == 0) ++pivot;
      if (pivot == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(at(k, j), at(pivot, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        at(i, j) = (at(k, k) * at(i, j) - at(i, k) * at(k, j));
        mpz_divexact(at(i, j).get_mpz_t(), at(i, j).get_mpz_t(), previous.get_mpz_t());
      }
      at(i, k) = 0;
    }
    previous = at(k, k);
  }
  return sign * at(n - 1, n - 1);
}

std::uint64_t determinant_mod(const IntMatrix& m, std::uint64_t prime) {
  const std::size_t n = m.dim();
  std::vector<std::uint64_t> a(n * n);
  for (std::size_t i = 0; i < n * n; ++i) {
    const auto x = m.entries()[i] % static_cast<std::int64_t>(prime);
    a[i] = static_cast<std::uint64_t>(x < 0 ? x + static_cast<std::int64_t>(prime) : x);
  }
  auto at = [&](std::size_t i, std::size_t j) -> std::uint64_t& { return a[i * n + j]; };
  auto inverse = [prime](std::uint64_t x) {
    std::uint64_t result = 1, e = prime - 2;
    while (e) {
      if (e & 1) result = result * x % prime;
      x = x * x % prime;
      e >>= 1;
    }
    return result;
  };

  std::uint64_t det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && at(pivot, k) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(at(k, j), at(pivot, j));
      det = (prime - det) % prime;
    }
    det = det * at(k, k) % prime;
    const auto inv = inverse(at(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      if (at(i, k) == 0) continue;
      const auto factor = at(i, k) * inv % prime;
      for (std::size_t j = k; j < n; ++j) at(i, j) = (at(i, j) + prime - factor * at(k, j) % prime) % prime;
    }
  }
  return det;
}

bool is_nonsingular(const IntMatrix& m) {
  for (std::uint64_t prime : {2147483647ULL, 1000000007ULL, 998244353ULL})
    if (determinant_mod(m, prime) != 0) return true;
  return determinant(m) != 0;
}

}  // namespace fibconj
