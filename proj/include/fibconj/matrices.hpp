#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fibconj/int_matrix.hpp"

namespace fibconj {

/// Integer polynomial, coefficients from the constant term upwards.
struct Polynomial {
  std::vector<std::int64_t> coeffs;

  std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;
  std::string to_string(char var = 'u') const;
};

/// Monic characteristic polynomial det(uI - M) (Faddeev-LeVerrier, exact).
Polynomial char_poly(const IntMatrix& m);

/// Quotient and remainder by the monic divisor.
std::pair<Polynomial, Polynomial> divide_monic(const Polynomial& p, const Polynomial& divisor);

/// Number of distinct real roots of p in [Phi, +inf).
std::size_t roots_at_or_above_golden(const Polynomial& p);

/// chi_M(u) = u^3 - T u^2 + F u - D in the 3x3 case; for other sizes
/// `trace`, `second` and `det` are the corresponding coefficients up to sign.
struct GoldenCertificate {
  std::int64_t trace = 0;
  std::int64_t second = 0;  ///< F: sum of principal 2x2 minors
  std::int64_t det = 0;     ///< D
  std::optional<std::int64_t> third_eigenvalue;
  bool divisible = false;
  bool primitive = false;
  bool dominant = false;
  Polynomial quotient;

  bool golden() const noexcept { return divisible && primitive && dominant; }
};

GoldenCertificate golden_pf_check(const IntMatrix& m);

/// Primitive r x r matrices with entries <= bound and PF eigenvalue Phi.
std::vector<IntMatrix> enumerate_golden(std::size_t r, std::int64_t bound);
std::vector<IntMatrix> enumerate_golden_serial(std::size_t r, std::int64_t bound);

/// Class representative under simultaneous row/column permutation: among the
/// members whose first row is (0,1,0,...,0) the lexicographically smallest,
/// otherwise the lexicographically smallest member.
IntMatrix canonical_representative(const IntMatrix& m);
bool permutation_conjugate(const IntMatrix& a, const IntMatrix& b);
std::vector<IntMatrix> permutation_classes(std::span<const IntMatrix> ms);

IntMatrix remark_matrix(std::size_t r);

/// (1, Phi, ..., Phi) M == Phi (1, Phi, ..., Phi), in exact Z[gamma] arithmetic.
bool left_eigenvector_check(const IntMatrix& m);

}  // namespace fibconj
