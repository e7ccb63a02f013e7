#include "fibconj/matrices.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include <gmpxx.h>

#include "fibconj/error.hpp"
#include "fibconj/kernels.hpp"
#include "fibconj/quad_int.hpp"
#include "fibconj/substitution.hpp"

namespace fibconj {

namespace {

std::int64_t to_int64(const mpz_class& z) {
  if (!z.fits_slong_p()) throw Error(ErrorKind::Internal, "polynomial coefficient overflows 64 bits");
  return z.get_si();
}

const Polynomial kGoldenMinimal{{-1, -1, 1}};

bool is_zero(const Polynomial& p) {
  return std::all_of(p.coeffs.begin(), p.coeffs.end(), [](std::int64_t c) { return c == 0; });
}

// Rational polynomials for the Sturm chain, constant term first, no trailing zeros.
using QPoly = std::vector<mpq_class>;

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly derivative(const QPoly& p) {
  QPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
  trim(d);
  return d;
}

QPoly remainder(QPoly a, const QPoly& b) {
  while (a.size() >= b.size() && !a.empty()) {
    const mpq_class factor = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

// Sign of p(Phi), exact. Phi^k = F_k Phi + F_(k-1), so p(Phi) = A + B Phi
// = (2A + B)/2 + B sqrt(5)/2.
int sign_at_golden(const QPoly& p) {
  mpq_class a = 0, b = 0;
  mpz_class f_prev = 1, f = 0;  // F_(k-1), F_k at k = 0
  for (const auto& c : p) {
    a += c * mpq_class(f_prev);
    b += c * mpq_class(f);
    const mpz_class next = f + f_prev;
    f_prev = f;
    f = next;
  }
  const mpq_class x = 2 * a + b;  // sign of x + b sqrt(5)
  const int sx = sgn(x), sb = sgn(b);
  if (sx >= 0 && sb >= 0) return (sx == 0 && sb == 0) ? 0 : 1;
  if (sx <= 0 && sb <= 0) return -1;
  const mpq_class lhs = x * x, rhs = 5 * b * b;
  if (sx > 0) return lhs > rhs ? 1 : -1;
  return rhs > lhs ? 1 : -1;
}

std::size_t sign_changes(const std::vector<int>& signs) {
  std::size_t changes = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

// Distinct real roots of p in (Phi, +inf), p(Phi) != 0.
std::size_t sturm_above_golden(const QPoly& p) {
  std::vector<QPoly> chain{p, derivative(p)};
  while (!chain.back().empty()) {
    QPoly r = remainder(chain[chain.size() - 2], chain.back());
    for (auto& c : r) c = -c;
    chain.push_back(std::move(r));
  }
  chain.pop_back();
  std::vector<int> at_golden, at_infinity;
  for (const auto& q : chain) {
    at_golden.push_back(sign_at_golden(q));
    at_infinity.push_back(sgn(q.back()));
  }
  return sign_changes(at_golden) - sign_changes(at_infinity);
}

std::vector<std::vector<std::size_t>> all_permutations(std::size_t r) {
  std::vector<std::size_t> perm(r);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<std::size_t>> out;
  do out.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

bool golden_candidate(const IntMatrix& m) {
  std::int64_t min_row = m.row_sum(0);
  for (std::size_t i = 1; i < m.dim(); ++i) min_row = std::min(min_row, m.row_sum(i));
  return min_row == 1 && golden_pf_check(m).golden();
}

void check_golden_range(std::size_t r, std::int64_t bound) {
  if (r != 2 && r != 3) throw Error(ErrorKind::InvalidArgument, "enumeration supports r = 2 or 3");
  if (bound < 1) throw Error(ErrorKind::InvalidArgument, "entry bound must be positive");
}

}  // namespace

std::string Polynomial::to_string(char var) const {
  std::string out;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    const std::int64_t c = coeffs[i];
    if (c == 0) continue;
    const std::int64_t mag = c < 0 ? -c : c;
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    if (mag != 1 || i == 0) out += std::to_string(mag);
    if (i >= 1) out += var;
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

Polynomial char_poly(const IntMatrix& m) {
  const std::size_t n = m.dim();
  // Faddeev-LeVerrier: M_k = A M_(k-1) + c_(n-k+1) I, c_(n-k) = -tr(A M_k) / k.
  std::vector<mpz_class> a(n * n), mk(n * n, 0), prod(n * n);
  for (std::size_t i = 0; i < n * n; ++i) a[i] = static_cast<long>(m.entries()[i]);
  std::vector<mpz_class> c(n + 1, 0);
  c[n] = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        mpz_class s = 0;
        for (std::size_t l = 0; l < n; ++l) s += a[i * n + l] * mk[l * n + j];
        prod[i * n + j] = s;
      }
    for (std::size_t i = 0; i < n; ++i) prod[i * n + i] += c[n - k + 1];
    mk = prod;
    mpz_class tr = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) tr += a[i * n + l] * mk[l * n + i];
    c[n - k] = -tr / static_cast<long>(k);
  }
  Polynomial p;
  for (const auto& x : c) p.coeffs.push_back(to_int64(x));
  return p;
}

std::pair<Polynomial, Polynomial> divide_monic(const Polynomial& p, const Polynomial& divisor) {
  if (divisor.coeffs.empty() || divisor.coeffs.back() != 1)
    throw Error(ErrorKind::InvalidArgument, "divisor must be monic");
  std::vector<std::int64_t> rem = p.coeffs;
  const std::size_t d = divisor.coeffs.size() - 1;
  if (rem.size() <= d) return {Polynomial{{0}}, p};
  std::vector<std::int64_t> quot(rem.size() - d, 0);
  for (std::size_t i = rem.size(); i-- > d;) {
    const std::int64_t factor = rem[i];
    quot[i - d] = factor;
    for (std::size_t j = 0; j <= d; ++j) rem[i - d + j] -= factor * divisor.coeffs[j];
  }
  rem.resize(d);
  while (rem.size() > 1 && rem.back() == 0) rem.pop_back();
  return {Polynomial{quot}, Polynomial{rem}};
}

std::size_t roots_at_or_above_golden(const Polynomial& p) {
  if (is_zero(p)) throw Error(ErrorKind::InvalidArgument, "zero polynomial has every root");
  QPoly q;
  for (auto c : p.coeffs) q.emplace_back(static_cast<long>(c));
  trim(q);
  if (q.size() <= 1) return 0;
  if (sign_at_golden(q) == 0) {
    // Phi is a root, so its minimal polynomial divides p.
    const auto [quot, rem] = divide_monic(p, kGoldenMinimal);
    if (!is_zero(rem)) throw Error(ErrorKind::Internal, "golden root without the minimal polynomial factor");
    std::size_t above = roots_at_or_above_golden(quot);
    // A repeated Phi is counted once.
    QPoly qq;
    for (auto c : quot.coeffs) qq.emplace_back(static_cast<long>(c));
    trim(qq);
    if (qq.size() > 1 && sign_at_golden(qq) == 0) return above;
    return above + 1;
  }
  return sturm_above_golden(q);
}

GoldenCertificate golden_pf_check(const IntMatrix& m) {
  if (!m.is_nonnegative()) throw Error(ErrorKind::InvalidArgument, "matrix has a negative entry");
  if (m.dim() == 0) throw Error(ErrorKind::InvalidArgument, "empty matrix");
  const std::size_t n = m.dim();
  const Polynomial chi = char_poly(m);

  GoldenCertificate cert;
  cert.trace = -chi.coeffs[n - 1];
  cert.second = n >= 2 ? chi.coeffs[n - 2] : 0;
  cert.det = (n % 2 == 0) ? chi.coeffs[0] : -chi.coeffs[0];

  const auto [quot, rem] = divide_monic(chi, kGoldenMinimal);
  cert.divisible = n >= 2 && is_zero(rem);
  cert.quotient = quot;
  if (!cert.divisible) return cert;

  std::vector<Word> rows(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) rows[a].insert(rows[a].end(), static_cast<std::size_t>(m(a, b)), static_cast<Letter>(b));
  cert.primitive = std::none_of(rows.begin(), rows.end(), [](const Word& w) { return w.empty(); }) &&
                   is_primitive(Substitution(std::move(rows)));

  if (n == 3) cert.third_eigenvalue = -quot.coeffs[0];
  // For a primitive matrix the PF root is simple and dominates every other
  // eigenvalue in modulus, so Phi is the PF root iff the cofactor has no
  // real root at or above Phi.
  cert.dominant = quot.coeffs.size() <= 1 || roots_at_or_above_golden(quot) == 0;
  return cert;
}

std::vector<IntMatrix> enumerate_golden(std::size_t r, std::int64_t bound) {
  check_golden_range(r, bound);
  return kernels::enumerate_matrices(r, bound, golden_candidate);
}

std::vector<IntMatrix> enumerate_golden_serial(std::size_t r, std::int64_t bound) {
  check_golden_range(r, bound);
  return kernels::enumerate_matrices_serial(r, bound, golden_candidate);
}

IntMatrix canonical_representative(const IntMatrix& m) {
  const std::size_t r = m.dim();
  std::optional<IntMatrix> best_e2, best;
  for (const auto& perm : all_permutations(r)) {
    IntMatrix p = m.permuted(perm);
    bool first_row_e2 = r >= 2;
    for (std::size_t j = 0; j < r && first_row_e2; ++j) first_row_e2 = p(0, j) == (j == 1 ? 1 : 0);
    if (first_row_e2 && (!best_e2 || p < *best_e2)) best_e2 = p;
    if (!best || p < *best) best = std::move(p);
  }
  return best_e2 ? *best_e2 : *best;
}

bool permutation_conjugate(const IntMatrix& a, const IntMatrix& b) {
  if (a.dim() != b.dim()) return false;
  return canonical_representative(a) == canonical_representative(b);
}

std::vector<IntMatrix> permutation_classes(std::span<const IntMatrix> ms) {
  std::set<IntMatrix> reps;
  for (const auto& m : ms) {
    if (m.dim() != ms.front().dim()) throw Error(ErrorKind::InvalidArgument, "matrices of different dimensions");
    reps.insert(canonical_representative(m));
  }
  return {reps.begin(), reps.end()};
}

IntMatrix remark_matrix(std::size_t r) {
  if (r < 3) throw Error(ErrorKind::InvalidArgument, "remark matrix needs r >= 3");
  IntMatrix m(r);
  for (std::size_t j = 1; j < r; ++j) m(0, j) = 1;
  m(1, 1) = 1;
  for (std::size_t i = 1; i + 1 < r; ++i) m(i, i + 1) = 1;
  m(r - 1, 0) = 1;
  return m;
}

bool left_eigenvector_check(const IntMatrix& m) {
  const std::size_t n = m.dim();
  const QuadInt phi = QuadInt::golden();
  std::vector<QuadInt> v(n, phi);
  if (n > 0) v[0] = QuadInt(1);
  for (std::size_t j = 0; j < n; ++j) {
    QuadInt column(0);
    for (std::size_t i = 0; i < n; ++i) column = column + m(i, j) * v[i];
    if (column != phi * v[j]) return false;
  }
  return true;
}

}  // namespace fibconj
