#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace fibconj {

/// Exact element p + q*gamma of Z[gamma], gamma = (sqrt(5) - 1) / 2.
/// gamma^2 = 1 - gamma, and the golden mean is Phi = 1 + gamma.
class QuadInt {
 public:
  constexpr QuadInt() = default;
  constexpr QuadInt(std::int64_t p, std::int64_t q = 0) : p_(p), q_(q) {}

  static constexpr QuadInt gamma() { return {0, 1}; }
  static constexpr QuadInt golden() { return {1, 1}; }

  constexpr std::int64_t p() const noexcept { return p_; }
  constexpr std::int64_t q() const noexcept { return q_; }

  /// -1, 0 or +1, decided with integer arithmetic only.
  int sign() const;
  std::int64_t floor() const;
  /// x - floor(x), in [0, 1).
  QuadInt frac() const;
  long double approx() const;

  friend constexpr QuadInt operator+(QuadInt a, QuadInt b) { return {a.p_ + b.p_, a.q_ + b.q_}; }
  friend constexpr QuadInt operator-(QuadInt a, QuadInt b) { return {a.p_ - b.p_, a.q_ - b.q_}; }
  friend constexpr QuadInt operator-(QuadInt a) { return {-a.p_, -a.q_}; }
  friend constexpr QuadInt operator*(QuadInt a, QuadInt b) {
    return {a.p_ * b.p_ + a.q_ * b.q_, a.p_ * b.q_ + a.q_ * b.p_ - a.q_ * b.q_};
  }
  friend constexpr QuadInt operator*(std::int64_t n, QuadInt a) { return {n * a.p_, n * a.q_}; }

  friend constexpr bool operator==(QuadInt, QuadInt) = default;
  friend std::strong_ordering operator<=>(QuadInt a, QuadInt b) {
    const int s = (a - b).sign();
    return s < 0 ? std::strong_ordering::less
                 : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  std::string to_string() const;

 private:
  std::int64_t p_ = 0;
  std::int64_t q_ = 0;
};

}  // namespace fibconj
