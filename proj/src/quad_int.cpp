#include "fibconj/quad_int.hpp"

#include <cmath>

namespace fibconj {

int QuadInt::sign() const {
  // p + q*gamma = ((2p - q) + q*sqrt(5)) / 2
  const __int128 a = 2 * static_cast<__int128>(p_) - q_;
  const __int128 b = q_;
  if (a >= 0 && b >= 0) return (a == 0 && b == 0) ? 0 : 1;
  if (a <= 0 && b <= 0) return -1;
  const __int128 a2 = a * a;
  const __int128 b2 = 5 * b * b;
  if (a > 0) return a2 > b2 ? 1 : -1;  // a2 == b2 is impossible for b != 0
  return b2 > a2 ? 1 : -1;
}

long double QuadInt::approx() const {
  constexpr long double kGamma = 0.618033988749894848204586834365638118L;
  return static_cast<long double>(p_) + static_cast<long double>(q_) * kGamma;
}

std::int64_t QuadInt::floor() const {
  auto m = static_cast<std::int64_t>(std::floor(approx()));
  while ((*this - QuadInt(m)).sign() < 0) --m;
  while ((*this - QuadInt(m + 1)).sign() >= 0) ++m;
  return m;
}

QuadInt QuadInt::frac() const { return *this - QuadInt(floor()); }

std::string QuadInt::to_string() const {
  return std::to_string(p_) + (q_ < 0 ? " - " : " + ") + std::to_string(q_ < 0 ? -q_ : q_) + "*gamma";
}

}  // namespace fibconj
