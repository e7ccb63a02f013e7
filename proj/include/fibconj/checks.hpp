#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace fibconj {

struct CheckResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

/// Number of random cases per property in criterion 11.
inline constexpr std::size_t kPropertyCases = 1000;
inline constexpr std::uint64_t kPropertySeed = 0x5eed'f1b0'0ac0'11eeULL;
/// Wall-clock limits, in seconds.
inline constexpr double kEtaTimeLimit = 30.0;
inline constexpr double kFourthPowerTimeLimit = 60.0;

/// Criteria 1..11 in order. An exception inside a criterion counts as a
/// failure carrying the message. With fail_fast the run stops after the
/// first failure.
std::vector<CheckResult> run_acceptance(bool fail_fast = false);

/// Runs a single criterion (1..11).
CheckResult run_criterion(int id);

}  // namespace fibconj
