#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace ewl {

struct CheckResult {
  std::string suite;
  std::string name;
  double residual;
  double bound;
  bool passed;
  bool require_floor;  // true: check passes when residual >= bound
};

using CheckSink = std::function<void(const CheckResult&)>;

struct VerifyOptions {
  std::uint64_t seed = 2026;
  // Deliberately corrupts the isomorphism frame before running, as a
  // negative control: the so4 checks must then fail.
  bool inject_frame_fault = false;
};

const std::vector<std::string>& suite_names();  // reality, so4, quaternion, stability, all

// Runs one named suite (or "all"); reports each check through the sink
// (which may be empty) and returns true iff every check passed.
// Throws std::invalid_argument for an unknown suite name.
bool run_suite(const std::string& suite, const VerifyOptions& options,
               const CheckSink& sink);

}  // namespace ewl
