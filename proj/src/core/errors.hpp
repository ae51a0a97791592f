#pragma once

#include <stdexcept>
#include <string>

namespace ewl {

// Contract violations and numerical failures. The C boundary maps each type
// to a distinct status code, so these must stay distinguishable.

struct NormError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RangeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RealityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DegeneratePointError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace ewl
