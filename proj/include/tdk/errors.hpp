#pragma once

#include <stdexcept>
#include <string>

namespace tdk {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Argument left the admissible Airy sector |arg z| <= pi/3 - margin.
struct sector_error : error {
  using error::error;
};

// A stated precondition (mean-zero data, consistent state, ...) failed.
struct precondition_error : error {
  using error::error;
};

// A smallness/contraction assumption was violated at runtime.
struct smallness_error : error {
  using error::error;
};

// An internal invariant (monotone transform, bounded Jacobian, ...) broke.
struct invariant_error : error {
  using error::error;
};

struct precision_error : error {
  using error::error;
};

struct solver_error : error {
  using error::error;
};

struct io_error : error {
  using error::error;
};

}  // namespace tdk
