#pragma once

#include <stdexcept>

namespace tsg {

// Bad query arguments: unknown vertex labels, overlapping sets, invalid kinds.
struct query_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input: .mg graph files, model JSON, series CSV.
struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Model-level failures: non-stationary coefficients, singular covariance,
// infeasible construction, explosive simulation.
struct model_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Estimation failures: rank-deficient designs, insufficient data.
struct estimation_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace tsg
