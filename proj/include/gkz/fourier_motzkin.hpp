#pragma once

#include "gkz/scalar.hpp"

#include <optional>
#include <vector>

namespace gkz {

enum class Relation { GreaterEqual, LessEqual };

/// <coefficients, x> (relation) bound
struct LinearConstraint {
  IntVector coefficients;
  Relation relation = Relation::GreaterEqual;
  Integer bound = 0;
};

/// Exact feasibility of a system of non-strict linear inequalities over Q,
/// decided by Fourier-Motzkin elimination. Returns a witness point or nothing.
///
/// Witness choice is deterministic: variables are fixed first to last, each
/// to 0 when allowed, else to the admissible integer of least magnitude, else
/// to the nearer interval endpoint.
std::optional<RatVector> rational_lp_feasible(std::size_t dimension,
                                              const std::vector<LinearConstraint>& constraints);

}  // namespace gkz
