#pragma once

// Exact rational linear programming (dense two-phase simplex, Bland's rule).

#include "qmirror/scalar.hpp"

namespace qmirror {

struct LpResult {
  enum class Status { Optimal, Infeasible, Unbounded };
  Status status = Status::Infeasible;
  Rational value;
  RatVector x;
};

/// maximize c.x subject to A x = b, x >= 0.
LpResult maximize(const RatMatrix& a, const RatVector& b, const RatVector& c);

}  // namespace qmirror
