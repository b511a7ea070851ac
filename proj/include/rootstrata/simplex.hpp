#ifndef ROOTSTRATA_SIMPLEX_HPP
#define ROOTSTRATA_SIMPLEX_HPP

#include <vector>

#include "rootstrata/linalg.hpp"
#include "rootstrata/types.hpp"

namespace rootstrata {

enum class LPStatus { Optimal, Infeasible, Unbounded };

struct LPResult {
  LPStatus status;
  Rational value;
  RationalVec x;
};

/// min c.x  subject to  A x = b, x >= 0.
/// Exact two-phase primal simplex with Bland's rule; redundant rows are
/// dropped in phase one, so rank-deficient systems are fine.
LPResult solve_lp(RationalMatrix A, RationalVec b, RationalVec c);

/// Exact feasibility of x = sum lambda_i p_i with lambda >= 0, sum lambda = 1.
bool in_convex_hull(const std::vector<RationalVec>& points, const RationalVec& x);

/// min { r : x in r * conv(points) } for 0 in the interior of the hull,
/// via min sum(mu) subject to P mu = x, mu >= 0.
Rational min_dilation_lp(const std::vector<RationalVec>& points, const RationalVec& x);

}  // namespace rootstrata

#endif
