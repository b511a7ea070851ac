#ifndef ROOTSTRATA_LINALG_HPP
#define ROOTSTRATA_LINALG_HPP

#include <optional>
#include <vector>

#include "rootstrata/types.hpp"

namespace rootstrata {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Exact inverse by Gauss-Jordan elimination. Throws if singular.
RationalMatrix invert(RationalMatrix m);

/// Solve m*x = rhs for square nonsingular m.
RationalVec solve(RationalMatrix m, RationalVec rhs);

/// Rank of an arbitrary rational matrix.
int matrix_rank(RationalMatrix m);

/// Coordinates of v in the column span of basis (n x k, independent columns),
/// or nullopt if v is outside the span.
std::optional<RationalVec> coordinates_in_basis(const RationalMatrix& basis, const RationalVec& v);

RationalMatrix identity_matrix(int n);
RationalMatrix matmul(const RationalMatrix& a, const RationalMatrix& b);

}  // namespace rootstrata

#endif
