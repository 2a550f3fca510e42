#pragma once

#include <optional>
#include <vector>

#include "asdc/rational.hpp"

namespace asdc {

using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;  // row major

// In-place reduced row echelon form; returns the pivot column of each
// surviving row.  Exact arithmetic, leftmost-pivot order.
std::vector<size_t> rref(RatMat& m);

size_t rank(RatMat m);

// Basis of the right nullspace of m (vectors of length = column count),
// in the canonical RREF parameterization (one vector per free column, free
// coordinate set to 1), ordered by free column index.
std::vector<RatVec> nullspace(const RatMat& m);

// One solution of A x = b, if any.
std::optional<RatVec> solve(const RatMat& a, const RatVec& b);

}  // namespace asdc
