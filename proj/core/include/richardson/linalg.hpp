#pragma once

#include <vector>

#include "richardson/common.hpp"

namespace richardson {

using IntVec = std::vector<Int>;
using IntMat = std::vector<IntVec>;

/// Rank over the rationals, computed by fraction-free (Bareiss) elimination.
/// Rows may have any length as long as they agree; the matrix is consumed by
/// value and used as scratch.
int exact_rank(IntMat m);

/// Plain exact matrix product.
IntMat mat_mul(const IntMat& a, const IntMat& b);

}  // namespace richardson
