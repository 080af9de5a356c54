#pragma once

#include <optional>
#include <vector>

#include "richardson/element.hpp"

namespace richardson {

/// Jordan partition of a nilpotent map, from the ranks of its powers:
/// dual part k is rank(x^{k-1}) - rank(x^k). Throws on non-nilpotent input.
Partition jordan_partition(const LieElement& x);

/// Same, but returns nullopt instead of throwing when x is not nilpotent.
std::optional<Partition> try_jordan_partition(const LieElement& x);

/// The partition the construction must land on: the valid collapse of the
/// dual of the sorted entries of d.
Partition expected_partition(const DimensionVector& d);

/// Tangent-space density criterion: the P-orbit of x is dense in the
/// nilradical iff dim [p, x] = dim u, with the rank taken exactly.
/// Requires x in u.
bool is_dense_in_u(const LieElement& x, const ParabolicData& pd);

/// dim of the centralizer of x in g, via the kernel of ad x.
int centralizer_dim(const LieElement& x);

/// Everything the verifier knows about one parabolic.
struct RichardsonReport {
    DimensionVector d = DimensionVector::from_entries(Kind::orthogonal, {3});
    std::vector<DimensionVector> pieces;
    LineDiagram diagram;
    LieElement x{Kind::orthogonal, 3};

    bool x_in_g = false;
    bool x_in_u = false;
    bool nilpotent = false;
    Partition jordan;
    Partition expected;
    bool partition_match = false;

    bool dense = false;
    int dim_u = 0;
    int dim_levi = 0;
    int centralizer = 0;
    bool centralizer_match = false;

    SupportSet gamma;
    int gamma_size = 0;
    int gamma_formula = 0;
    bool gamma_match = false;
    bool gamma_independent = false;

    TypeLabel type;
    int type_rank = 0;
    bool type_rank_match = false;

    bool nice = false;

    bool ok() const;
};

/// Runs the full construction and every verification flag for d as given
/// (no normalization happens here).
RichardsonReport full_report(const DimensionVector& d);

}  // namespace richardson
