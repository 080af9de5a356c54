#pragma once

#include <string>
#include <vector>

#include "richardson/common.hpp"
#include "richardson/partition.hpp"

namespace richardson {

/// Symmetric vector (d_{-s},...,d_0,...,d_s) of non-negative block sizes.
/// Encodes the parabolic subgroup P(d) stabilizing the isotropic flag whose
/// jumps are the d_i. Entries may be zero (such vectors appear in the
/// inductive construction); "proper" vectors are the canonical ones.
class DimensionVector {
public:
    /// Full entry list, length 2s+1, centre at index s.
    static DimensionVector from_entries(Kind kind, std::vector<int> entries);
    /// Builds (d_s,...,d_1, N-2*sum, d_1,...,d_s) from the positive half.
    static DimensionVector from_half(Kind kind, const std::vector<int>& half,
                                     int N);

    Kind kind() const { return kind_; }
    int s() const { return (static_cast<int>(entries_.size()) - 1) / 2; }
    /// Total N = |d|.
    int total() const;
    /// Entry d_i for -s <= i <= s.
    int entry(int i) const;
    const std::vector<int>& entries() const { return entries_; }

    bool operator==(const DimensionVector&) const = default;
    std::string to_string() const;

private:
    DimensionVector(Kind kind, std::vector<int> entries)
        : kind_(kind), entries_(std::move(entries)) {}
    Kind kind_;
    std::vector<int> entries_;
};

/// Orthogonal: d_i != 0 off centre, and d_1 != 1 whenever d_0 = 0.
/// Symplectic: d_i != 0 off centre.
bool is_proper(const DimensionVector& d);

/// Drops off-centre zeros; orthogonally rewrites a central (1,0,1) to (2).
/// The result is proper and defines the same parabolic subgroup.
DimensionVector normalize(const DimensionVector& d);

/// Dual of the nonzero entries sorted non-increasing; the Richardson
/// partition of the corresponding GL_N parabolic.
Partition dual_sorted_partition(const DimensionVector& d);

/// Standard basis labels -n..n, omitting 0 when N is even.
std::vector<int> basis_labels(int N);

/// Per-parabolic combinatorial data: the block grading of the basis labels
/// plus the dimensions of the nilradical and the Levi (torus included).
class ParabolicData {
public:
    const DimensionVector& dimvec() const { return d_; }
    int N() const { return N_; }
    /// Block index in -s..s of the given basis label.
    int block_of(int label) const;
    /// Start offsets of each block within the ordered label list; entry k is
    /// the position where block k-s begins, with a final sentinel N.
    const std::vector<int>& cum_dims() const { return cum_; }
    int dim_u() const { return dim_u_; }
    int dim_levi() const { return dim_levi_; }

private:
    friend ParabolicData parabolic_data(const DimensionVector& d);
    DimensionVector d_ = DimensionVector::from_entries(Kind::orthogonal, {0});
    int N_ = 0;
    std::vector<int> labels_;
    std::vector<int> block_by_pos_;
    std::vector<int> cum_;
    int dim_u_ = 0;
    int dim_levi_ = 0;
};

ParabolicData parabolic_data(const DimensionVector& d);

/// dim so_N or sp_N.
int lie_algebra_dim(Kind kind, int N);

/// All proper dimension vectors of the given kind and total, in a stable
/// order (s ascending, halves lexicographic).
std::vector<DimensionVector> enumerate_proper_dimvecs(Kind kind, int N);

}  // namespace richardson
