#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "richardson/common.hpp"
#include "richardson/dimvec.hpp"
#include "richardson/linalg.hpp"

namespace richardson {

/// Element of so_N or sp_N as a sparse exact-integer linear map on the
/// standard basis: an entry (i,j) -> c means the map sends v_i to c*v_j
/// (plus the other entries with source i). Labels run over -n..n, with 0
/// present exactly when N is odd.
class LieElement {
public:
    LieElement(Kind kind, int N) : kind_(kind), N_(N) {}

    Kind kind() const { return kind_; }
    int N() const { return N_; }
    const std::map<std::pair<int, int>, Int>& entries() const {
        return entries_;
    }
    bool is_zero() const { return entries_.empty(); }

    /// Adds c * e_{i,j}; entries that cancel to zero are dropped.
    void add_entry(int i, int j, const Int& c);
    Int coeff(int i, int j) const;

    LieElement operator+(const LieElement& o) const;
    LieElement operator-(const LieElement& o) const;
    LieElement operator*(const Int& c) const;
    bool operator==(const LieElement& o) const = default;

    std::string to_string() const;

private:
    Kind kind_;
    int N_;
    std::map<std::pair<int, int>, Int> entries_;
};

/// Value of the invariant bilinear form on basis vectors (v_a, v_b).
/// Symmetric for the orthogonal kind, skew for the symplectic kind.
int form_value(Kind kind, int a, int b);

/// The standard Chevalley-type basis, Cartan diagonals included, in a fixed
/// order. Size is dim so_N resp. dim sp_N.
std::vector<LieElement> chevalley_basis(Kind kind, int N);

/// Sign with which the matrix unit e_{i,j} occurs in the basis above, or
/// nullopt when it occurs in no basis element.
std::optional<int> epsilon(Kind kind, int N, int i, int j);

/// Membership in the Lie algebra: (x v, w) + (v, x w) = 0 on all basis pairs.
bool in_g(const LieElement& x);

/// Commutator of x and y as linear maps.
LieElement bracket(const LieElement& x, const LieElement& y);

/// Block-grading degree of e_{i,j} relative to a parabolic: block_of(i) -
/// block_of(j). Returns the common degree of all entries, 0 for the zero
/// element, or nullopt when entries have different degrees.
std::optional<int> block_degree(const LieElement& x, const ParabolicData& pd);

/// Membership in the nilradical: every entry moves to a strictly smaller
/// block.
bool in_u(const LieElement& x, const ParabolicData& pd);

/// Weight of e_{i,j} under the diagonal torus, as an integer vector in the
/// epsilon-coordinates (length n).
std::vector<int> unit_weight(int N, int i, int j);

/// Dense N x N integer matrix, rows indexed by source label in label order.
IntMat to_dense(const LieElement& x);

/// Flattened N^2 coordinate vector, for rank computations over spans.
IntVec flatten(const LieElement& x);

/// Rank of x as a linear map, over the rationals.
int map_rank(const LieElement& x);

}  // namespace richardson
