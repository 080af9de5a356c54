#pragma once

#include <string>
#include <utility>
#include <vector>

#include "richardson/diagram.hpp"
#include "richardson/liealg.hpp"

namespace richardson {

/// One root in the support of the constructed element, identified by its
/// canonical arrow pair {(i,j), (-j,-i)}; through-origin arrows (j = -i,
/// symplectic only) are their own mirror and stand alone.
struct SupportRoot {
    std::pair<int, int> primary;  // lexicographically larger of the pair
    bool self_mirrored = false;

    std::vector<std::pair<int, int>> arrows() const {
        if (self_mirrored) return {primary};
        return {primary, {-primary.second, -primary.first}};
    }
    bool operator==(const SupportRoot&) const = default;
};

struct SupportSet {
    std::vector<SupportRoot> roots;  // sorted by primary arrow
    int size() const { return static_cast<int>(roots.size()); }
};

/// Per-piece bookkeeping behind the type and |Gamma| formulas.
struct PieceTypeStats {
    int j = 0;        // piece index, 1-based
    int size = 0;     // |d^j|
    int rho = 0;      // number of nonzero entries
    int sigma = 0;    // number of entries equal to 2
    int delta = 0;
    bool in_I = false;  // rho - delta == sigma + delta; otherwise in J
};

/// Conjugacy type of the orbit: a classical part (B/C/D with rank eta) plus
/// a multiset of A-component ranks. Low-rank letters are kept as-is (D2, D3,
/// B1, C1 label Levi subgroups in their own conjugacy classes); the note
/// field records the shape they coincide with.
struct TypeLabel {
    char letter = 'D';
    int eta = 0;
    std::vector<int> a_parts;  // positive ranks, descending
    int d0_size = 0;
    std::vector<PieceTypeStats> pieces;
    std::string note;

    int rank() const;
    std::string to_string() const;  // e.g. "D0 + A2"
};

/// x = sum of epsilon_{i,j} e_{i,j} over the arrows of the diagram.
/// Every arrow must hit a defined epsilon; otherwise the construction is
/// broken and construction_error is thrown.
LieElement element_from_diagram(const LineDiagram& dg);

/// Arrows grouped into mirror classes.
SupportSet support(const LineDiagram& dg);

TypeLabel richardson_type(const DimensionVector& d);

/// eta + sum over I of (rho^j - delta^j - 1); equals rank(richardson_type).
int gamma_size_formula(const DimensionVector& d);

/// True iff every arrow of assemble(d) connects adjacent blocks, i.e. the
/// constructed element lies in grading degree 1.
bool is_nice(const DimensionVector& d);

/// Conjugation by the orthogonal reflection swapping v_1 and v_{-1}
/// (even N only). An involution preserving the form and the Jordan type;
/// carries representatives between the two SO_N-classes of a parabolic.
LieElement so_remark_conjugate(const LieElement& x);

}  // namespace richardson
