#pragma once

#include <string>
#include <utility>
#include <vector>

#include "richardson/common.hpp"
#include "richardson/dimvec.hpp"

namespace richardson {

struct Vertex {
    int col = 0;
    int row = 0;
    int label = 0;
};

/// Planar line diagram D(d): labelled vertices on the integer grid plus
/// left-pointing arrows. Centrally symmetric; labels increase
/// lexicographically by (col, row), which realizes "left to right and bottom
/// to top".
struct LineDiagram {
    Kind kind = Kind::orthogonal;
    int N = 0;
    std::vector<Vertex> vertices;                 // sorted by label
    std::vector<std::pair<int, int>> arrows;      // (src label, dst label)

    const Vertex& vertex_by_label(int label) const;
};

/// Decomposition d = d^0 + d^1 + ... + d^m into small-block pieces.
/// Element 0 is always d^0 (possibly the zero vector); every later piece has
/// entries at most 2. Pieces keep the length and kind of d.
std::vector<DimensionVector> decompose(const DimensionVector& d);

/// Unlabelled small-block geometry, exposed for piece-level tests.
struct DiagramGeometry {
    std::vector<std::pair<int, int>> points;                  // (col, row)
    std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> arrows;
};

/// Small-block diagram for the orthogonal kind. Requires entries <= 2,
/// d_0 in {0,1,2}, and all nonzero entries equal to 1 when d_0 = 1.
DiagramGeometry small_diagram_orth(const DimensionVector& d);

/// Small-block diagram for the symplectic kind. Requires entries <= 2 and
/// d_0 in {0,2}.
DiagramGeometry small_diagram_symp(const DimensionVector& d);

/// Full construction: decompose, stack piece j at rows +-j (d^0 at row 0),
/// then assign labels in lexicographic (col, row) order.
LineDiagram assemble(const DimensionVector& d);

/// Checks every structural invariant; throws construction_error on failure.
void validate(const LineDiagram& dg);

/// Deterministic fixed-width grid plus a sorted arrow list.
std::string render_text(const LineDiagram& dg);

/// Graphviz digraph, one rank per diagram row.
std::string render_dot(const LineDiagram& dg);

}  // namespace richardson
