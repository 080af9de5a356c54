#include "richardson/diagram.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace richardson {

const Vertex& LineDiagram::vertex_by_label(int label) const {
    for (const Vertex& v : vertices)
        if (v.label == label) return v;
    throw contract_error("no vertex with label " + std::to_string(label));
}

namespace {

bool has_entry_equal(const std::vector<int>& v, int value) {
    return std::find(v.begin(), v.end(), value) != v.end();
}

std::vector<int> indicator(const std::vector<int>& v) {
    std::vector<int> r(v.size(), 0);
    for (size_t i = 0; i < v.size(); ++i) r[i] = v[i] > 0 ? 1 : 0;
    return r;
}

std::vector<int> capped(const std::vector<int>& v) {
    std::vector<int> r(v.size(), 0);
    for (size_t i = 0; i < v.size(); ++i) r[i] = std::min(v[i], 2);
    return r;
}

// 0 / 1 on odd entries below a / 2 on entries >= a, for the least positive
// even entry a.
std::vector<int> capped_below_even(const std::vector<int>& v) {
    int a = 0;
    for (int e : v)
        if (e > 0 && e % 2 == 0 && (a == 0 || e < a)) a = e;
    if (a == 0) throw construction_error("no positive even entry in case C");
    std::vector<int> r(v.size(), 0);
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        r[i] = v[i] >= a ? 2 : 1;
    }
    return r;
}

std::vector<int> doubled_indicator(const std::vector<int>& v) {
    std::vector<int> r(v.size(), 0);
    for (size_t i = 0; i < v.size(); ++i) r[i] = v[i] >= 2 ? 2 : 0;
    return r;
}

void subtract(std::vector<int>& v, const std::vector<int>& w) {
    for (size_t i = 0; i < v.size(); ++i) {
        v[i] -= w[i];
        if (v[i] < 0) throw construction_error("piece exceeds remainder");
    }
}

}  // namespace

std::vector<DimensionVector> decompose(const DimensionVector& d) {
    const Kind kind = d.kind();
    const size_t centre = d.s();
    std::vector<int> c = d.entries();
    std::vector<int> d0(c.size(), 0);
    bool d0_defined = false;
    std::vector<std::vector<int>> pieces;

    auto exhausted = [&] {
        return std::all_of(c.begin(), c.end(), [](int e) { return e == 0; });
    };

    while (!exhausted()) {
        const int c0 = c[centre];
        const bool has_one = has_entry_equal(c, 1);
        std::vector<int> piece;
        if (kind == Kind::orthogonal) {
            if (c0 == 0) {
                piece = capped(c);  // case D
            } else if (!has_one) {
                piece = doubled_indicator(c);  // case A
            } else if (c0 % 2 != 0) {
                // case B: the odd-centre remainder defines d^0, then the
                // current step is re-entered against the updated remainder
                if (d0_defined)
                    throw construction_error("case B fired twice");
                d0 = indicator(c);
                d0_defined = true;
                subtract(c, d0);
                continue;
            } else {
                piece = capped_below_even(c);  // case C
            }
        } else {
            if (c0 > 0) {
                piece = capped(c);  // case A
            } else if (!has_one) {
                piece = doubled_indicator(c);  // case B
            } else {
                bool has_even = false;
                for (int e : c)
                    if (e > 0 && e % 2 == 0) has_even = true;
                if (has_even) {
                    piece = capped_below_even(c);  // case C
                } else {
                    // case D: all nonzero entries odd
                    if (d0_defined)
                        throw construction_error("case D fired twice");
                    d0 = indicator(c);
                    d0_defined = true;
                    subtract(c, d0);
                    continue;
                }
            }
        }
        subtract(c, piece);
        pieces.push_back(std::move(piece));
    }

    std::vector<DimensionVector> out;
    out.push_back(DimensionVector::from_entries(kind, d0));
    for (auto& p : pieces)
        out.push_back(DimensionVector::from_entries(kind, std::move(p)));
    return out;
}

namespace {

using Point = std::pair<int, int>;

void add_row_arrows(DiagramGeometry& g, int row,
                    const std::set<Point>& exempt = {}) {
    std::vector<int> cols;
    for (const Point& p : g.points)
        if (p.second == row) cols.push_back(p.first);
    std::sort(cols.begin(), cols.end());
    for (size_t k = 1; k < cols.size(); ++k) {
        Point src{cols[k], row}, dst{cols[k - 1], row};
        if (exempt.count(src)) continue;
        g.arrows.push_back({src, dst});
    }
}

int count_ones(const DimensionVector& d) {
    int ones = 0;
    for (int e : d.entries())
        if (e == 1) ++ones;
    return ones;
}

int min_positive_nonzero(const DimensionVector& d) {
    for (int i = 1; i <= d.s(); ++i)
        if (d.entry(i) != 0) return i;
    throw construction_error("no positive nonzero entry");
}

int min_positive_two(const DimensionVector& d) {
    for (int i = 1; i <= d.s(); ++i)
        if (d.entry(i) == 2) return i;
    throw construction_error("no positive entry equal to 2");
}

void check_small(const DimensionVector& d) {
    for (int e : d.entries())
        if (e > 2) throw contract_error("small diagram needs entries <= 2");
}

// Chain of vertices on the axis row, arrows to the left neighbour.
DiagramGeometry chain_on_axis(const DimensionVector& d) {
    DiagramGeometry g;
    for (int i = -d.s(); i <= d.s(); ++i)
        if (d.entry(i) != 0) g.points.push_back({i, 0});
    add_row_arrows(g, 0);
    return g;
}

// Vertices at (i,1),(-i,-1) for i >= from with d_i != 0 and the mirrored
// (i,-1),(-i,1) where d_i = 2.
void two_row_points(DiagramGeometry& g, const DimensionVector& d, int from) {
    for (int i = from; i <= d.s(); ++i) {
        if (d.entry(i) != 0) {
            g.points.push_back({i, 1});
            g.points.push_back({-i, -1});
        }
        if (i > 0 && d.entry(i) == 2) {
            g.points.push_back({i, -1});
            g.points.push_back({-i, 1});
        }
    }
}

}  // namespace

DiagramGeometry small_diagram_orth(const DimensionVector& d) {
    if (d.kind() != Kind::orthogonal)
        throw contract_error("small_diagram_orth: wrong kind");
    check_small(d);
    const int d0 = d.entry(0);
    if (d0 == 1) {
        if (has_entry_equal(d.entries(), 2))
            throw contract_error("d_0 = 1 requires all nonzero entries 1");
        return chain_on_axis(d);  // case 1
    }
    if (d0 == 2) {
        // case 2
        DiagramGeometry g;
        two_row_points(g, d, 0);
        add_row_arrows(g, 1);
        add_row_arrows(g, -1);
        if (count_ones(d) > 0) {
            int l = min_positive_nonzero(d);
            g.arrows.push_back({{l, 1}, {0, -1}});
            g.arrows.push_back({{0, 1}, {-l, -1}});
        }
        return g;
    }
    // case 3: d_0 = 0
    DiagramGeometry g;
    two_row_points(g, d, 1);
    add_row_arrows(g, 1);
    add_row_arrows(g, -1);
    if (count_ones(d) >= 4) {
        int l = min_positive_nonzero(d);
        int m = 0;
        for (int i = l + 1; i <= d.s(); ++i)
            if (d.entry(i) != 0) {
                m = i;
                break;
            }
        if (m == 0) throw construction_error("case 3 diagonals need l < m");
        g.arrows.push_back({{l, 1}, {-m, -1}});
        g.arrows.push_back({{m, 1}, {-l, -1}});
    }
    return g;
}

DiagramGeometry small_diagram_symp(const DimensionVector& d) {
    if (d.kind() != Kind::symplectic)
        throw contract_error("small_diagram_symp: wrong kind");
    check_small(d);
    const int d0 = d.entry(0);
    if (d0 != 0 && d0 != 2)
        throw contract_error("symplectic small diagram needs d_0 in {0,2}");
    if (d0 == 2) {
        // case 2
        DiagramGeometry g;
        two_row_points(g, d, 0);
        add_row_arrows(g, 1);
        add_row_arrows(g, -1);
        if (count_ones(d) >= 4) {
            int l = min_positive_nonzero(d);
            g.arrows.push_back({{l, 1}, {-l, -1}});
        }
        return g;
    }
    const bool any_two = has_entry_equal(d.entries(), 2);
    const bool any_one = has_entry_equal(d.entries(), 1);
    if (!any_two) return chain_on_axis(d);  // case 1 (also the zero vector)
    if (!any_one) {
        // case 3: all nonzero entries are 2
        DiagramGeometry g;
        for (int i = -d.s(); i <= d.s(); ++i)
            if (d.entry(i) == 2) {
                g.points.push_back({i, 1});
                g.points.push_back({i, -1});
            }
        add_row_arrows(g, 1);
        add_row_arrows(g, -1);
        return g;
    }
    // case 4: both 1s and 2s
    DiagramGeometry g;
    two_row_points(g, d, 1);
    const int l = min_positive_nonzero(d);
    const int m = min_positive_two(d);
    add_row_arrows(g, 1, {{l, 1}});
    add_row_arrows(g, -1, {{m, -1}});
    g.arrows.push_back({{l, 1}, {-l, -1}});
    g.arrows.push_back({{m, -1}, {-m, 1}});
    return g;
}

LineDiagram assemble(const DimensionVector& d) {
    const Kind kind = d.kind();
    std::vector<DimensionVector> pieces = decompose(d);

    auto small = [&](const DimensionVector& p) {
        return kind == Kind::orthogonal ? small_diagram_orth(p)
                                        : small_diagram_symp(p);
    };

    std::vector<Point> points;
    std::vector<std::pair<Point, Point>> arrows;
    auto insert_stretched = [&](const DiagramGeometry& g, int j) {
        auto move = [j](Point p) { return Point{p.first, p.second * j}; };
        for (const Point& p : g.points) points.push_back(move(p));
        for (const auto& [s, t] : g.arrows)
            arrows.push_back({move(s), move(t)});
    };

    if (pieces[0].total() != 0) insert_stretched(small(pieces[0]), 1);
    // orthogonally, d^0 is nonzero exactly when d_0 is odd
    if (kind == Kind::orthogonal &&
        (pieces[0].total() != 0) != (d.entry(0) % 2 != 0))
        throw construction_error("orthogonal d^0 / d_0 parity mismatch");
    for (size_t j = 1; j < pieces.size(); ++j)
        insert_stretched(small(pieces[j]), static_cast<int>(j));

    std::sort(points.begin(), points.end());
    if (std::adjacent_find(points.begin(), points.end()) != points.end())
        throw construction_error("assemble: duplicate vertex position");

    const int N = d.total();
    std::vector<int> labels = basis_labels(N);
    if (labels.size() != points.size())
        throw construction_error("assemble: vertex count differs from N");

    std::map<Point, int> label_at;
    LineDiagram dg;
    dg.kind = kind;
    dg.N = N;
    for (size_t k = 0; k < points.size(); ++k) {
        label_at[points[k]] = labels[k];
        dg.vertices.push_back({points[k].first, points[k].second, labels[k]});
    }
    for (const auto& [s, t] : arrows)
        dg.arrows.push_back({label_at.at(s), label_at.at(t)});
    std::sort(dg.arrows.begin(), dg.arrows.end());
    return dg;
}

void validate(const LineDiagram& dg) {
    auto fail = [](const std::string& msg) {
        throw construction_error("line diagram invariant: " + msg);
    };
    std::vector<int> expected = basis_labels(dg.N);
    std::vector<int> got;
    std::map<Point, int> label_at;
    std::map<int, Point> pos_of;
    for (const Vertex& v : dg.vertices) {
        got.push_back(v.label);
        if (!label_at.emplace(Point{v.col, v.row}, v.label).second)
            fail("duplicate position");
        pos_of[v.label] = {v.col, v.row};
    }
    std::sort(got.begin(), got.end());
    if (got != expected) fail("labels are not exactly -n..n");

    for (const Vertex& v : dg.vertices) {
        auto it = label_at.find({-v.col, -v.row});
        if (it == label_at.end() || it->second != -v.label)
            fail("central symmetry of labelled vertices");
    }

    // lexicographic labelling: sorting positions must sort labels
    std::vector<std::pair<Point, int>> byp(label_at.begin(), label_at.end());
    for (size_t k = 1; k < byp.size(); ++k)
        if (byp[k - 1].second >= byp[k].second)
            fail("labels do not increase in (col,row) order");

    std::set<std::pair<int, int>> arrow_set(dg.arrows.begin(),
                                            dg.arrows.end());
    if (arrow_set.size() != dg.arrows.size()) fail("duplicate arrow");
    std::map<int, int> outdeg;
    for (const auto& [s, t] : dg.arrows) {
        if (!pos_of.count(s) || !pos_of.count(t)) fail("arrow endpoint");
        if (pos_of[t].first >= pos_of[s].first)
            fail("arrow does not point strictly left");
        if (!arrow_set.count({-t, -s})) fail("arrow set central symmetry");
        if (++outdeg[s] > 2) fail("more than two outgoing arrows");
    }
}

namespace {

std::string label_str(int label) { return std::to_string(label); }

}  // namespace

std::string render_text(const LineDiagram& dg) {
    std::ostringstream os;
    if (!dg.vertices.empty()) {
        int cmin = dg.vertices[0].col, cmax = cmin;
        int rmin = dg.vertices[0].row, rmax = rmin;
        size_t width = 1;
        std::map<Point, std::string> cell;
        for (const Vertex& v : dg.vertices) {
            cmin = std::min(cmin, v.col);
            cmax = std::max(cmax, v.col);
            rmin = std::min(rmin, v.row);
            rmax = std::max(rmax, v.row);
            std::string s = label_str(v.label);
            width = std::max(width, s.size());
            cell[{v.col, v.row}] = std::move(s);
        }
        for (int r = rmax; r >= rmin; --r) {
            std::string line;
            for (int c = cmin; c <= cmax; ++c) {
                std::string s;
                if (auto it = cell.find({c, r}); it != cell.end())
                    s = it->second;
                line += std::string(width - s.size() + (c > cmin ? 2 : 0), ' ');
                line += s;
            }
            while (!line.empty() && line.back() == ' ') line.pop_back();
            os << line << '\n';
        }
    }
    os << "arrows (" << dg.arrows.size() << "):\n";
    for (const auto& [s, t] : dg.arrows)
        os << "  " << s << " -> " << t << '\n';
    return os.str();
}

std::string render_dot(const LineDiagram& dg) {
    std::ostringstream os;
    os << "digraph line_diagram {\n";
    os << "  node [shape=plaintext];\n";
    std::map<int, std::vector<int>, std::greater<>> rows;
    for (const Vertex& v : dg.vertices) rows[v.row].push_back(v.label);
    for (auto& [row, labels] : rows) {
        os << "  { rank=same;";
        for (int l : labels) os << " \"" << label_str(l) << "\";";
        os << " }\n";
    }
    for (const auto& [s, t] : dg.arrows)
        os << "  \"" << label_str(s) << "\" -> \"" << label_str(t) << "\";\n";
    os << "}\n";
    return os.str();
}

}  // namespace richardson
