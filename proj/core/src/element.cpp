#include "richardson/element.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace richardson {

int TypeLabel::rank() const {
    return eta + std::accumulate(a_parts.begin(), a_parts.end(), 0);
}

std::string TypeLabel::to_string() const {
    std::ostringstream os;
    os << letter << eta;
    for (int a : a_parts) os << " + A" << a;
    return os.str();
}

LieElement element_from_diagram(const LineDiagram& dg) {
    LieElement x(dg.kind, dg.N);
    for (const auto& [i, j] : dg.arrows) {
        auto eps = epsilon(dg.kind, dg.N, i, j);
        if (!eps)
            throw construction_error(
                "arrow (" + std::to_string(i) + " -> " + std::to_string(j) +
                ") has no sign in the Chevalley basis");
        x.add_entry(i, j, *eps);
    }
    return x;
}

SupportSet support(const LineDiagram& dg) {
    std::set<std::pair<int, int>> seen;
    SupportSet s;
    for (const auto& a : dg.arrows) {
        if (seen.count(a)) continue;
        std::pair<int, int> mirror{-a.second, -a.first};
        seen.insert(a);
        seen.insert(mirror);
        s.roots.push_back({std::max(a, mirror), a == mirror});
    }
    std::sort(s.roots.begin(), s.roots.end(),
              [](const SupportRoot& a, const SupportRoot& b) {
                  return a.primary < b.primary;
              });
    return s;
}

namespace {

std::vector<PieceTypeStats> piece_stats(
    Kind kind, const std::vector<DimensionVector>& pieces) {
    std::vector<PieceTypeStats> stats;
    for (size_t j = 1; j < pieces.size(); ++j) {
        const DimensionVector& p = pieces[j];
        PieceTypeStats st;
        st.j = static_cast<int>(j);
        st.size = p.total();
        for (int e : p.entries())
            if (e == 2) ++st.sigma;
        st.rho = st.size - st.sigma;
        bool all_two = st.rho == st.sigma;
        if (kind == Kind::orthogonal)
            st.delta = (p.entry(0) == 2 || all_two) ? 0 : 1;
        else
            st.delta = (p.entry(0) == 0 || all_two) ? 0 : 1;
        st.in_I = st.rho - st.delta == st.sigma + st.delta;
        if (!st.in_I && !(st.rho - st.delta > st.sigma + st.delta))
            throw construction_error("piece neither in I_d nor J_d");
        stats.push_back(st);
    }
    return stats;
}

}  // namespace

TypeLabel richardson_type(const DimensionVector& d) {
    std::vector<DimensionVector> pieces = decompose(d);
    TypeLabel t;
    t.d0_size = pieces[0].total();
    t.pieces = piece_stats(d.kind(), pieces);

    int j_sum = 0;
    for (const PieceTypeStats& st : t.pieces) {
        if (st.in_I) {
            int a = st.rho - st.delta - 1;
            if (a > 0) t.a_parts.push_back(a);
        } else {
            j_sum += st.rho + st.sigma;
        }
    }
    std::sort(t.a_parts.begin(), t.a_parts.end(), std::greater<>());

    int twice_eta;
    if (d.kind() == Kind::symplectic) {
        t.letter = 'C';
        twice_eta = t.d0_size + j_sum;
    } else if (d.total() % 2 == 0) {
        t.letter = 'D';
        twice_eta = j_sum;
    } else {
        t.letter = 'B';
        twice_eta = t.d0_size - 1 + j_sum;
    }
    if (twice_eta % 2 != 0)
        throw construction_error("eta is not an integer");
    t.eta = twice_eta / 2;

    if (t.letter == 'D' && t.eta == 2)
        t.note = "D2 coincides with the A1+A1 shape but labels a distinct "
                 "conjugacy class";
    else if (t.letter == 'D' && t.eta == 3)
        t.note = "D3 coincides with the A3 shape but labels a distinct "
                 "conjugacy class";
    else if (t.letter == 'B' && t.eta == 1)
        t.note = "B1 is A1 spanned by a short root";
    else if (t.letter == 'C' && t.eta == 1)
        t.note = "C1 is A1 spanned by a long root";
    return t;
}

int gamma_size_formula(const DimensionVector& d) {
    return richardson_type(d).rank();
}

bool is_nice(const DimensionVector& d) {
    LineDiagram dg = assemble(d);
    ParabolicData pd = parabolic_data(d);
    for (const auto& [i, j] : dg.arrows)
        if (pd.block_of(i) - pd.block_of(j) != 1) return false;
    return true;
}

LieElement so_remark_conjugate(const LieElement& x) {
    if (x.kind() != Kind::orthogonal || x.N() % 2 != 0)
        throw contract_error(
            "so_remark_conjugate is defined for even orthogonal N");
    auto swap1 = [](int a) { return a == 1 ? -1 : a == -1 ? 1 : a; };
    LieElement y(x.kind(), x.N());
    for (const auto& [ij, c] : x.entries())
        y.add_entry(swap1(ij.first), swap1(ij.second), c);
    return y;
}

}  // namespace richardson
