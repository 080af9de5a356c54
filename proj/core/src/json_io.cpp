#include "richardson/json_io.hpp"

namespace richardson {

json to_json(const Partition& p) { return json(p.parts()); }

json to_json(const DimensionVector& d) { return json(d.entries()); }

json to_json(const LieElement& x) {
    json entries = json::array();
    for (const auto& [ij, c] : x.entries())
        entries.push_back({ij.first, ij.second, c.convert_to<long long>()});
    return entries;
}

json to_json(const LineDiagram& dg) {
    json vertices = json::array();
    for (const Vertex& v : dg.vertices)
        vertices.push_back({{"col", v.col}, {"row", v.row}, {"label", v.label}});
    json arrows = json::array();
    for (const auto& [s, t] : dg.arrows) arrows.push_back({s, t});
    return {{"schema", 1},
            {"kind", kind_name(dg.kind)},
            {"N", dg.N},
            {"vertices", vertices},
            {"arrows", arrows}};
}

json to_json(const SupportSet& s) {
    json roots = json::array();
    for (const SupportRoot& r : s.roots) {
        json arrows = json::array();
        for (const auto& [i, j] : r.arrows()) arrows.push_back({i, j});
        roots.push_back(arrows);
    }
    return roots;
}

json to_json(const TypeLabel& t) {
    json j = {{"letter", std::string(1, t.letter)},
              {"eta", t.eta},
              {"a_parts", t.a_parts},
              {"rank", t.rank()}};
    if (!t.note.empty()) j["note"] = t.note;
    json pieces = json::array();
    for (const PieceTypeStats& st : t.pieces)
        pieces.push_back({{"j", st.j},
                          {"size", st.size},
                          {"rho", st.rho},
                          {"sigma", st.sigma},
                          {"delta", st.delta},
                          {"in_I", st.in_I}});
    j["pieces"] = pieces;
    j["d0_size"] = t.d0_size;
    return j;
}

json to_json(const RichardsonReport& r) {
    json pieces = json::array();
    for (const DimensionVector& p : r.pieces) pieces.push_back(to_json(p));
    return {{"schema", 1},
            {"kind", kind_name(r.d.kind())},
            {"N", r.d.total()},
            {"dimvec", to_json(r.d)},
            {"decomposition", pieces},
            {"diagram", to_json(r.diagram)},
            {"x", to_json(r.x)},
            {"in_g", r.x_in_g},
            {"in_u", r.x_in_u},
            {"nilpotent", r.nilpotent},
            {"jordan_partition", to_json(r.jordan)},
            {"expected_partition", to_json(r.expected)},
            {"partition_match", r.partition_match},
            {"dense", r.dense},
            {"dim_u", r.dim_u},
            {"dim_levi", r.dim_levi},
            {"centralizer_dim", r.centralizer},
            {"centralizer_match", r.centralizer_match},
            {"gamma", to_json(r.gamma)},
            {"gamma_size", r.gamma_size},
            {"gamma_formula", r.gamma_formula},
            {"gamma_match", r.gamma_match},
            {"gamma_independent", r.gamma_independent},
            {"type", to_json(r.type)},
            {"type_rank_match", r.type_rank_match},
            {"nice", r.nice},
            {"ok", r.ok()}};
}

json to_json(const ShapeDecomposition& sd) {
    json segments = json::array();
    for (const Segment& s : sd.segments)
        segments.push_back({{"tag", s.tag}, {"parts", s.parts}});
    return segments;
}

json to_json(const CrossValidateReport& r) {
    auto set_to_json = [](const std::set<Partition>& s) {
        json a = json::array();
        for (const Partition& p : s) a.push_back(to_json(p));
        return a;
    };
    json constructed_only = json::array(), accepted_only = json::array();
    for (const Partition& p : r.constructed_only)
        constructed_only.push_back(to_json(p));
    for (const Partition& p : r.accepted_only)
        accepted_only.push_back(to_json(p));
    return {{"schema", 1},
            {"kind", kind_name(r.kind)},
            {"N", r.N},
            {"ok", r.ok},
            {"matched",
             r.ok ? static_cast<int>(r.constructed.size())
                  : static_cast<int>(r.constructed.size() -
                                     r.constructed_only.size())},
            {"constructed", set_to_json(r.constructed)},
            {"accepted", set_to_json(r.accepted)},
            {"constructed_only", constructed_only},
            {"accepted_only", accepted_only}};
}

}  // namespace richardson
