#include "richardson/verify.hpp"

#include <algorithm>

namespace richardson {

std::optional<Partition> try_jordan_partition(const LieElement& x) {
    const int N = x.N();
    std::vector<int> dual_parts;
    IntMat power = to_dense(x);
    int prev_rank = N;
    for (int k = 1; k <= N + 1; ++k) {
        int r = exact_rank(power);
        if (r == prev_rank) return std::nullopt;  // rank stalled: not nilpotent
        dual_parts.push_back(prev_rank - r);
        if (r == 0) return dual(Partition(std::move(dual_parts)));
        prev_rank = r;
        power = mat_mul(power, to_dense(x));
    }
    return std::nullopt;
}

Partition jordan_partition(const LieElement& x) {
    auto p = try_jordan_partition(x);
    if (!p) throw contract_error("jordan_partition: input is not nilpotent");
    return *p;
}

Partition expected_partition(const DimensionVector& d) {
    return collapse(dual_sorted_partition(d), d.kind());
}

bool is_dense_in_u(const LieElement& x, const ParabolicData& pd) {
    if (!in_u(x, pd))
        throw contract_error("is_dense_in_u requires x in the nilradical");
    IntMat rows;
    for (const LieElement& b : chevalley_basis(x.kind(), x.N())) {
        auto deg = block_degree(b, pd);
        if (deg && *deg >= 0) rows.push_back(flatten(bracket(b, x)));
    }
    return exact_rank(std::move(rows)) == pd.dim_u();
}

int centralizer_dim(const LieElement& x) {
    IntMat rows;
    int dim_g = 0;
    for (const LieElement& b : chevalley_basis(x.kind(), x.N())) {
        rows.push_back(flatten(bracket(b, x)));
        ++dim_g;
    }
    return dim_g - exact_rank(std::move(rows));
}

bool RichardsonReport::ok() const {
    return x_in_g && x_in_u && nilpotent && partition_match && dense &&
           centralizer_match && gamma_match && gamma_independent &&
           type_rank_match;
}

RichardsonReport full_report(const DimensionVector& d) {
    RichardsonReport r;
    r.d = d;
    r.pieces = decompose(d);
    r.diagram = assemble(d);
    validate(r.diagram);
    ParabolicData pd = parabolic_data(d);
    r.dim_u = pd.dim_u();
    r.dim_levi = pd.dim_levi();

    r.x = element_from_diagram(r.diagram);
    r.x_in_g = in_g(r.x);
    r.x_in_u = in_u(r.x, pd);

    r.expected = expected_partition(d);
    if (auto jp = try_jordan_partition(r.x)) {
        r.nilpotent = true;
        r.jordan = *jp;
        r.partition_match = r.jordan == r.expected;
    }

    r.dense = r.x_in_u && is_dense_in_u(r.x, pd);
    r.centralizer = centralizer_dim(r.x);
    r.centralizer_match = r.centralizer == r.dim_levi;

    r.gamma = support(r.diagram);
    r.gamma_size = r.gamma.size();
    r.gamma_formula = gamma_size_formula(d);
    r.gamma_match = r.gamma_size == r.gamma_formula;

    IntMat weights;
    for (const SupportRoot& root : r.gamma.roots) {
        auto w = unit_weight(r.x.N(), root.primary.first, root.primary.second);
        weights.emplace_back(w.begin(), w.end());
    }
    r.gamma_independent = exact_rank(std::move(weights)) == r.gamma_size;

    r.type = richardson_type(d);
    r.type_rank = r.type.rank();
    r.type_rank_match = r.type_rank == r.gamma_formula;

    r.nice = true;
    for (const auto& [i, j] : r.diagram.arrows)
        if (pd.block_of(i) - pd.block_of(j) != 1) r.nice = false;

    return r;
}

}  // namespace richardson
