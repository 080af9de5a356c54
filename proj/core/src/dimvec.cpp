#include "richardson/dimvec.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "richardson/liealg.hpp"

namespace richardson {

DimensionVector DimensionVector::from_entries(Kind kind,
                                              std::vector<int> entries) {
    if (entries.empty() || entries.size() % 2 == 0)
        throw contract_error("dimension vector needs odd length 2s+1");
    const int s = (static_cast<int>(entries.size()) - 1) / 2;
    for (int i = 0; i <= s; ++i)
        if (entries[s - i] != entries[s + i])
            throw contract_error("dimension vector must be symmetric: d_{-i} = d_i");
    for (int e : entries)
        if (e < 0) throw contract_error("dimension vector entries must be >= 0");
    if (kind == Kind::symplectic && entries[s] % 2 != 0)
        throw contract_error("symplectic dimension vector needs d_0 even");
    return DimensionVector(kind, std::move(entries));
}

DimensionVector DimensionVector::from_half(Kind kind,
                                           const std::vector<int>& half,
                                           int N) {
    int sum = std::accumulate(half.begin(), half.end(), 0);
    for (int e : half)
        if (e < 0) throw contract_error("half entries must be >= 0");
    if (2 * sum > N)
        throw contract_error("half entries sum to more than N/2");
    if (kind == Kind::symplectic && N % 2 != 0)
        throw contract_error("symplectic N must be even");
    std::vector<int> entries(half.rbegin(), half.rend());
    entries.push_back(N - 2 * sum);
    entries.insert(entries.end(), half.begin(), half.end());
    return from_entries(kind, std::move(entries));
}

int DimensionVector::total() const {
    return std::accumulate(entries_.begin(), entries_.end(), 0);
}

int DimensionVector::entry(int i) const {
    if (i < -s() || i > s())
        throw contract_error("dimension vector index out of range");
    return entries_[i + s()];
}

std::string DimensionVector::to_string() const {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < entries_.size(); ++i) {
        if (i) os << ',';
        os << entries_[i];
    }
    os << ')';
    return os.str();
}

bool is_proper(const DimensionVector& d) {
    for (int i = 1; i <= d.s(); ++i)
        if (d.entry(i) == 0) return false;
    if (d.kind() == Kind::orthogonal && d.s() >= 1 && d.entry(0) == 0 &&
        d.entry(1) == 1)
        return false;
    return true;
}

DimensionVector normalize(const DimensionVector& d) {
    const int s = d.s();
    std::vector<int> half;
    for (int i = 1; i <= s; ++i)
        if (d.entry(i) != 0) half.push_back(d.entry(i));
    int centre = d.entry(0);
    if (d.kind() == Kind::orthogonal && centre == 0 && !half.empty() &&
        half.front() == 1) {
        // central (1,0,1) defines the same flag stabilizer as a single 2
        half.erase(half.begin());
        centre = 2;
    }
    std::vector<int> entries(half.rbegin(), half.rend());
    entries.push_back(centre);
    entries.insert(entries.end(), half.begin(), half.end());
    return DimensionVector::from_entries(d.kind(), std::move(entries));
}

Partition dual_sorted_partition(const DimensionVector& d) {
    return dual(Partition::from_unsorted(d.entries()));
}

std::vector<int> basis_labels(int N) {
    const int n = N / 2;
    std::vector<int> labels;
    for (int i = -n; i <= n; ++i) {
        if (i == 0 && N % 2 == 0) continue;
        labels.push_back(i);
    }
    return labels;
}

int ParabolicData::block_of(int label) const {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
    if (it == labels_.end() || *it != label)
        throw contract_error("block_of: no such basis label");
    return block_by_pos_[it - labels_.begin()];
}

ParabolicData parabolic_data(const DimensionVector& d) {
    ParabolicData pd;
    pd.d_ = d;
    pd.N_ = d.total();
    pd.labels_ = basis_labels(pd.N_);
    const int s = d.s();
    pd.cum_.clear();
    int pos = 0;
    for (int b = -s; b <= s; ++b) {
        pd.cum_.push_back(pos);
        for (int k = 0; k < d.entry(b); ++k) pd.block_by_pos_.push_back(b);
        pos += d.entry(b);
    }
    pd.cum_.push_back(pos);

    pd.dim_u_ = 0;
    pd.dim_levi_ = 0;
    for (const LieElement& e : chevalley_basis(d.kind(), pd.N_)) {
        auto deg = block_degree(e, pd);
        if (!deg)
            throw construction_error("basis element with mixed block degree");
        if (*deg > 0)
            ++pd.dim_u_;
        else if (*deg == 0)
            ++pd.dim_levi_;
    }
    return pd;
}

int lie_algebra_dim(Kind kind, int N) {
    return kind == Kind::orthogonal ? N * (N - 1) / 2 : N * (N + 1) / 2;
}

namespace {

void gen_halves(Kind kind, int N, int budget, std::vector<int>& half,
                std::vector<DimensionVector>& out) {
    DimensionVector d = DimensionVector::from_half(kind, half, N);
    if (is_proper(d)) out.push_back(d);
    for (int next = 1; next <= budget; ++next) {
        half.push_back(next);
        gen_halves(kind, N, budget - next, half, out);
        half.pop_back();
    }
}

}  // namespace

std::vector<DimensionVector> enumerate_proper_dimvecs(Kind kind, int N) {
    if (kind == Kind::orthogonal && N < 3)
        throw contract_error("orthogonal enumeration needs N >= 3");
    if (kind == Kind::symplectic && (N < 2 || N % 2 != 0))
        throw contract_error("symplectic enumeration needs even N >= 2");
    std::vector<DimensionVector> out;
    std::vector<int> half;
    gen_halves(kind, N, N / 2, half, out);
    std::stable_sort(out.begin(), out.end(),
                     [](const DimensionVector& a, const DimensionVector& b) {
                         return a.s() < b.s();
                     });
    return out;
}

}  // namespace richardson
