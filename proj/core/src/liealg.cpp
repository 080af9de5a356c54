#include "richardson/liealg.hpp"

#include <algorithm>
#include <sstream>

namespace richardson {

namespace {

bool valid_label(int N, int a) {
    const int n = N / 2;
    if (a == 0) return N % 2 != 0;
    return a >= -n && a <= n;
}

int label_index(int N, int a) {
    // position of label a in the ordered list -n..n (0 skipped for even N)
    const int n = N / 2;
    int idx = a + n;
    if (N % 2 == 0 && a > 0) --idx;
    return idx;
}

}  // namespace

void LieElement::add_entry(int i, int j, const Int& c) {
    if (!valid_label(N_, i) || !valid_label(N_, j))
        throw contract_error("LieElement entry label out of range");
    if (c == 0) return;
    auto [it, inserted] = entries_.try_emplace({i, j}, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) entries_.erase(it);
    }
}

Int LieElement::coeff(int i, int j) const {
    auto it = entries_.find({i, j});
    return it == entries_.end() ? Int(0) : it->second;
}

LieElement LieElement::operator+(const LieElement& o) const {
    if (kind_ != o.kind_ || N_ != o.N_)
        throw contract_error("LieElement kind/N mismatch");
    LieElement r = *this;
    for (const auto& [ij, c] : o.entries_) r.add_entry(ij.first, ij.second, c);
    return r;
}

LieElement LieElement::operator-(const LieElement& o) const {
    return *this + o * Int(-1);
}

LieElement LieElement::operator*(const Int& c) const {
    LieElement r(kind_, N_);
    if (c == 0) return r;
    for (const auto& [ij, v] : entries_) r.entries_[ij] = v * c;
    return r;
}

std::string LieElement::to_string() const {
    if (entries_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [ij, c] : entries_) {
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        first = false;
        Int a = abs(c);
        if (a != 1) os << a << "*";
        os << "e[" << ij.first << "," << ij.second << "]";
    }
    return os.str();
}

int form_value(Kind kind, int a, int b) {
    if (kind == Kind::orthogonal) return b == -a ? 1 : 0;
    if (b != -a || a == 0) return 0;
    return a > 0 ? 1 : -1;
}

std::vector<LieElement> chevalley_basis(Kind kind, int N) {
    if (kind == Kind::orthogonal && N < 3)
        throw contract_error("orthogonal basis needs N >= 3");
    if (kind == Kind::symplectic && (N < 2 || N % 2 != 0))
        throw contract_error("symplectic basis needs even N >= 2");
    const int n = N / 2;
    std::vector<LieElement> basis;
    auto make = [&](std::initializer_list<std::tuple<int, int, int>> terms) {
        LieElement e(kind, N);
        for (auto [i, j, c] : terms) e.add_entry(i, j, c);
        basis.push_back(std::move(e));
    };
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            make({{i, j, 1}, {-j, -i, -1}});
    if (kind == Kind::orthogonal) {
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                make({{i, -j, 1}, {j, -i, -1}});
                make({{-j, i, 1}, {-i, j, -1}});
            }
        if (N % 2 != 0)
            for (int k = 1; k <= n; ++k) {
                make({{k, 0, 1}, {0, -k, -1}});
                make({{0, k, 1}, {-k, 0, -1}});
            }
    } else {
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                make({{i, -j, 1}, {j, -i, 1}});
                make({{-i, j, 1}, {-j, i, 1}});
            }
        for (int k = 1; k <= n; ++k) {
            make({{k, -k, 1}});
            make({{-k, k, 1}});
        }
    }
    return basis;
}

std::optional<int> epsilon(Kind kind, int N, int i, int j) {
    if (!valid_label(N, i) || !valid_label(N, j)) return std::nullopt;
    if (i > 0 && j > 0) return 1;
    if (i < 0 && j < 0) return -1;
    if (kind == Kind::symplectic) {
        // through-origin units e_{k,-k}, e_{-k,k} and the mixed families all
        // carry +1
        return 1;
    }
    if (i == 0 && j == 0) return std::nullopt;
    if (j == 0) return i > 0 ? 1 : -1;
    if (i == 0) return j > 0 ? 1 : -1;
    if (i > 0 && j < 0) {
        if (i == -j) return std::nullopt;
        return i < -j ? 1 : -1;
    }
    // i < 0 < j
    if (j == -i) return std::nullopt;
    return j < -i ? 1 : -1;
}

bool in_g(const LieElement& x) {
    // (x v_a, v_b) + (v_a, x v_b) over all basis pairs, as sparse sums
    const Kind kind = x.kind();
    auto labels = basis_labels(x.N());
    for (int a : labels)
        for (int b : labels) {
            Int lhs = 0;
            for (const auto& [ij, c] : x.entries()) {
                if (ij.first == a) lhs += c * form_value(kind, ij.second, b);
                if (ij.first == b) lhs += c * form_value(kind, a, ij.second);
            }
            if (lhs != 0) return false;
        }
    return true;
}

LieElement bracket(const LieElement& x, const LieElement& y) {
    if (x.kind() != y.kind() || x.N() != y.N())
        throw contract_error("bracket: kind/N mismatch");
    LieElement r(x.kind(), x.N());
    // In the v_i -> v_j map semantics, x.y acts by y first: the product of
    // units is e_{i,j} e_{k,l} = delta_{l,i} e_{k,j}.
    for (const auto& [ij, c] : x.entries())
        for (const auto& [kl, d] : y.entries()) {
            if (kl.second == ij.first) r.add_entry(kl.first, ij.second, c * d);
            if (ij.second == kl.first) r.add_entry(ij.first, kl.second, -c * d);
        }
    return r;
}

std::optional<int> block_degree(const LieElement& x, const ParabolicData& pd) {
    std::optional<int> deg;
    for (const auto& [ij, c] : x.entries()) {
        int d = pd.block_of(ij.first) - pd.block_of(ij.second);
        if (!deg)
            deg = d;
        else if (*deg != d)
            return std::nullopt;
    }
    return deg ? deg : std::optional<int>(0);
}

bool in_u(const LieElement& x, const ParabolicData& pd) {
    for (const auto& [ij, c] : x.entries())
        if (pd.block_of(ij.second) >= pd.block_of(ij.first)) return false;
    return true;
}

std::vector<int> unit_weight(int N, int i, int j) {
    const int n = N / 2;
    std::vector<int> w(n, 0);
    auto add = [&](int label, int sign) {
        if (label > 0)
            w[label - 1] += sign;
        else if (label < 0)
            w[-label - 1] -= sign;
    };
    add(j, 1);
    add(i, -1);
    return w;
}

IntMat to_dense(const LieElement& x) {
    const int N = x.N();
    IntMat m(N, IntVec(N, 0));
    for (const auto& [ij, c] : x.entries())
        m[label_index(N, ij.first)][label_index(N, ij.second)] = c;
    return m;
}

IntVec flatten(const LieElement& x) {
    const int N = x.N();
    IntVec v(static_cast<size_t>(N) * N, 0);
    for (const auto& [ij, c] : x.entries())
        v[static_cast<size_t>(label_index(N, ij.first)) * N +
          label_index(N, ij.second)] = c;
    return v;
}

int map_rank(const LieElement& x) { return exact_rank(to_dense(x)); }

}  // namespace richardson
