#include "richardson/partition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace richardson {

Kind parse_kind(const std::string& s) {
    if (s == "orth" || s == "orthogonal") return Kind::orthogonal;
    if (s == "symp" || s == "symplectic") return Kind::symplectic;
    throw contract_error("unknown kind '" + s + "' (expected orth|symp)");
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw contract_error("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw contract_error("partition parts must be non-increasing");
    }
}

Partition Partition::from_unsorted(std::vector<int> values) {
    std::erase(values, 0);
    std::sort(values.begin(), values.end(), std::greater<>());
    return Partition(std::move(values));
}

int Partition::total() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::part(int k) const {
    if (k < 1 || k > length()) return 0;
    return parts_[k - 1];
}

std::strong_ordering Partition::operator<=>(const Partition& o) const {
    return std::lexicographical_compare_three_way(
        parts_.begin(), parts_.end(), o.parts_.begin(), o.parts_.end());
}

std::string Partition::to_string() const {
    std::ostringstream os;
    os << '[';
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ',';
        os << parts_[i];
    }
    os << ']';
    return os.str();
}

bool dominance_leq(const Partition& a, const Partition& b) {
    if (a.total() != b.total())
        throw contract_error("dominance order requires equal totals: " +
                             a.to_string() + " vs " + b.to_string());
    int pa = 0, pb = 0;
    int l = std::max(a.length(), b.length());
    for (int k = 1; k <= l; ++k) {
        pa += a.part(k);
        pb += b.part(k);
        if (pa > pb) return false;
    }
    return true;
}

Partition dual(const Partition& a) {
    std::vector<int> cols;
    for (int k = 1; k <= a.part(1); ++k) {
        int count = 0;
        for (int p : a.parts())
            if (p >= k) ++count;
        cols.push_back(count);
    }
    return Partition(std::move(cols));
}

namespace {

bool valid_multiplicities(const Partition& a, int bad_parity) {
    std::map<int, int> mult;
    for (int p : a.parts()) ++mult[p];
    for (auto [value, count] : mult)
        if (value % 2 == bad_parity && count % 2 != 0) return false;
    return true;
}

}  // namespace

bool is_orthogonal(const Partition& a) { return valid_multiplicities(a, 0); }
bool is_symplectic(const Partition& a) { return valid_multiplicities(a, 1); }

bool is_valid(const Partition& a, Kind kind) {
    return kind == Kind::orthogonal ? is_orthogonal(a) : is_symplectic(a);
}

Partition collapse(const Partition& a, Kind kind) {
    const int bad_parity = kind == Kind::orthogonal ? 0 : 1;
    if (kind == Kind::symplectic && a.total() % 2 != 0)
        throw contract_error("no symplectic partition of odd total exists");

    std::vector<int> p = a.parts();
    auto offending_run_end = [&]() -> int {
        // Index one past the last element of the run of the largest part
        // with bad parity and odd multiplicity, or -1 if none.
        size_t i = 0;
        while (i < p.size()) {
            size_t j = i;
            while (j < p.size() && p[j] == p[i]) ++j;
            if (p[i] % 2 == bad_parity && (j - i) % 2 != 0)
                return static_cast<int>(j);
            i = j;
        }
        return -1;
    };

    // Greedy repair: lower the last copy of the offending part by one and
    // raise the first later slot that keeps the sequence non-increasing.
    // Each step strictly decreases in dominance order, so this terminates;
    // agreement with the brute-force dominance maximum is checked in tests.
    for (int end = offending_run_end(); end != -1; end = offending_run_end()) {
        int e = end - 1;
        p[e] -= 1;
        size_t f = e + 1;
        while (f < p.size() && p[f] + 1 > p[f - 1]) ++f;
        if (f < p.size())
            p[f] += 1;
        else
            p.push_back(1);
        std::erase(p, 0);
    }
    return Partition(std::move(p));
}

namespace {

void gen_partitions(int n, int max_part, std::vector<int>& acc,
                    std::vector<Partition>& out) {
    if (n == 0) {
        out.emplace_back(acc);
        return;
    }
    for (int p = std::min(n, max_part); p >= 1; --p) {
        acc.push_back(p);
        gen_partitions(n - p, p, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<Partition> all_partitions(int n) {
    if (n < 0) throw contract_error("all_partitions: negative total");
    std::vector<Partition> out;
    std::vector<int> acc;
    gen_partitions(n, n == 0 ? 1 : n, acc, out);
    return out;
}

}  // namespace richardson
