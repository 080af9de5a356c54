#include "richardson/classify.hpp"

#include <algorithm>
#include <span>

#include "richardson/verify.hpp"

namespace richardson {

namespace {

bool all_parity(std::span<const int> seg, int parity) {
    return std::all_of(seg.begin(), seg.end(),
                       [parity](int p) { return p % 2 == parity; });
}

// length even, fixed parity, equal within each consecutive pair
bool is_pair_partition(std::span<const int> seg, int parity) {
    if (seg.size() % 2 != 0 || !all_parity(seg, parity)) return false;
    for (size_t k = 0; k + 1 < seg.size(); k += 2)
        if (seg[k] != seg[k + 1]) return false;
    return true;
}

// length even, fixed parity, strict descent between consecutive pairs
bool is_two_step_descending(std::span<const int> seg, int parity) {
    if (seg.size() % 2 != 0 || !all_parity(seg, parity)) return false;
    for (size_t k = 1; k + 1 < seg.size(); k += 2)
        if (seg[k] <= seg[k + 1]) return false;
    return true;
}

struct Searcher {
    std::span<const int> parts;
    std::vector<Segment> acc;

    bool push_and_recurse(size_t start, size_t len, const char* tag,
                          auto&& next) {
        acc.push_back(
            {tag, std::vector<int>(parts.begin() + start,
                                   parts.begin() + start + len)});
        if (next(start + len)) return true;
        acc.pop_back();
        return false;
    }
};

// Orthogonal: an all-odd head, then alternating nonempty even-pair and
// odd 2-step-descending segments.
struct OrthSearcher : Searcher {
    bool expect(size_t start, bool even_pair_next) {
        if (start == parts.size()) return true;
        const char* tag = even_pair_next ? "even-pair" : "odd-2sd";
        for (size_t len = parts.size() - start; len >= 2; --len) {
            if (len % 2 != 0) continue;
            std::span<const int> seg = parts.subspan(start, len);
            bool fits = even_pair_next ? is_pair_partition(seg, 0)
                                       : is_two_step_descending(seg, 1);
            if (!fits) continue;
            if (push_and_recurse(start, len, tag, [&](size_t next_start) {
                    return expect(next_start, !even_pair_next);
                }))
                return true;
        }
        return false;
    }

    bool run() {
        size_t max_head = 0;
        while (max_head < parts.size() && parts[max_head] % 2 != 0)
            ++max_head;
        for (size_t head = max_head + 1; head-- > 0;) {
            if (head > 0)
                acc.push_back({"odd", std::vector<int>(
                                          parts.begin(), parts.begin() + head)});
            if (expect(head, true)) return true;
            if (head > 0) acc.pop_back();
        }
        return false;
    }
};

// Symplectic: alternating nonempty odd-pair and even 2-step-descending
// segments (the first odd-pair may be skipped), then an all-even tail.
struct SympSearcher : Searcher {
    bool expect(size_t start, bool odd_pair_next) {
        if (start == parts.size()) return true;
        std::span<const int> rest = parts.subspan(start);
        if (all_parity(rest, 0)) {
            acc.push_back({"even", std::vector<int>(rest.begin(), rest.end())});
            return true;
        }
        const char* tag = odd_pair_next ? "odd-pair" : "even-2sd";
        for (size_t len = parts.size() - start; len >= 2; --len) {
            if (len % 2 != 0) continue;
            std::span<const int> seg = parts.subspan(start, len);
            bool fits = odd_pair_next ? is_pair_partition(seg, 1)
                                      : is_two_step_descending(seg, 0);
            if (!fits) continue;
            if (push_and_recurse(start, len, tag, [&](size_t next_start) {
                    return expect(next_start, !odd_pair_next);
                }))
                return true;
        }
        return false;
    }

    bool run() {
        if (expect(0, true)) return true;   // lambda^1 nonempty (or pure tail)
        return expect(0, false);            // lambda^1 empty
    }
};

}  // namespace

std::optional<ShapeDecomposition> classify_orth(const Partition& a) {
    if (!is_orthogonal(a))
        throw contract_error("classify_orth requires an orthogonal partition");
    OrthSearcher s{{std::span<const int>(a.parts()), {}}};
    if (!s.run()) return std::nullopt;
    return ShapeDecomposition{Kind::orthogonal, std::move(s.acc)};
}

std::optional<ShapeDecomposition> classify_symp(const Partition& a) {
    if (!is_symplectic(a))
        throw contract_error("classify_symp requires a symplectic partition");
    SympSearcher s{{std::span<const int>(a.parts()), {}}};
    if (!s.run()) return std::nullopt;
    return ShapeDecomposition{Kind::symplectic, std::move(s.acc)};
}

std::optional<ShapeDecomposition> classify_partition(const Partition& a,
                                                     Kind kind) {
    return kind == Kind::orthogonal ? classify_orth(a) : classify_symp(a);
}

std::set<Partition> enumerate_richardson_partitions(Kind kind, int N) {
    std::set<Partition> out;
    for (const DimensionVector& d : enumerate_proper_dimvecs(kind, N))
        out.insert(jordan_partition(element_from_diagram(assemble(d))));
    return out;
}

CrossValidateReport cross_validate(Kind kind, int N) {
    CrossValidateReport r;
    r.kind = kind;
    r.N = N;
    r.constructed = enumerate_richardson_partitions(kind, N);
    for (const Partition& p : all_partitions(N))
        if (is_valid(p, kind) && classify_partition(p, kind))
            r.accepted.insert(p);
    std::set_difference(r.constructed.begin(), r.constructed.end(),
                        r.accepted.begin(), r.accepted.end(),
                        std::back_inserter(r.constructed_only));
    std::set_difference(r.accepted.begin(), r.accepted.end(),
                        r.constructed.begin(), r.constructed.end(),
                        std::back_inserter(r.accepted_only));
    r.ok = r.constructed_only.empty() && r.accepted_only.empty();
    return r;
}

}  // namespace richardson
