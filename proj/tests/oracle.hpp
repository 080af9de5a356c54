#pragma once

// Test-only oracles, kept independent of the library code paths they check.

#include <algorithm>
#include <optional>
#include <vector>

#include "richardson/partition.hpp"

namespace oracle {

struct CollapseMax {
    bool exists = false;
    bool unique = false;
    richardson::Partition value;
};

// Dominance maximum over all valid partitions below a, found by exhausting
// every partition of the total. Checks on the way that the maximum not only
// is maximal but dominates every candidate.
inline CollapseMax brute_force_collapse(const richardson::Partition& a,
                                        richardson::Kind kind) {
    using richardson::Partition;
    CollapseMax r;
    std::vector<Partition> candidates;
    for (const Partition& p : richardson::all_partitions(a.total()))
        if (richardson::is_valid(p, kind) && richardson::dominance_leq(p, a))
            candidates.push_back(p);
    if (candidates.empty()) return r;
    r.exists = true;
    std::vector<Partition> maxima;
    for (const Partition& p : candidates) {
        bool dominates_all = std::all_of(
            candidates.begin(), candidates.end(),
            [&](const Partition& q) { return richardson::dominance_leq(q, p); });
        if (dominates_all) maxima.push_back(p);
    }
    r.unique = maxima.size() == 1;
    if (r.unique) r.value = maxima.front();
    return r;
}

}  // namespace oracle
