#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "richardson/dimvec.hpp"
#include "richardson/partition.hpp"

namespace richardson {

/// One segment of a polarizability witness; tag is one of
/// "odd" (orthogonal head), "even-pair", "odd-2sd", "odd-pair",
/// "even-2sd", "even" (symplectic tail). Empty optional segments are
/// omitted from the list.
struct Segment {
    std::string tag;
    std::vector<int> parts;
    bool operator==(const Segment&) const = default;
};

/// A decomposition of a partition into the alternating shape that
/// characterizes Richardson-orbit (polarizable) partitions.
struct ShapeDecomposition {
    Kind kind = Kind::orthogonal;
    std::vector<Segment> segments;
};

/// Witness search over all segment boundaries. Input must be orthogonal;
/// returns a witness iff the partition is the Jordan type of some
/// Richardson orbit of O_N.
std::optional<ShapeDecomposition> classify_orth(const Partition& a);

/// Symplectic counterpart; input must be symplectic.
std::optional<ShapeDecomposition> classify_symp(const Partition& a);

std::optional<ShapeDecomposition> classify_partition(const Partition& a,
                                                     Kind kind);

/// Jordan partitions of the constructed elements over every proper
/// dimension vector of total N.
std::set<Partition> enumerate_richardson_partitions(Kind kind, int N);

struct CrossValidateReport {
    Kind kind = Kind::orthogonal;
    int N = 0;
    std::set<Partition> constructed;
    std::set<Partition> accepted;
    std::vector<Partition> constructed_only;
    std::vector<Partition> accepted_only;
    bool ok = false;
};

/// Set equality between the constructive enumeration and the classifier.
CrossValidateReport cross_validate(Kind kind, int N);

}  // namespace richardson
