#pragma once

#include <compare>
#include <string>
#include <vector>

#include "richardson/common.hpp"

namespace richardson {

/// An integer partition: a non-increasing sequence of positive parts.
/// The empty partition (total 0) is a first-class value.
class Partition {
public:
    Partition() = default;
    /// Parts must already be positive and non-increasing.
    explicit Partition(std::vector<int> parts);
    /// Sorts descending and drops zeros first.
    static Partition from_unsorted(std::vector<int> values);

    const std::vector<int>& parts() const { return parts_; }
    int total() const;
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    /// 1-indexed part, 0 beyond the end.
    int part(int k) const;

    bool operator==(const Partition&) const = default;
    /// Lexicographic; gives partitions of equal total a stable order.
    std::strong_ordering operator<=>(const Partition& o) const;

    std::string to_string() const;

private:
    std::vector<int> parts_;
};

/// Dominance order: a <= b iff every prefix sum of a is <= that of b.
/// Only defined between partitions of the same total.
bool dominance_leq(const Partition& a, const Partition& b);

/// Conjugate (transpose of the Young diagram). An involution.
Partition dual(const Partition& a);

/// Every even part occurs with even multiplicity.
bool is_orthogonal(const Partition& a);
/// Every odd part occurs with even multiplicity.
bool is_symplectic(const Partition& a);
bool is_valid(const Partition& a, Kind kind);

/// The dominance-greatest orthogonal (resp. symplectic) partition below a.
/// Identity on already-valid partitions. Requires an even total in the
/// symplectic case (otherwise no valid partition of that total exists).
Partition collapse(const Partition& a, Kind kind);

/// All partitions of n, descending lexicographic. p(16) = 231, so this is
/// only meant for desk-scale enumeration.
std::vector<Partition> all_partitions(int n);

}  // namespace richardson
