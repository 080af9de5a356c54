#include <doctest.h>

#include "richardson/classify.hpp"

using namespace richardson;

namespace {

Partition P(std::vector<int> v) { return Partition(std::move(v)); }

// Independent witness checker: segments concatenate to the partition and
// each carries the advertised shape in the advertised order.
bool witness_is_valid(const Partition& p, const ShapeDecomposition& sd) {
    std::vector<int> cat;
    for (const Segment& s : sd.segments)
        cat.insert(cat.end(), s.parts.begin(), s.parts.end());
    if (cat != p.parts()) return false;

    auto pair_shape = [](const std::vector<int>& v, int parity) {
        if (v.size() % 2) return false;
        for (size_t k = 0; k < v.size(); ++k)
            if (v[k] % 2 != parity) return false;
        for (size_t k = 0; k + 1 < v.size(); k += 2)
            if (v[k] != v[k + 1]) return false;
        return true;
    };
    auto two_step = [](const std::vector<int>& v, int parity) {
        if (v.size() % 2) return false;
        for (size_t k = 0; k < v.size(); ++k)
            if (v[k] % 2 != parity) return false;
        for (size_t k = 1; k + 1 < v.size(); k += 2)
            if (v[k] <= v[k + 1]) return false;
        return true;
    };
    auto all_parity = [](const std::vector<int>& v, int parity) {
        for (int e : v)
            if (e % 2 != parity) return false;
        return true;
    };

    if (sd.kind == Kind::orthogonal) {
        size_t i = 0;
        if (i < sd.segments.size() && sd.segments[i].tag == "odd") {
            if (!all_parity(sd.segments[i].parts, 1)) return false;
            ++i;
        }
        bool expect_even_pair = true;
        for (; i < sd.segments.size(); ++i, expect_even_pair = !expect_even_pair) {
            const Segment& s = sd.segments[i];
            if (s.parts.empty()) return false;
            if (expect_even_pair) {
                if (s.tag != "even-pair" || !pair_shape(s.parts, 0))
                    return false;
            } else {
                if (s.tag != "odd-2sd" || !two_step(s.parts, 1)) return false;
            }
        }
        return true;
    }
    size_t i = 0;
    bool expect_odd_pair = true;
    bool first = true;
    for (; i < sd.segments.size(); ++i) {
        const Segment& s = sd.segments[i];
        if (s.tag == "even") {
            return i + 1 == sd.segments.size() && all_parity(s.parts, 0);
        }
        if (s.parts.empty()) return false;
        if (first && s.tag == "even-2sd") expect_odd_pair = false;  // empty l1
        first = false;
        if (expect_odd_pair) {
            if (s.tag != "odd-pair" || !pair_shape(s.parts, 1)) return false;
        } else {
            if (s.tag != "even-2sd" || !two_step(s.parts, 0)) return false;
        }
        expect_odd_pair = !expect_odd_pair;
    }
    return true;
}

}  // namespace

TEST_CASE("orthogonal classifier on worked examples") {
    auto w1 = classify_orth(P({5, 5, 3, 3}));
    REQUIRE(w1.has_value());
    CHECK(witness_is_valid(P({5, 5, 3, 3}), *w1));

    auto w2 = classify_orth(P({2, 2}));
    REQUIRE(w2.has_value());
    CHECK(w2->segments.size() == 1);
    CHECK(w2->segments[0].tag == "even-pair");

    CHECK_FALSE(classify_orth(P({3, 2, 2, 1})).has_value());
    CHECK_FALSE(classify_orth(P({2, 2, 1, 1, 1, 1})).has_value());
    CHECK_THROWS_AS(classify_orth(P({4, 3, 1})), contract_error);
}

TEST_CASE("symplectic classifier on worked examples") {
    auto w1 = classify_symp(P({4, 2}));
    REQUIRE(w1.has_value());
    CHECK(w1->segments.size() == 1);
    CHECK(w1->segments[0].tag == "even");

    auto w2 = classify_symp(P({3, 3, 2}));
    REQUIRE(w2.has_value());
    CHECK(witness_is_valid(P({3, 3, 2}), *w2));

    CHECK_FALSE(classify_symp(P({2, 1, 1})).has_value());
    CHECK_THROWS_AS(classify_symp(P({3, 2, 1})), contract_error);

    // leading even content forces the empty first segment
    auto w3 = classify_symp(P({4, 2, 1, 1}));
    REQUIRE(w3.has_value());
    CHECK(witness_is_valid(P({4, 2, 1, 1}), *w3));
}

TEST_CASE("accepted witnesses are valid for every candidate (N <= 12)") {
    for (Kind kind : {Kind::orthogonal, Kind::symplectic}) {
        for (int n = kind == Kind::orthogonal ? 3 : 2; n <= 12; ++n) {
            if (kind == Kind::symplectic && n % 2 != 0) continue;
            for (const Partition& p : all_partitions(n)) {
                if (!is_valid(p, kind)) continue;
                auto w = classify_partition(p, kind);
                if (w) CHECK(witness_is_valid(p, *w));
            }
        }
    }
}

TEST_CASE("enumeration matches hand-computed small cases") {
    std::set<Partition> orth4{P({1, 1, 1, 1}), P({3, 1}), P({2, 2})};
    CHECK(enumerate_richardson_partitions(Kind::orthogonal, 4) == orth4);

    std::set<Partition> symp2{P({1, 1}), P({2})};
    CHECK(enumerate_richardson_partitions(Kind::symplectic, 2) == symp2);

    std::set<Partition> orth3{P({1, 1, 1}), P({3})};
    CHECK(enumerate_richardson_partitions(Kind::orthogonal, 3) == orth3);
}

TEST_CASE("cross validation agrees on small totals") {
    CHECK(cross_validate(Kind::orthogonal, 4).ok);
    CHECK(cross_validate(Kind::symplectic, 6).ok);
    CHECK(cross_validate(Kind::orthogonal, 12).ok);
}
