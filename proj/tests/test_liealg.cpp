#include <doctest.h>

#include <map>
#include <random>

#include "richardson/liealg.hpp"

using namespace richardson;

namespace {

LieElement unit(Kind k, int N, int i, int j, int c = 1) {
    LieElement e(k, N);
    e.add_entry(i, j, c);
    return e;
}

}  // namespace

TEST_CASE("basis sizes equal the algebra dimensions") {
    CHECK(chevalley_basis(Kind::orthogonal, 5).size() == 10);
    CHECK(chevalley_basis(Kind::orthogonal, 6).size() == 15);
    CHECK(chevalley_basis(Kind::symplectic, 4).size() == 10);
    CHECK(chevalley_basis(Kind::symplectic, 2).size() == 3);
    for (int n = 3; n <= 9; ++n)
        CHECK(chevalley_basis(Kind::orthogonal, n).size() ==
              static_cast<size_t>(lie_algebra_dim(Kind::orthogonal, n)));
    for (int n = 2; n <= 8; n += 2)
        CHECK(chevalley_basis(Kind::symplectic, n).size() ==
              static_cast<size_t>(lie_algebra_dim(Kind::symplectic, n)));
}

TEST_CASE("every basis element lies in g") {
    for (Kind kind : {Kind::orthogonal, Kind::symplectic})
        for (int n = kind == Kind::orthogonal ? 3 : 2; n <= 8; ++n) {
            if (kind == Kind::symplectic && n % 2 != 0) continue;
            for (const LieElement& e : chevalley_basis(kind, n)) {
                CAPTURE(e.to_string());
                CHECK(in_g(e));
            }
        }
}

TEST_CASE("epsilon sign table") {
    // orthogonal families
    CHECK(epsilon(Kind::orthogonal, 10, 2, 4) == 1);
    CHECK(epsilon(Kind::orthogonal, 10, -4, -2) == -1);
    CHECK(epsilon(Kind::orthogonal, 10, 2, -4) == 1);    // i < j
    CHECK(epsilon(Kind::orthogonal, 10, 4, -2) == -1);   // i > j
    CHECK(epsilon(Kind::orthogonal, 10, -4, 2) == 1);
    CHECK(epsilon(Kind::orthogonal, 10, -2, 4) == -1);
    CHECK(epsilon(Kind::orthogonal, 9, 3, 0) == 1);
    CHECK(epsilon(Kind::orthogonal, 9, 0, -3) == -1);
    CHECK(epsilon(Kind::orthogonal, 9, 0, 3) == 1);
    CHECK(epsilon(Kind::orthogonal, 9, -3, 0) == -1);
    CHECK_FALSE(epsilon(Kind::orthogonal, 10, 3, -3).has_value());
    CHECK_FALSE(epsilon(Kind::orthogonal, 10, 0, 3).has_value());  // no label 0
    // symplectic families
    CHECK(epsilon(Kind::symplectic, 8, 2, -4) == 1);
    CHECK(epsilon(Kind::symplectic, 8, 4, -2) == 1);
    CHECK(epsilon(Kind::symplectic, 8, 3, -3) == 1);
    CHECK(epsilon(Kind::symplectic, 8, -3, 3) == 1);
    CHECK(epsilon(Kind::symplectic, 8, -2, -4) == -1);
}

TEST_CASE("epsilon is consistent with the emitted basis") {
    for (Kind kind : {Kind::orthogonal, Kind::symplectic})
        for (int n : {7, 8}) {
            if (kind == Kind::symplectic && n % 2 != 0) continue;
            for (const LieElement& e : chevalley_basis(kind, n))
                for (const auto& [ij, c] : e.entries()) {
                    auto eps = epsilon(kind, n, ij.first, ij.second);
                    REQUIRE(eps.has_value());
                    CHECK(Int(*eps) == c);
                }
        }
}

TEST_CASE("in_g rejects a bare matrix unit and accepts zero") {
    CHECK_FALSE(in_g(unit(Kind::orthogonal, 5, 1, 2)));
    CHECK(in_g(LieElement(Kind::orthogonal, 5)));
}

TEST_CASE("bracket basics") {
    auto basis = chevalley_basis(Kind::orthogonal, 5);
    for (const LieElement& e : basis)
        CHECK(bracket(e, e).is_zero());
    LieElement other(Kind::symplectic, 4);
    CHECK_THROWS_AS(bracket(basis[0], other), contract_error);
}

TEST_CASE("basis elements are simultaneous torus eigenvectors") {
    for (Kind kind : {Kind::orthogonal, Kind::symplectic})
        for (int N : {7, 8}) {
            if (kind == Kind::symplectic && N % 2 != 0) continue;
            const int n = N / 2;
            for (const LieElement& e : chevalley_basis(kind, N)) {
                auto [ij, c] = *e.entries().begin();
                std::vector<int> alpha = unit_weight(N, ij.first, ij.second);
                for (int k = 1; k <= n; ++k) {
                    LieElement h = unit(kind, N, k, k) -
                                   unit(kind, N, -k, -k);
                    CHECK(bracket(h, e) == e * Int(alpha[k - 1]));
                }
            }
        }
}

TEST_CASE("bracket closes into g and spans stay inside the basis span") {
    auto basis = chevalley_basis(Kind::orthogonal, 5);
    IntMat rows;
    for (const LieElement& e : basis) rows.push_back(flatten(e));
    CHECK(exact_rank(rows) == 10);
    for (const LieElement& a : basis)
        for (const LieElement& b : basis) {
            LieElement c = bracket(a, b);
            CHECK(in_g(c));
            IntMat with = rows;
            with.push_back(flatten(c));
            CHECK(exact_rank(std::move(with)) == 10);
        }
}

TEST_CASE("jacobi identity on random basis triples") {
    std::mt19937 rng(42);
    for (Kind kind : {Kind::orthogonal, Kind::symplectic}) {
        const int N = kind == Kind::orthogonal ? 7 : 6;
        auto basis = chevalley_basis(kind, N);
        std::uniform_int_distribution<size_t> pick(0, basis.size() - 1);
        for (int t = 0; t < 60; ++t) {
            const LieElement &a = basis[pick(rng)], &b = basis[pick(rng)],
                             &c = basis[pick(rng)];
            LieElement j = bracket(bracket(a, b), c) +
                           bracket(bracket(b, c), a) +
                           bracket(bracket(c, a), b);
            CHECK(j.is_zero());
        }
    }
}

TEST_CASE("block degrees and nilradical membership") {
    auto borel = DimensionVector::from_entries(Kind::orthogonal,
                                               {1, 1, 1, 1, 1});
    ParabolicData pd5 = parabolic_data(borel);
    CHECK(block_degree(unit(Kind::orthogonal, 5, 2, 0), pd5) == 2);

    auto d = DimensionVector::from_entries(Kind::orthogonal, {2, 2, 2});
    ParabolicData pd = parabolic_data(d);
    CHECK(block_degree(unit(Kind::orthogonal, 6, 2, -1), pd) == 1);
    CHECK(block_degree(LieElement(Kind::orthogonal, 6), pd) == 0);
    LieElement mixed = unit(Kind::orthogonal, 6, 2, 1) +
                       unit(Kind::orthogonal, 6, 2, -2);
    CHECK_FALSE(block_degree(mixed, pd).has_value());

    LieElement levi = unit(Kind::orthogonal, 6, 3, 2) -
                      unit(Kind::orthogonal, 6, -2, -3);
    CHECK(block_degree(levi, pd) == 0);
    CHECK_FALSE(in_u(levi, pd));
    CHECK(in_u(LieElement(Kind::orthogonal, 6), pd));

    // positive-degree basis elements number dim_u; degrees pair up under
    // the (i,j) -> (-i,-j) symmetry
    std::map<int, int> by_degree;
    for (const LieElement& e : chevalley_basis(Kind::orthogonal, 6))
        ++by_degree[*block_degree(e, pd)];
    int positive = 0;
    for (auto [deg, count] : by_degree) {
        CHECK(count == by_degree[-deg]);
        if (deg > 0) positive += count;
    }
    CHECK(positive == pd.dim_u());
}

TEST_CASE("label negation carries basis elements to basis elements") {
    for (Kind kind : {Kind::orthogonal, Kind::symplectic}) {
        const int N = kind == Kind::orthogonal ? 7 : 6;
        auto basis = chevalley_basis(kind, N);
        for (const LieElement& e : basis) {
            LieElement neg(kind, N);
            for (const auto& [ij, c] : e.entries())
                neg.add_entry(-ij.first, -ij.second, c);
            bool hit = false;
            for (const LieElement& b : basis)
                if (neg == b || neg == b * Int(-1)) hit = true;
            CHECK(hit);
        }
    }
}

TEST_CASE("exact_rank on worked examples") {
    CHECK(exact_rank({}) == 0);
    CHECK(exact_rank({{Int(0), Int(0)}, {Int(0), Int(0)}}) == 0);
    IntMat basis_rows;
    for (const LieElement& e : chevalley_basis(Kind::orthogonal, 5))
        basis_rows.push_back(flatten(e));
    CHECK(exact_rank(basis_rows) == 10);
    LieElement x = unit(Kind::orthogonal, 5, 2, 1) -
                   unit(Kind::orthogonal, 5, -1, -2);
    CHECK(exact_rank({flatten(x), flatten(x * Int(2))}) == 1);
    // needs pivoting in the second column
    CHECK(exact_rank({{Int(0), Int(1)}, {Int(1), Int(0)}, {Int(1), Int(1)}}) ==
          2);
}
