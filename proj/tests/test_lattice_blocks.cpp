#include "doctest.h"
#include "geograph/blocks.hpp"
#include "geograph/errors.hpp"

using namespace geograph;

TEST_CASE("minus_e8 is the even unimodular E8 form, negated") {
    IntersectionLattice l = minus_e8();
    CHECK(l.rank() == 8);
    CHECK(l.symmetric());
    CHECK(l.determinant() == 1);
    CHECK(l.unimodular());
    int edges = 0;
    for (std::size_t i = 0; i < 8; ++i) {
        CHECK(l.at(i, i) == -2);
        for (std::size_t j = i + 1; j < 8; ++j) {
            if (l.at(i, j) != 0) {
                CHECK(l.at(i, j) == -1);
                ++edges;
            }
        }
    }
    CHECK(edges == 7);
}

TEST_CASE("rank2 and diagonal blocks have the expected determinants") {
    CHECK(rank2_block(0).determinant() == -1);
    CHECK(rank2_block(-7).determinant() == -1);
    CHECK(diag_lattice({Int(2), Int(-3), Int(5)}).determinant() == -30);
    IntersectionLattice sum = rank2_block(0);
    sum.append(diag_lattice({Int(4)}));
    CHECK(sum.rank() == 3);
    CHECK(sum.determinant() == -4);
}

TEST_CASE("determinant detects singular forms") {
    IntersectionLattice l(3, {Int(1), Int(2), Int(3),
                              Int(2), Int(4), Int(6),
                              Int(0), Int(1), Int(5)});
    CHECK(l.determinant() == 0);
    CHECK_FALSE(l.unimodular());
}

TEST_CASE("pairing rejects wrong ranks") {
    IntersectionLattice l = minus_e8();
    CHECK_THROWS_AS(l.pair(LineClass::zero(5), LineClass::zero(8)),
                    DimensionMismatch);
    CHECK_THROWS_AS(l.pairings(LineClass::zero(9)), DimensionMismatch);
}

TEST_CASE("catalog: Q and Q*") {
    FourManifoldData q = building_block("Q");
    CHECK(q.lattice->rank() == 8);
    CHECK(q.lattice->unimodular());
    CHECK(q.c1sq == -2);
    CHECK(q.c2 == 2);
    CHECK(q.consistent());

    FourManifoldData qs = building_block("Q*");
    CHECK(qs.lattice->rank() == 9);
    CHECK(qs.lattice->unimodular());
    CHECK(qs.c1sq == -3);
    CHECK(qs.c2 == 3);
    CHECK(qs.consistent());
    // c1 = -(e_1 + e_2 + e_3) really has square -3 in this basis.
    CHECK(qs.lattice->pair(*qs.c1, *qs.c1) == -3);
}

TEST_CASE("catalog: P and S") {
    FourManifoldData p = building_block("P");
    CHECK(p.lattice->rank() == 17);
    CHECK(p.lattice->unimodular());
    CHECK(p.c1sq == -7);
    CHECK(p.c2 == 19);
    CHECK(p.consistent());

    FourManifoldData s = building_block("S");
    CHECK_FALSE(s.lattice.has_value());
    CHECK_FALSE(s.c1.has_value());
    CHECK(s.c1sq == 1);
    CHECK(s.c2 == 23);
    CHECK(s.consistent());
    CHECK_THROWS_AS(s.c1N_pair(LineClass::zero(1)), AbstractManifold);
}

TEST_CASE("catalog: E(n) for small n") {
    for (int n = 1; n <= 5; ++n) {
        FourManifoldData e = building_block("E(" + std::to_string(n) + ")");
        CHECK(e.lattice->rank() == static_cast<std::size_t>(12 * n - 2));
        CHECK(e.lattice->symmetric());
        CHECK(e.lattice->unimodular());
        CHECK(e.c1sq == 0);
        CHECK(e.c2 == 12 * n);
        CHECK(e.consistent());
    }
    CHECK(building_block("E(3)").lattice->rank() == 34);
    CHECK_THROWS_AS(elliptic_surface(0), Error);
}

TEST_CASE("catalog: X(n) for small n") {
    for (int n = 1; n <= 3; ++n) {
        FourManifoldData x = building_block("X(" + std::to_string(n) + ")");
        CHECK(x.lattice->rank() == static_cast<std::size_t>(8 * n));
        CHECK(x.lattice->unimodular());
        CHECK_FALSE(x.c1.has_value());
        REQUIRE(x.c1_pairings.has_value());
        for (const Int& v : *x.c1_pairings) CHECK(v == 0);
        CHECK(x.c1sq == -3);
        CHECK(x.c2 == 3 + 12 * n);
        CHECK(x.consistent());
    }
    FourManifoldData slim = xn_characteristics(40);
    CHECK(slim.c1sq == -3);
    CHECK(slim.c2 == 483);
    CHECK_FALSE(slim.lattice.has_value());
}

TEST_CASE("unknown names are rejected") {
    CHECK_THROWS_AS(building_block("nope"), UnknownBlock);
    CHECK_THROWS_AS(building_block("E(0)"), UnknownBlock);
    CHECK_THROWS_AS(building_block("X(-2)"), UnknownBlock);
    CHECK_THROWS_AS(building_block("E()"), UnknownBlock);
    CHECK_THROWS_AS(building_block("E(two)"), UnknownBlock);
}

TEST_CASE("bundle_on_Xn agrees with the full-lattice computation") {
    for (int n = 1; n <= 12; ++n) {
        auto [c1sq_e, c1n_c1e] = bundle_on_Xn(n);
        // blockwise result vs the dense n(-E8) lattice
        FourManifoldData x = building_block("X(" + std::to_string(n) + ")");
        LineClass cls = xn_bundle_class(n);
        CHECK(c1sq_e == x.lattice->pair(cls, cls));
        CHECK(c1n_c1e == x.c1N_pair(cls));
        // and vs the closed form
        CHECK(c1sq_e == -8 * (n - 1) - 12);
        CHECK(c1n_c1e == 0);
    }
}

TEST_CASE("bundle_on_Xn works far beyond dense-lattice sizes") {
    Int n("100000000000000000000");  // 10^20
    auto [c1sq_e, c1n_c1e] = bundle_on_Xn(n);
    CHECK(c1sq_e == -8 * (n - 1) - 12);
    CHECK(c1n_c1e == 0);
}
