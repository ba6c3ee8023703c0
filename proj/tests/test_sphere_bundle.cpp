#include <random>

#include "doctest.h"
#include "geograph/sphere_bundle.hpp"

using namespace geograph;

namespace {

// Random explicit block: symmetric Gram matrix, explicit c1, and a c2 chosen
// so that c1sq + c2 = 0 (mod 12).
FourManifoldData random_block(std::mt19937_64& rng, std::size_t max_rank) {
    std::uniform_int_distribution<int> rank_dist(1, static_cast<int>(max_rank));
    std::uniform_int_distribution<int> entry(-4, 4);
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<int> shift(-3, 3);
    std::size_t rank = static_cast<std::size_t>(rank_dist(rng));
    IntersectionLattice l(rank, std::vector<Int>(rank * rank, Int(0)));
    for (std::size_t i = 0; i < rank; ++i) {
        for (std::size_t j = i; j < rank; ++j) {
            l.set(i, j, Int(entry(rng)));
        }
    }
    LineClass c1 = LineClass::zero(rank);
    for (std::size_t i = 0; i < rank; ++i) c1.coeffs[i] = coeff(rng);
    FourManifoldData d;
    d.name = "random";
    d.c1sq = l.pair(c1, c1);
    d.c2 = -d.c1sq + 12 * Int(shift(rng));
    d.c1_pairings = l.pairings(c1);
    d.lattice = std::move(l);
    d.c1 = std::move(c1);
    return d;
}

LineClass random_class(std::mt19937_64& rng, std::size_t rank) {
    std::uniform_int_distribution<int> coeff(-3, 3);
    LineClass c = LineClass::zero(rank);
    for (std::size_t i = 0; i < rank; ++i) c.coeffs[i] = coeff(rng);
    return c;
}

}  // namespace

TEST_CASE("sphere bundle over Q* with the -2e_3 twisting") {
    FourManifoldData qs = building_block("Q*");
    LineClass c1E = LineClass::zero(9);
    c1E.add(-2, 8);
    Int c1sqE = qs.lattice->pair(c1E, c1E);
    Int c1N_c1E = qs.c1N_pair(c1E);
    CHECK(c1sqE == -4);
    CHECK(c1N_c1E == -2);
    SixChern closed = projectivize_chern(qs, c1sqE, c1N_c1E);
    CHECK(closed == SixChern{-26, 0, 6});
    CHECK(projectivize_chern_oracle(qs, c1E) == closed);
}

TEST_CASE("sphere bundle over X(1)") {
    FourManifoldData x = building_block("X(1)");
    auto [c1sqE, c1N_c1E] = bundle_on_Xn(1);
    SixChern s = projectivize_chern(x, c1sqE, c1N_c1E);
    CHECK(s == SixChern{-42, 24, 30});
    // c1 of X(n) is abstract in the vanishing-cycle basis.
    CHECK_THROWS_AS(projectivize_chern_oracle(x, xn_bundle_class(1)),
                    AbstractManifold);
}

TEST_CASE("sphere bundles over elliptic surfaces") {
    FourManifoldData e1 = elliptic_surface(1);
    LineClass trivial = LineClass::zero(e1.lattice->rank());
    SixChern s1 = projectivize_chern(e1, 0, 0);
    CHECK(s1 == SixChern{0, 24, 24});
    CHECK(projectivize_chern_oracle(e1, trivial) == s1);

    FourManifoldData e2 = elliptic_surface(2);
    LineClass f = LineClass::basis(e2.lattice->rank(), e2.lattice->rank() - 2);
    Int c1sqE = e2.lattice->pair(f, f);
    CHECK(c1sqE == 0);
    SixChern s2 = projectivize_chern(e2, c1sqE, e2.c1N_pair(f));
    CHECK(s2 == SixChern{0, 48, 48});
    CHECK(projectivize_chern_oracle(e2, f) == s2);
}

TEST_CASE("oracle and closed formulas agree on random data") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 50; ++i) {
        FourManifoldData d = random_block(rng, 8);
        LineClass c1E = random_class(rng, d.lattice->rank());
        Int c1sqE = d.lattice->pair(c1E, c1E);
        Int c1N_c1E = d.c1N_pair(c1E);
        CHECK(projectivize_chern_oracle(d, c1E) ==
              projectivize_chern(d, c1sqE, c1N_c1E));
    }
}

TEST_CASE("oracle rejects mismatched bundle classes") {
    FourManifoldData qs = building_block("Q*");
    CHECK_THROWS_AS(projectivize_chern_oracle(qs, LineClass::zero(4)),
                    DimensionMismatch);
}

TEST_CASE("ring multiplication is commutative and associative on samples") {
    std::mt19937_64 rng(11);
    FourManifoldData d = random_block(rng, 6);
    LineClass c1E = random_class(rng, d.lattice->rank());
    SphereBundleRing ring(*d.lattice, c1E);
    auto random_element = [&]() {
        std::uniform_int_distribution<int> small(-5, 5);
        SphereBundleRing::Element e = ring.zero();
        e.s0 = small(rng);
        e.s4 = small(rng);
        e.x0 = small(rng);
        e.x4 = small(rng);
        for (std::size_t i = 0; i < e.s2.size(); ++i) {
            e.s2[i] = small(rng);
            e.x2[i] = small(rng);
        }
        return e;
    };
    for (int i = 0; i < 30; ++i) {
        SphereBundleRing::Element a = random_element();
        SphereBundleRing::Element b = random_element();
        SphereBundleRing::Element c = random_element();
        SphereBundleRing::Element ab = ring.mul(a, b);
        SphereBundleRing::Element ba = ring.mul(b, a);
        CHECK(ab.s0 == ba.s0);
        CHECK(ab.s2 == ba.s2);
        CHECK(ab.s4 == ba.s4);
        CHECK(ab.x0 == ba.x0);
        CHECK(ab.x2 == ba.x2);
        CHECK(ab.x4 == ba.x4);
        CHECK(ring.top(ring.mul(ab, c)) == ring.top(ring.mul(a, ring.mul(b, c))));
        // xi^2 + c1(E) xi = 0 in the quotient.
        SphereBundleRing::Element rel =
            ring.add(ring.mul(ring.xi(), ring.xi()),
                     ring.mul(ring.pullback2(c1E), ring.xi()));
        CHECK(rel.x4 == 0);
        CHECK(rel.x0 == 0);
        for (const Int& v : rel.x2) CHECK(v == 0);
    }
}

TEST_CASE("products with surfaces") {
    SixChern s{-26, 0, 6};
    CHECK(product_with_surface(s, 0) ==
          ChernQuintuple{12, 12, 0, -52, -208});
    CHECK(product_with_surface(s, 1) == ChernQuintuple{0, 0, 0, 0, 0});
    ChernQuintuple g2 = product_with_surface(s, 2);
    ChernQuintuple g0 = product_with_surface(s, 0);
    CHECK(g2.c4 == -g0.c4);
    CHECK(g2.c1c3 == -g0.c1c3);
    CHECK(g2.c2sq == -g0.c2sq);
    CHECK(g2.c1sq_c2 == -g0.c1sq_c2);
    CHECK(g2.c1_4 == -g0.c1_4);
}

TEST_CASE("section profiles and lifts") {
    CHECK(lift_square(-1, 0) == -1);
    CHECK(lift_square(0, -2) == -2);
    FourManifoldData qs = building_block("Q*");
    SubmanifoldProfile minus = section_profile(qs, -4, -2, -1);
    CHECK(minus == SubmanifoldProfile::fourfold(3, -3, 2, -4, 0));
    SubmanifoldProfile plus = section_profile(qs, -4, -2, +1);
    CHECK(plus == SubmanifoldProfile::fourfold(3, -3, -2, -4, 0));
}
