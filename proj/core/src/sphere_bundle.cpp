#include "geograph/sphere_bundle.hpp"

#include <utility>

#include "geograph/errors.hpp"

namespace geograph {

SixChern projectivize_chern(const FourManifoldData& N, const Int& c1sqE,
                            const Int& /*c1N_c1E*/) {
    SixChern s;
    s.c1_3 = 6 * N.c1sq + 2 * c1sqE;
    s.c1c2 = 2 * (N.c1sq + N.c2);
    s.c3 = 2 * N.c2;
    return s;
}

ChernQuintuple product_with_surface(const SixChern& s, const Int& genus) {
    Int t = 2 - 2 * genus;  // Euler number of the surface factor
    ChernQuintuple q;
    q.c4 = t * s.c3;
    q.c1c3 = t * (s.c1c2 + s.c3);
    q.c2sq = 2 * t * s.c1c2;
    q.c1sq_c2 = t * (s.c1_3 + 2 * s.c1c2);
    q.c1_4 = 4 * t * s.c1_3;
    return q;
}

Int lift_square(const Int& curve_sq, const Int& c1E_on_curve) {
    return curve_sq + c1E_on_curve;
}

SubmanifoldProfile SubmanifoldProfile::point() {
    return SubmanifoldProfile{};
}

SubmanifoldProfile SubmanifoldProfile::curve(Int genus, Int nu_deg) {
    SubmanifoldProfile p;
    p.kind = Kind::curve;
    p.genus = std::move(genus);
    p.nu_deg = std::move(nu_deg);
    return p;
}

SubmanifoldProfile SubmanifoldProfile::fourfold(Int c2X, Int c1sqX,
                                                Int c1X_c1nu, Int c1nu_sq,
                                                Int c2nu) {
    SubmanifoldProfile p;
    p.kind = Kind::fourfold;
    p.c2X = std::move(c2X);
    p.c1sqX = std::move(c1sqX);
    p.c1X_c1nu = std::move(c1X_c1nu);
    p.c1nu_sq = std::move(c1nu_sq);
    p.c2nu = std::move(c2nu);
    return p;
}

SubmanifoldProfile section_profile(const FourManifoldData& N, const Int& c1sqE,
                                   const Int& c1N_c1E, int sign) {
    return SubmanifoldProfile::fourfold(N.c2, N.c1sq, sign * c1N_c1E, c1sqE,
                                        Int(0));
}

SphereBundleRing::SphereBundleRing(const IntersectionLattice& lattice,
                                   LineClass c1E)
    : lattice_(lattice), c1E_(std::move(c1E)) {
    if (c1E_.coeffs.size() != lattice_.rank()) {
        throw DimensionMismatch("c1(E) rank does not match the lattice");
    }
}

SphereBundleRing::Element SphereBundleRing::zero() const {
    Element e;
    e.s0 = 0;
    e.s2.assign(lattice_.rank(), Int(0));
    e.s4 = 0;
    e.x0 = 0;
    e.x2.assign(lattice_.rank(), Int(0));
    e.x4 = 0;
    return e;
}

SphereBundleRing::Element SphereBundleRing::one() const {
    Element e = zero();
    e.s0 = 1;
    return e;
}

SphereBundleRing::Element SphereBundleRing::pullback2(const LineClass& c) const {
    if (c.coeffs.size() != lattice_.rank()) {
        throw DimensionMismatch("class rank does not match the lattice");
    }
    Element e = zero();
    e.s2 = c.coeffs;
    return e;
}

SphereBundleRing::Element SphereBundleRing::pullback4(const Int& value) const {
    Element e = zero();
    e.s4 = value;
    return e;
}

SphereBundleRing::Element SphereBundleRing::xi() const {
    Element e = zero();
    e.x0 = 1;
    return e;
}

SphereBundleRing::Element SphereBundleRing::add(const Element& a,
                                                const Element& b) const {
    Element e = a;
    e.s0 += b.s0;
    e.s4 += b.s4;
    e.x0 += b.x0;
    e.x4 += b.x4;
    for (std::size_t i = 0; i < e.s2.size(); ++i) {
        e.s2[i] += b.s2[i];
        e.x2[i] += b.x2[i];
    }
    return e;
}

SphereBundleRing::Element SphereBundleRing::mul(const Element& a,
                                                const Element& b) const {
    LineClass a2{a.s2}, b2{b.s2}, ax2{a.x2}, bx2{b.x2};
    Element e = zero();
    e.s0 = a.s0 * b.s0;
    for (std::size_t i = 0; i < e.s2.size(); ++i) {
        e.s2[i] = a.s0 * b.s2[i] + b.s0 * a.s2[i];
    }
    e.s4 = a.s0 * b.s4 + b.s0 * a.s4 + lattice_.pair(a2, b2);
    e.x0 = a.s0 * b.x0 + b.s0 * a.x0;
    // xi^2 = -c1(E) xi folds the (a.x0 b.x0) xi^2 term back into xi * H^2
    // and the degree-4 x-part of (a.x * b.x) into the top slot.
    for (std::size_t i = 0; i < e.x2.size(); ++i) {
        e.x2[i] = a.s0 * b.x2[i] + b.s0 * a.x2[i] + a.s2[i] * b.x0 +
                  b.s2[i] * a.x0 - a.x0 * b.x0 * c1E_.coeffs[i];
    }
    LineClass cross = LineClass::zero(lattice_.rank());
    for (std::size_t i = 0; i < cross.coeffs.size(); ++i) {
        cross.coeffs[i] = a.x0 * b.x2[i] + b.x0 * a.x2[i];
    }
    e.x4 = a.s0 * b.x4 + b.s0 * a.x4 + a.s4 * b.x0 + b.s4 * a.x0 +
           lattice_.pair(a2, bx2) + lattice_.pair(b2, ax2) -
           lattice_.pair(c1E_, cross);
    return e;
}

SixChern projectivize_chern_oracle(const FourManifoldData& N,
                                   const LineClass& c1E) {
    if (!N.lattice || !N.c1) {
        throw AbstractManifold(N.name + ": oracle needs an explicit lattice and c1");
    }
    SphereBundleRing ring(*N.lattice, c1E);
    // c(S) = pullback c(N) * (1 + c1(E) + 2 xi).
    SphereBundleRing::Element c1S =
        ring.add(ring.pullback2(*N.c1), ring.pullback2(c1E));
    c1S.x0 = 2;
    SphereBundleRing::Element c2S =
        ring.pullback4(N.lattice->pair(*N.c1, c1E) + N.c2);
    for (std::size_t i = 0; i < c2S.x2.size(); ++i) {
        c2S.x2[i] = 2 * N.c1->coeffs[i];
    }
    SphereBundleRing::Element c3S = ring.zero();
    c3S.x4 = 2 * N.c2;
    SixChern out;
    out.c1_3 = ring.top(ring.mul(ring.mul(c1S, c1S), c1S));
    out.c1c2 = ring.top(ring.mul(c1S, c2S));
    out.c3 = ring.top(c3S);
    return out;
}

}  // namespace geograph
