#pragma once

#include "geograph/blocks.hpp"
#include "geograph/params.hpp"

namespace geograph {

// Chern numbers (c1^3, c1c2, c3) of a closed almost complex 6-manifold.
struct SixChern {
    Int c1_3;
    Int c1c2;
    Int c3;

    friend bool operator==(const SixChern&, const SixChern&) = default;
};

// Chern numbers of S = P(E + C), the sphere bundle of a line bundle E over
// a 4-manifold N.  The mixed pairing <c1(N) c1(E)> cancels from all three
// totals:
//   c1^3 = 6 c1^2[N] + 2 <c1^2(E)>,  c1c2 = 2 (c1^2[N] + c2[N]),  c3 = 2 c2[N].
SixChern projectivize_chern(const FourManifoldData& N, const Int& c1sqE,
                            const Int& c1N_c1E);

// The same three numbers computed by expanding the Chern classes in
// H*(N)[xi] / (xi^2 + c1(E) xi) and evaluating on the fundamental class.
// Needs an explicit lattice and c1; throws AbstractManifold otherwise.
SixChern projectivize_chern_oracle(const FourManifoldData& N, const LineClass& c1E);

// Chern numbers of the product of a 6-manifold with the genus-g surface.
ChernQuintuple product_with_surface(const SixChern& s, const Int& genus);

// Self-intersection of the graph lift of a curve F in N along a section of
// S -> N: <F^2>_N + <c1(E), F>.
Int lift_square(const Int& curve_sq, const Int& c1E_on_curve);

// Everything the dimension-8 blow-up formulas need to know about a center.
struct SubmanifoldProfile {
    enum class Kind { point, curve, fourfold };

    Kind kind = Kind::point;
    // Curve data: genus and the degree of c1 of its normal bundle.
    Int genus;
    Int nu_deg;
    // Fourfold data: characteristic numbers of the center X and its normal
    // bundle nu.
    Int c2X;
    Int c1sqX;
    Int c1X_c1nu;
    Int c1nu_sq;
    Int c2nu;

    static SubmanifoldProfile point();
    static SubmanifoldProfile curve(Int genus, Int nu_deg);
    static SubmanifoldProfile fourfold(Int c2X, Int c1sqX, Int c1X_c1nu,
                                       Int c1nu_sq, Int c2nu);

    friend bool operator==(const SubmanifoldProfile&, const SubmanifoldProfile&) = default;
};

// Profile of the section N x {pt} inside S x surface cut out along E with
// the given orientation sign (+1 or -1): its normal bundle restricts c1(E)
// up to sign, and the section is rigid in the surface direction.
SubmanifoldProfile section_profile(const FourManifoldData& N, const Int& c1sqE,
                                   const Int& c1N_c1E, int sign);

// H*(S) for the sphere bundle S = P(E + C) over N, as a module over H*(N)
// with basis {1, xi} and the relation xi^2 = -c1(E) xi.  Degree-4 parts are
// stored already evaluated against [N]; the xi * H^4 slot is the top degree
// of S.
class SphereBundleRing {
  public:
    struct Element {
        Int s0;                // H^0
        std::vector<Int> s2;   // H^2 class of N
        Int s4;                // <H^4 part, [N]>
        Int x0;                // xi
        std::vector<Int> x2;   // xi * H^2
        Int x4;                // <xi * H^4 part, [S]>
    };

    SphereBundleRing(const IntersectionLattice& lattice, LineClass c1E);

    Element zero() const;
    Element one() const;
    // Pullback of an H^2 class of N.
    Element pullback2(const LineClass& c) const;
    // Pullback of an H^4 class with the given evaluation against [N].
    Element pullback4(const Int& value) const;
    Element xi() const;

    Element add(const Element& a, const Element& b) const;
    Element mul(const Element& a, const Element& b) const;

    const Int& top(const Element& e) const { return e.x4; }

  private:
    IntersectionLattice lattice_;
    LineClass c1E_;
};

}  // namespace geograph
