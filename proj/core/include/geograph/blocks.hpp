#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "geograph/lattice.hpp"
#include "geograph/numeric.hpp"

namespace geograph {

// Characteristic data of a closed 4-manifold used as a building block.
//
// `lattice` models the part of the intersection form the constructions live
// in (it need not be all of H^2).  `c1` is stored when the first Chern class
// is explicit in that basis; `c1_pairings` whenever its pairings against the
// basis are known, which can happen even for an abstract c1 (e.g. a basis of
// vanishing cycles, which c1 annihilates).
struct FourManifoldData {
    std::string name;
    std::optional<IntersectionLattice> lattice;
    std::optional<LineClass> c1;
    std::optional<std::vector<Int>> c1_pairings;
    Int c1sq;  // <c1^2, [N]>
    Int c2;    // <c2, [N]> = Euler number

    // <c1(N), v>; throws AbstractManifold when the pairings are unknown.
    Int c1N_pair(const LineClass& v) const;

    // Internal coherence: symmetric lattice, c1sq matching the explicit c1,
    // pairings matching the lattice, and 12 | c1sq + c2.
    bool consistent() const;
};

// The elliptic surface E(n) (fiber sum of n copies of E(1)), with the
// explicit form n(-E8) + 2(n-1)[[0,1],[1,-2]] + [[0,1],[1,-n]] and
// c1 = (2 - n) f for f the first basis vector of the last block.
// Throws for n < 1; the dense Gram matrix limits n to moderate size.
FourManifoldData elliptic_surface(int n);

// Catalog lookup by name: "Q", "Q*", "S", "P", "E(n)", "X(n)".
// Throws UnknownBlock for anything else.
FourManifoldData building_block(std::string_view name);

// Catalog names with small family representatives.
std::vector<std::string> catalog_names();

// X(n) invariants without materializing the rank-8n lattice:
// c1sq = c1sq(Q*) and c2 = c2(Q*) + 12n, by fiber-sum additivity (the c1 of
// each elliptic piece is a multiple of the isotropic fiber class).
FourManifoldData xn_characteristics(const Int& n);

// The twisting class on X(n) inside its n(-E8) sublattice of vanishing
// cycles: 2 tau_{i,0} in copies i < n-1 plus tau_0 + tau_1 + tau_2 + tau_7
// in the last copy.
LineClass xn_bundle_class(int n);

// (<c1^2(E)>, <c1(X(n)) c1(E)>) for the line bundle E with that class.
// Evaluated by lattice pairings, block by block, so n may be large.
std::pair<Int, Int> bundle_on_Xn(const Int& n);

}  // namespace geograph
