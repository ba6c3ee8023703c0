#pragma once

#include <array>
#include <string>
#include <vector>

#include "geograph/errors.hpp"
#include "geograph/numeric.hpp"

namespace geograph {

// The Chern numbers (c4, c1c3, c2^2, c1^2c2, c1^4) of a closed almost
// complex 8-manifold.
struct ChernQuintuple {
    Int c4;
    Int c1c3;
    Int c2sq;
    Int c1sq_c2;
    Int c1_4;

    friend bool operator==(const ChernQuintuple&, const ChernQuintuple&) = default;
};

// Equivalent integer coordinates. The change of variables is
//   a = c4
//   4m = c1c3 - 2 c4
//   720 j = -c4 + c1c3 + 3 c2^2 + 4 c1^2c2 - c1^4
//   12 k = 2 c1^4 + c1^2c2
//   b = c1^4
// and it lands on integers exactly when the quintuple is admissible.  Every
// vector in the image satisfies a + m = 0 (mod 3).
struct ParamVector {
    Int a;
    Int m;
    Int j;
    Int k;
    Int b;

    friend bool operator==(const ParamVector&, const ParamVector&) = default;
};

// One congruence: its id, modulus, and the least nonnegative residue of the
// left-hand side (so 0 means satisfied).
struct CongruenceResidue {
    std::string relation;
    Int modulus;
    Int residue;
};

struct AdmissibilityReport {
    bool admissible = false;
    std::array<CongruenceResidue, 3> residues;  // mod720, mod12, mod4
    std::vector<CongruenceResidue> violations;  // the nonzero ones
};

struct NotAdmissible : Error {
    explicit NotAdmissible(AdmissibilityReport r);
    AdmissibilityReport report;
};

// Checks the three integrality congruences satisfied by the Chern numbers of
// every closed almost complex 8-manifold:
//   -c4 + c1c3 + 3 c2^2 + 4 c1^2c2 - c1^4 = 0  (mod 720)
//    2 c1^4 + c1^2c2                      = 0  (mod 12)
//   -2 c4 + c1c3                          = 0  (mod 4)
AdmissibilityReport is_admissible(const ChernQuintuple& q);

// Throws NotAdmissible (carrying the report) when a division is inexact.
ParamVector chern_to_params(const ChernQuintuple& q);

// Exact inverse of chern_to_params; throws Mod3Violation when
// a + m != 0 (mod 3), since then 3 does not divide the c2^2 numerator.
ChernQuintuple params_to_chern(const ParamVector& p);

}  // namespace geograph
