#pragma once

#include <span>
#include <utility>
#include <vector>

#include "geograph/params.hpp"
#include "geograph/sphere_bundle.hpp"

namespace geograph {

// Movement of one blow-up in the (a, 4m, 12k, b) coordinates; j never moves.
struct ParamDelta {
    Int a;
    Int m4;
    Int k12;
    Int b;

    ParamDelta& operator+=(const ParamDelta& o);
    ParamDelta operator*(const Int& scale) const;

    friend bool operator==(const ParamDelta&, const ParamDelta&) = default;
};

// Blowing up a point, an embedded curve, or an embedded fourfold moves the
// Chern numbers by an amount depending only on the center's profile:
//   point:        (3, 0, -180, -81)
//   curve (g,d):  (4(1-g), -4(1-g), -144(1-g) - 36d, -64(1-g) - 16d)
//   fourfold:     (c2[X],
//                  c1^2[X] - 3 c2[X],
//                  -13 c1^2[X] - c2[X] - 18 <c1(X)c1(nu)> - 6 <c1^2(nu)>,
//                  -6 c1^2[X] - 8 <c1(X)c1(nu)> - 3 <c1^2(nu)> + <c2(nu)>)
ParamDelta blowup_delta(const SubmanifoldProfile& profile);

// One blow-up on a parameter vector.  Throws DivisibilityViolation when the
// 4m or 12k movement is not divisible, i.e. when the profile cannot arise
// as an almost complex center.
ParamVector apply_blowup(const ParamVector& p, const SubmanifoldProfile& profile);

// Fold of apply_blowup over multiplicities.  Deltas are state-independent,
// so this is the integer-linear combination of the columns; entries with a
// zero count are skipped entirely.
ParamVector apply_sequence(
    const ParamVector& p,
    std::span<const std::pair<SubmanifoldProfile, Int>> counts);

}  // namespace geograph
