#pragma once

#include <array>

#include "geograph/numeric.hpp"

namespace geograph {

using Mat4 = std::array<std::array<Int, 4>, 4>;
using IVec4 = std::array<Int, 4>;
using QVec4 = std::array<Rat, 4>;

// Exact solver for a fixed integer 4x4 system: the adjugate is computed once
// (by cofactor expansion), each solve is then adjugate * rhs / det.
// Construction throws SingularSystem when det == 0.
class ExactSolver4 {
  public:
    explicit ExactSolver4(const Mat4& a);

    QVec4 solve(const IVec4& rhs) const;
    const Int& determinant() const { return det_; }

  private:
    Int det_;
    Mat4 adjugate_;
};

QVec4 solve4(const Mat4& a, const IVec4& rhs);

}  // namespace geograph
