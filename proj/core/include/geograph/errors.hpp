#pragma once

#include <stdexcept>

namespace geograph {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parameter vector with a + m not divisible by 3: no Chern quintuple maps
// to it.
struct Mod3Violation : Error {
    using Error::Error;
};

// Class/lattice rank disagreement in an intersection pairing.
struct DimensionMismatch : Error {
    using Error::Error;
};

// Catalog lookup of a name that is not a known building block.
struct UnknownBlock : Error {
    using Error::Error;
};

// Cohomology-ring computation requested on a block whose lattice or first
// Chern class is not explicit.
struct AbstractManifold : Error {
    using Error::Error;
};

// A blow-up step whose parameter movement is not integral.
struct DivisibilityViolation : Error {
    using Error::Error;
};

// 4x4 system with zero determinant.
struct SingularSystem : Error {
    using Error::Error;
};

// No certificate found within the configured lambda/v budget.
struct SearchExhausted : Error {
    using Error::Error;
};

// Structurally invalid plan (bad JSON, negative counts, branch mismatch...).
struct MalformedPlan : Error {
    using Error::Error;
};

}  // namespace geograph
