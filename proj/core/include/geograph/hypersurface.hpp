#pragma once

#include <string>
#include <vector>

#include "geograph/blowup.hpp"

namespace geograph {

// Ambient data for the degree-lambda hypersurface X in the sphere bundle
// S = P(E + C) over N, Poincare dual to lambda (xi + K beta) for a
// symplectic class beta on N.
struct HypersurfaceConfig {
    Int lambda;
    Int K;
    Int c1sqN, c2N;
    Int c1sqE, c1N_c1E;
    Int beta_sq;  // <beta^2, [N]>, positive for a symplectic beta
    Int c1N_beta, c1E_beta;
};

// Characteristic numbers of X and its normal bundle, polynomial in lambda
// and K; lambda = 0 is accepted formally and gives the zero profile.
SubmanifoldProfile hypersurface_profile(const HypersurfaceConfig& cfg);

// blowup_delta of that profile folded to a parameter move (Delta j = 0).
// Throws DivisibilityViolation when the move is not integral.
ParamVector blowup_column(const HypersurfaceConfig& cfg);

// The same column as raw (a, 4m, 12k, b) coefficients.
struct BColumn {
    Int b1, b2, b3, b4;

    friend bool operator==(const BColumn&, const BColumn&) = default;
};

// b2 carries a lambda^2 [beta]^2 term that is sometimes written without its
// K^2 factor; composing blowup_delta with hypersurface_profile pins the
// K^2-scaled form.  The other variant is kept as a diagnostic.
enum class B2BetaVariant { quadratic_only, k_scaled };

// Fully expanded polynomial form of the column.
BColumn expanded_b_coefficients(const HypersurfaceConfig& cfg,
                                B2BetaVariant variant = B2BetaVariant::k_scaled);

// Pins each pairing's coefficient by evaluating both routes on indicator
// configurations, so a disagreement names the exact term.
struct BTermComparison {
    std::string pairing;
    BColumn composed;
    BColumn expanded;
    bool match = false;
};
std::vector<BTermComparison> compare_b_terms(
    const Int& lambda, const Int& K,
    B2BetaVariant variant = B2BetaVariant::k_scaled);

}  // namespace geograph
