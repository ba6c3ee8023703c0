#pragma once

#include <array>
#include <string>
#include <vector>

#include "geograph/blowup.hpp"
#include "geograph/hypersurface.hpp"
#include "geograph/linalg.hpp"

namespace geograph {

enum class Branch { j_positive, j_zero, j_negative };

const char* branch_name(Branch b);
Branch branch_from_name(const std::string& name);  // MalformedPlan on junk
Branch branch_for(const Int& j);

// Pairings of the auxiliary symplectic class beta on N.  Only beta_sq > 0
// matters for feasibility; the defaults keep every hypersurface column
// integral.
struct BetaConfig {
    Int beta_sq = 2;
    Int c1N_beta = 0;
    Int c1E_beta = 0;

    friend bool operator==(const BetaConfig&, const BetaConfig&) = default;
};

struct SearchBudget {
    long lambda_max = 40;
    Int v_max = Int(1000000);
};

struct PlannerOptions {
    Int K = 1;
    BetaConfig beta;
    SearchBudget budget;
};

struct Counts {
    Int x, y, z, u, v;

    friend bool operator==(const Counts&, const Counts&) = default;
};

// A realization certificate: starting from the branch base and blowing up
// x points, y exceptional spheres, z genus-2 curves, u copies of the
// negative section and v degree-lambda hypersurfaces reproduces `target`.
// `geometric_disclaimer` records that the analytic largeness thresholds on
// lambda and K are not certified by this planner.
struct Plan {
    Branch branch = Branch::j_zero;
    Int n;  // |j|
    Int lambda;
    Int K;
    BetaConfig beta;
    Counts counts;
    ParamVector base;
    ParamVector target;
    bool geometric_disclaimer = true;
    std::vector<std::string> errata_applied;
};

// Fixed data of one branch: the 4-manifold N, its twisting bundle pairings,
// the genus of the surface factor, the recomputed base parameters, and the
// four fixed blow-up centers.
struct BaseContext {
    Branch branch = Branch::j_zero;
    Int n;
    Int genus;  // 0 for j >= 0, 2 for j < 0 (which flips every Chern number)
    FourManifoldData N;
    Int c1sqE, c1N_c1E;
    ParamVector base;
    SubmanifoldProfile col_x, col_y, col_z, col_u;

    HypersurfaceConfig hypersurface_config(const Int& lambda, const Int& K,
                                           const BetaConfig& beta) const;
};

// Rebuilds the branch data for a given j from the block catalog; nothing is
// looked up from tables of precomputed constants.
BaseContext base_setup(const Int& j);

// The four fixed columns and the hypersurface column of the linear system
// at one lambda, in (a, 4m, 12k, b).
struct SystemColumns {
    ParamDelta x, y, z, u, v;
};
SystemColumns system_columns(const BaseContext& ctx, const HypersurfaceConfig& cfg);

struct SolveResult {
    Counts counts;
    Int lambda;
};

// Smallest-certificate search: lambda ascending, then v ascending; for each
// (lambda, v) the 4x4 system in (x, y, z, u) is solved exactly.
// Throws SearchExhausted when the budget runs out.
SolveResult solve_counts(const BaseContext& ctx, const ParamVector& target,
                         const PlannerOptions& opts = {});

// Rational solution of the 4x4 system alone (v = 0).
QVec4 solve_v0(const BaseContext& ctx, const ParamVector& target);

// Closed-form v = 0 counts as polynomials in n and the target, used as an
// independent cross-check of the linear algebra.
QVec4 closed_form_counts_v0(Branch branch, const Int& n, const ParamVector& target);
QVec4 closed_form_counts_v0(Branch branch, const Int& n,
                            const std::array<Rat, 4>& amkb);

Plan realize(const ParamVector& target, const PlannerOptions& opts = {});
Plan realize(const ChernQuintuple& target, const PlannerOptions& opts = {});

// Same, with a precomputed branch context (ctx.base.j must equal target.j);
// lets bulk callers amortize base_setup.
Plan realize(const BaseContext& ctx, const ParamVector& target,
             const PlannerOptions& opts = {});

}  // namespace geograph
