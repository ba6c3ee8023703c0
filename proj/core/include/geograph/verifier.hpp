#pragma once

#include <string>
#include <vector>

#include "geograph/planner.hpp"

namespace geograph {

// One replay step: which center, how often, and the parameters after it.
struct ReplayStep {
    std::string center;
    Int count;
    ParamVector after;
};

struct VerificationReport {
    bool verified = false;
    ParamVector recomputed_base;
    ParamVector achieved;
    ParamVector target;
    std::vector<ReplayStep> steps;
    std::string failure;  // empty when verified
    std::vector<std::string> notes;
};

// Independent forward replay of a plan: rebuilds the branch base from the
// block catalog (ignoring the plan's own base field), rebuilds every center
// profile, folds the blow-ups, and compares the result against the target
// exactly.  Structural violations (negative counts, branch/n mismatches,
// lambda < 1, ...) throw MalformedPlan; a replay that lands elsewhere, or
// one whose steps are not integral, comes back with verified == false.
VerificationReport verify_plan(const Plan& plan);

// Inclusive ranges over (a, m, k, b) crossed with a list of j values.
struct BoxRanges {
    Int a_lo, a_hi;
    Int m_lo, m_hi;
    Int k_lo, k_hi;
    Int b_lo, b_hi;
    std::vector<Int> j_values;
};

struct BoxSummary {
    unsigned long long realized = 0;
    unsigned long long failed = 0;
    unsigned long long inadmissible_skipped = 0;  // a + m != 0 (mod 3)
    Int max_total_blowups = 0;  // largest x + y + z + u + v over all plans
    Int max_v = 0;
    Int max_lambda = 0;
    std::vector<std::string> failures;  // capped sample of failure messages
};

// realize + verify_plan for every parameter vector in the box, optionally
// on several threads.  Vectors with a + m != 0 (mod 3) are counted as
// skipped; every other vector must realize and verify to count as realized.
BoxSummary enumerate_box(const BoxRanges& box, const PlannerOptions& opts = {},
                         unsigned threads = 1);

}  // namespace geograph
