#include <random>

#include "doctest.h"
#include "geograph/planner.hpp"
#include "geograph/verifier.hpp"

using namespace geograph;

TEST_CASE("branch dispatch") {
    CHECK(branch_for(3) == Branch::j_positive);
    CHECK(branch_for(0) == Branch::j_zero);
    CHECK(branch_for(-2) == Branch::j_negative);
    CHECK(branch_from_name("j_zero") == Branch::j_zero);
    CHECK_THROWS_AS(branch_from_name("sideways"), MalformedPlan);
}

TEST_CASE("base parameters for positive j") {
    for (int n = 1; n <= 3; ++n) {
        BaseContext ctx = base_setup(n);
        CHECK(ctx.branch == Branch::j_positive);
        CHECK(ctx.n == n);
        CHECK(ctx.genus == 0);
        CHECK(ctx.c1sqE == -8 * (n - 1) - 12);
        CHECK(ctx.c1N_c1E == 0);
        CHECK(ctx.base ==
              ParamVector{48 * n + 12, -3, n, -16 * n - 39, -128 * n - 208});
    }
}

TEST_CASE("base parameters for j = 0") {
    BaseContext ctx = base_setup(0);
    CHECK(ctx.branch == Branch::j_zero);
    CHECK(ctx.n == 0);
    CHECK(ctx.genus == 0);
    CHECK(ctx.N.name == "Q*");
    CHECK(ctx.c1sqE == -4);
    CHECK(ctx.c1N_c1E == -2);
    CHECK(ctx.base == ParamVector{12, -3, 0, -39, -208});
    // the closed-form counts vanish exactly at the recomputed base
    QVec4 w = closed_form_counts_v0(Branch::j_zero, 0, ctx.base);
    for (int i = 0; i < 4; ++i) CHECK(w[i] == 0);
}

TEST_CASE("base parameters for negative j mirror the positive ones") {
    for (int n = 1; n <= 2; ++n) {
        BaseContext pos = base_setup(n);
        BaseContext neg = base_setup(-n);
        CHECK(neg.branch == Branch::j_negative);
        CHECK(neg.genus == 2);
        CHECK(neg.base == ParamVector{-pos.base.a, -pos.base.m, -pos.base.j,
                                      -pos.base.k, -pos.base.b});
        QVec4 w = closed_form_counts_v0(Branch::j_negative, n, neg.base);
        for (int i = 0; i < 4; ++i) CHECK(w[i] == 0);
    }
}

TEST_CASE("fixed center columns") {
    BaseContext ctx = base_setup(1);
    CHECK(blowup_delta(ctx.col_x) == ParamDelta{3, 0, -180, -81});
    CHECK(blowup_delta(ctx.col_y) == ParamDelta{4, -4, -108, -48});
    CHECK(blowup_delta(ctx.col_z) == ParamDelta{-4, 4, 144, 64});
    CHECK(blowup_delta(ctx.col_u) == ParamDelta{15, -48, 96, 54});

    BaseContext j0 = base_setup(0);
    CHECK(blowup_delta(j0.col_u) == ParamDelta{3, -12, 24, 14});
}

TEST_CASE("closed forms reproduce the exact v = 0 solution") {
    std::mt19937_64 rng(555);
    std::uniform_int_distribution<int> val(-40, 40);
    for (int j = -3; j <= 3; ++j) {
        BaseContext ctx = base_setup(j);
        for (int i = 0; i < 40; ++i) {
            ParamVector t{val(rng), val(rng), j, val(rng), val(rng)};
            t.m -= residue(t.a + t.m, 3);
            QVec4 solved = solve_v0(ctx, t);
            QVec4 closed = closed_form_counts_v0(ctx.branch, ctx.n, t);
            for (int c = 0; c < 4; ++c) CHECK(solved[c] == closed[c]);
        }
    }
}

TEST_CASE("worked search example: base + residual needing v = 2") {
    ParamVector target{63, -6, 1, -70, -417};
    BaseContext ctx = base_setup(1);
    SolveResult res = solve_counts(ctx, target);
    CHECK(res.lambda == 1);
    CHECK(res.counts == Counts{45, 12, 61, 2, 2});

    Plan plan = realize(target);
    CHECK(plan.lambda == 1);
    CHECK(plan.counts == Counts{45, 12, 61, 2, 2});
    CHECK(verify_plan(plan).verified);
}

TEST_CASE("base plus one point realizes with a single blow-up") {
    Plan plan = realize(ParamVector{63, -3, 1, -70, -417});
    CHECK(plan.counts == Counts{1, 0, 0, 0, 0});
    CHECK(verify_plan(plan).verified);

    Plan neg = realize(ParamVector{-57, 3, -1, 40, 255});
    CHECK(neg.counts == Counts{1, 0, 0, 0, 0});
    CHECK(verify_plan(neg).verified);
}

TEST_CASE("the zero quintuple is realized on the j = 0 branch") {
    Plan plan = realize(ParamVector{0, 0, 0, 0, 0});
    CHECK(plan.branch == Branch::j_zero);
    CHECK(plan.counts == Counts{0, 1, 4, 0, 0});
    CHECK(plan.errata_applied.size() == 1);
    CHECK(verify_plan(plan).verified);
}

TEST_CASE("chern-number entry point") {
    Plan plan = realize(ChernQuintuple{60, 108, 96, 12, -336});
    CHECK(plan.counts == Counts{0, 0, 0, 0, 0});
    CHECK(verify_plan(plan).verified);
    CHECK_THROWS_AS(realize(ChernQuintuple{1, 0, 0, 0, 0}), NotAdmissible);
}

TEST_CASE("targets built from higher-degree hypersurface columns round trip") {
    BaseContext ctx = base_setup(1);
    HypersurfaceConfig cfg = ctx.hypersurface_config(2, 1, BetaConfig{});
    ParamVector col = blowup_column(cfg);
    CHECK(col == ParamVector{14, -14, 0, 14, 100});
    ParamVector target = ctx.base;
    target.a += 3 * col.a;
    target.m += 3 * col.m;
    target.k += 3 * col.k;
    target.b += 3 * col.b;
    Plan plan = realize(target);
    CHECK(verify_plan(plan).verified);
}

TEST_CASE("search failures and bad targets") {
    CHECK_THROWS_AS(realize(ParamVector{1, 1, 0, 0, 0}), Mod3Violation);

    BaseContext ctx = base_setup(1);
    CHECK_THROWS_AS(solve_counts(ctx, ParamVector{0, 0, 2, 0, 0}), Error);

    PlannerOptions tight;
    tight.budget.lambda_max = 1;
    tight.budget.v_max = 0;
    CHECK_THROWS_AS(realize(ParamVector{63, -6, 1, -70, -417}, tight),
                    SearchExhausted);
}

TEST_CASE("search prefers the smallest lambda, then the smallest v") {
    // reachable at v = 0, so the planner must not spend any v
    BaseContext ctx = base_setup(2);
    ParamVector target = ctx.base;
    target.a += 4 * 3;
    target.k += 4 * (-15);
    target.b += 4 * (-81);
    SolveResult res = solve_counts(ctx, target);
    CHECK(res.lambda == 1);
    CHECK(res.counts == Counts{4, 0, 0, 0, 0});
}

TEST_CASE("system columns bundle all five deltas") {
    BaseContext ctx = base_setup(1);
    HypersurfaceConfig cfg = ctx.hypersurface_config(1, 1, BetaConfig{});
    SystemColumns cols = system_columns(ctx, cfg);
    CHECK(cols.x == blowup_delta(ctx.col_x));
    CHECK(cols.v == ParamDelta{17, -56, 120, 64});
}
