#include "geograph/planner.hpp"

#include <utility>

#include "geograph/sphere_bundle.hpp"

namespace geograph {

const char* branch_name(Branch b) {
    switch (b) {
        case Branch::j_positive: return "j_positive";
        case Branch::j_zero: return "j_zero";
        case Branch::j_negative: return "j_negative";
    }
    return "?";
}

Branch branch_from_name(const std::string& name) {
    if (name == "j_positive") return Branch::j_positive;
    if (name == "j_zero") return Branch::j_zero;
    if (name == "j_negative") return Branch::j_negative;
    throw MalformedPlan("unknown branch '" + name + "'");
}

Branch branch_for(const Int& j) {
    if (j > 0) return Branch::j_positive;
    if (j < 0) return Branch::j_negative;
    return Branch::j_zero;
}

HypersurfaceConfig BaseContext::hypersurface_config(const Int& lambda,
                                                    const Int& K,
                                                    const BetaConfig& beta) const {
    HypersurfaceConfig cfg;
    cfg.lambda = lambda;
    cfg.K = K;
    cfg.c1sqN = N.c1sq;
    cfg.c2N = N.c2;
    cfg.c1sqE = c1sqE;
    cfg.c1N_c1E = c1N_c1E;
    cfg.beta_sq = beta.beta_sq;
    cfg.c1N_beta = beta.c1N_beta;
    cfg.c1E_beta = beta.c1E_beta;
    return cfg;
}

BaseContext base_setup(const Int& j) {
    BaseContext ctx;
    ctx.branch = branch_for(j);
    ctx.n = abs(j);
    ctx.genus = (ctx.branch == Branch::j_negative) ? 2 : 0;

    Int e_sq, c1E_on_e, f2_sq, c1E_on_f2;
    if (ctx.branch == Branch::j_zero) {
        ctx.N = building_block("Q*");
        const IntersectionLattice& l = *ctx.N.lattice;
        // E = O(-2 e_3) on Q*.
        LineClass c1E = LineClass::zero(l.rank());
        c1E.add(-2, 8);
        ctx.c1sqE = l.pair(c1E, c1E);
        ctx.c1N_c1E = ctx.N.c1N_pair(c1E);
        // The exceptional sphere e_1 and the square-zero genus-2 curve
        // u_1 + v_1 - e_1 - e_2, paired in the same basis.
        LineClass e = LineClass::basis(l.rank(), 6);
        LineClass f2 = LineClass::zero(l.rank());
        f2.add(1, 0).add(1, 1).add(-1, 6).add(-1, 7);
        e_sq = l.pair(e, e);
        c1E_on_e = l.pair(c1E, e);
        f2_sq = l.pair(f2, f2);
        c1E_on_f2 = l.pair(c1E, f2);
    } else {
        ctx.N = xn_characteristics(ctx.n);
        std::tie(ctx.c1sqE, ctx.c1N_c1E) = bundle_on_Xn(ctx.n);
        // The same two curves live in X(n) away from the vanishing cycles,
        // so E restricts trivially to both.
        e_sq = -1;
        c1E_on_e = 0;
        f2_sq = 0;
        c1E_on_f2 = 0;
    }

    SixChern six = projectivize_chern(ctx.N, ctx.c1sqE, ctx.c1N_c1E);
    ctx.base = chern_to_params(product_with_surface(six, ctx.genus));

    ctx.col_x = SubmanifoldProfile::point();
    ctx.col_y = SubmanifoldProfile::curve(0, lift_square(e_sq, c1E_on_e));
    ctx.col_z = SubmanifoldProfile::curve(2, lift_square(f2_sq, c1E_on_f2));
    ctx.col_u = section_profile(ctx.N, ctx.c1sqE, ctx.c1N_c1E, -1);
    return ctx;
}

SystemColumns system_columns(const BaseContext& ctx, const HypersurfaceConfig& cfg) {
    SystemColumns cols;
    cols.x = blowup_delta(ctx.col_x);
    cols.y = blowup_delta(ctx.col_y);
    cols.z = blowup_delta(ctx.col_z);
    cols.u = blowup_delta(ctx.col_u);
    cols.v = blowup_delta(hypersurface_profile(cfg));
    return cols;
}

namespace {

IVec4 to_vec4(const ParamVector& p) {
    return IVec4{p.a, 4 * p.m, 12 * p.k, p.b};
}

IVec4 delta_vec(const ParamDelta& d) { return IVec4{d.a, d.m4, d.k12, d.b}; }

Mat4 system_matrix(const BaseContext& ctx) {
    ParamDelta cols[4] = {
        blowup_delta(ctx.col_x),
        blowup_delta(ctx.col_y),
        blowup_delta(ctx.col_z),
        blowup_delta(ctx.col_u),
    };
    Mat4 a;
    for (int c = 0; c < 4; ++c) {
        IVec4 col = delta_vec(cols[c]);
        for (int r = 0; r < 4; ++r) a[r][c] = col[r];
    }
    return a;
}

void check_target(const BaseContext& ctx, const ParamVector& target) {
    if (target.j != ctx.base.j) {
        throw Error("solve_counts: target j " + to_string(target.j) +
                    " does not match base j " + to_string(ctx.base.j));
    }
    if (residue(target.a + target.m, 3) != 0) {
        throw Mod3Violation("solve_counts: target a + m is not divisible by 3");
    }
}

}  // namespace

QVec4 solve_v0(const BaseContext& ctx, const ParamVector& target) {
    check_target(ctx, target);
    ExactSolver4 solver(system_matrix(ctx));
    IVec4 base = to_vec4(ctx.base);
    IVec4 goal = to_vec4(target);
    IVec4 rhs;
    for (int i = 0; i < 4; ++i) rhs[i] = goal[i] - base[i];
    return solver.solve(rhs);
}

SolveResult solve_counts(const BaseContext& ctx, const ParamVector& target,
                         const PlannerOptions& opts) {
    check_target(ctx, target);
    ExactSolver4 solver(system_matrix(ctx));
    IVec4 base = to_vec4(ctx.base);
    IVec4 goal = to_vec4(target);
    IVec4 rhs;
    for (int i = 0; i < 4; ++i) rhs[i] = goal[i] - base[i];
    QVec4 w0 = solver.solve(rhs);
    Int period = abs(solver.determinant());

    for (long lam = 1; lam <= opts.budget.lambda_max; ++lam) {
        HypersurfaceConfig cfg = ctx.hypersurface_config(Int(lam), opts.K, opts.beta);
        ParamDelta dv = blowup_delta(hypersurface_profile(cfg));
        if (!divides(4, dv.m4) || !divides(12, dv.k12)) continue;
        QVec4 s = solver.solve(delta_vec(dv));
        // Componentwise w(v) = w0 - v s >= 0 pins v to a window.
        Int lo = 0;
        Int hi = opts.budget.v_max;
        bool feasible = true;
        for (int i = 0; i < 4 && feasible; ++i) {
            if (s[i] == 0) {
                feasible = (w0[i] >= 0);
            } else if (s[i] > 0) {
                Rat bound = w0[i] / s[i];
                if (floor_rat(bound) < hi) hi = floor_rat(bound);
            } else {
                Rat bound = w0[i] / s[i];
                if (ceil_rat(bound) > lo) lo = ceil_rat(bound);
            }
        }
        if (!feasible || lo > hi) continue;
        // Integrality of w(v) is periodic in v with period dividing |det|,
        // so scanning one period of the window is exhaustive.
        Int scan_end = hi;
        if (hi - lo + 1 > period) scan_end = lo + period - 1;
        for (Int v = lo; v <= scan_end; ++v) {
            Counts counts;
            counts.v = v;
            bool integral = true;
            Rat w;
            Int* slots[4] = {&counts.x, &counts.y, &counts.z, &counts.u};
            for (int i = 0; i < 4; ++i) {
                w = w0[i] - v * s[i];
                if (!is_integer(w)) {
                    integral = false;
                    break;
                }
                *slots[i] = w.get_num();
            }
            if (!integral) continue;
            return SolveResult{std::move(counts), Int(lam)};
        }
    }
    throw SearchExhausted(
        "no certificate with lambda <= " + std::to_string(opts.budget.lambda_max) +
        " and v <= " + to_string(opts.budget.v_max));
}

QVec4 closed_form_counts_v0(Branch branch, const Int& n,
                            const std::array<Rat, 4>& amkb) {
    const Rat& a = amkb[0];
    const Rat& m = amkb[1];
    const Rat& k = amkb[2];
    const Rat& b = amkb[3];
    QVec4 w;
    if (branch == Branch::j_zero) {
        w[0] = make_rat(10, 3) * a + make_rat(40, 3) * m - 48 * k + 9 * b;
        w[1] = 4 * a + 12 * m - 37 * k + 7 * b + 1;
        w[2] = 7 * a + 25 * m - 85 * k + 16 * b + 4;
        w[3] = a + 4 * m - 16 * k + 3 * b;
        return w;
    }
    Int sign = (branch == Branch::j_positive) ? 1 : -1;
    w[0] = make_rat(24 * n + 10, 3) * a + make_rat(96 * n + 40, 3) * m -
           Int(128 * n + 48) * k + Int(24 * n + 9) * b +
           sign * Int(640 * n * n + 224 * n);
    w[1] = Int(3 * n + 3) * a + Int(12 * n + 8) * m - Int(48 * n + 21) * k +
           Int(9 * n + 4) * b + sign * Int(240 * n * n + 32 * n + 1);
    w[2] = Int(12 * n + 6) * a + Int(48 * n + 21) * m - Int(192 * n + 69) * k +
           Int(36 * n + 13) * b + sign * Int(960 * n * n + 272 * n + 4);
    w[3] = a + 4 * m - 16 * k + 3 * b + sign * Int(80 * n);
    return w;
}

QVec4 closed_form_counts_v0(Branch branch, const Int& n, const ParamVector& t) {
    return closed_form_counts_v0(
        branch, n, std::array<Rat, 4>{Rat(t.a), Rat(t.m), Rat(t.k), Rat(t.b)});
}

Plan realize(const ParamVector& target, const PlannerOptions& opts) {
    if (residue(target.a + target.m, 3) != 0) {
        throw Mod3Violation("realize: target a + m is not divisible by 3");
    }
    return realize(base_setup(target.j), target, opts);
}

Plan realize(const BaseContext& ctx, const ParamVector& target,
             const PlannerOptions& opts) {
    SolveResult res = solve_counts(ctx, target, opts);
    Plan plan;
    plan.branch = ctx.branch;
    plan.n = ctx.n;
    plan.lambda = res.lambda;
    plan.K = opts.K;
    plan.beta = opts.beta;
    plan.counts = std::move(res.counts);
    plan.base = ctx.base;
    plan.target = target;
    plan.geometric_disclaimer = true;
    if (ctx.branch == Branch::j_zero) {
        plan.errata_applied.push_back(
            "j0-base-recomputed: the j = 0 base is (a,m,k,b) = (12,-3,-39,-208), "
            "rederived from the block catalog");
    }
    return plan;
}

Plan realize(const ChernQuintuple& target, const PlannerOptions& opts) {
    return realize(chern_to_params(target), opts);
}

}  // namespace geograph
