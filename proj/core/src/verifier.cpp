#include "geograph/verifier.hpp"

#include <algorithm>
#include <mutex>
#include <thread>
#include <utility>

namespace geograph {

namespace {

void check_shape(const Plan& plan) {
    const Counts& c = plan.counts;
    if (c.x < 0 || c.y < 0 || c.z < 0 || c.u < 0 || c.v < 0) {
        throw MalformedPlan("plan has a negative blow-up count");
    }
    if (plan.lambda < 1) throw MalformedPlan("plan has lambda < 1");
    if (plan.K < 1) throw MalformedPlan("plan has K < 1");
    if (plan.beta.beta_sq < 1) {
        throw MalformedPlan("plan has a non-positive beta_sq");
    }
    if (plan.branch != branch_for(plan.target.j)) {
        throw MalformedPlan("plan branch does not match the sign of target j");
    }
    if (plan.n != abs(plan.target.j)) {
        throw MalformedPlan("plan n does not match |target j|");
    }
    if (plan.base.j != plan.target.j) {
        throw MalformedPlan("plan base and target disagree on j");
    }
}

std::string field_mismatch(const ParamVector& got, const ParamVector& want) {
    auto describe = [](const char* name, const Int& g, const Int& w) {
        return std::string(name) + ": achieved " + to_string(g) +
               ", target " + to_string(w);
    };
    if (got.a != want.a) return describe("a", got.a, want.a);
    if (got.m != want.m) return describe("m", got.m, want.m);
    if (got.j != want.j) return describe("j", got.j, want.j);
    if (got.k != want.k) return describe("k", got.k, want.k);
    return describe("b", got.b, want.b);
}

}  // namespace

VerificationReport verify_plan(const Plan& plan) {
    check_shape(plan);
    BaseContext ctx = base_setup(plan.target.j);

    VerificationReport report;
    report.recomputed_base = ctx.base;
    report.target = plan.target;
    if (plan.base != ctx.base) {
        report.notes.push_back("plan base field differs from the recomputed base; "
                               "replay starts from the recomputed one");
    }
    if (ctx.branch == Branch::j_zero) {
        report.notes.push_back("j = 0 base rederived from the block catalog");
    }

    const SubmanifoldProfile hyper = hypersurface_profile(
        ctx.hypersurface_config(plan.lambda, plan.K, plan.beta));
    const std::pair<SubmanifoldProfile, Int> seq[] = {
        {ctx.col_x, plan.counts.x},
        {ctx.col_y, plan.counts.y},
        {ctx.col_z, plan.counts.z},
        {ctx.col_u, plan.counts.u},
        {hyper, plan.counts.v},
    };
    const char* names[] = {"point", "exceptional sphere", "genus-2 curve",
                           "negative section", "hypersurface"};

    ParamVector state = ctx.base;
    for (int i = 0; i < 5; ++i) {
        if (seq[i].second != 0) {
            try {
                state = apply_sequence(state, std::span(&seq[i], 1));
            } catch (const DivisibilityViolation& e) {
                report.achieved = state;
                report.failure = std::string(names[i]) + " step: " + e.what();
                return report;
            }
        }
        report.steps.push_back(ReplayStep{names[i], seq[i].second, state});
    }
    report.achieved = state;
    if (state == plan.target) {
        report.verified = true;
    } else {
        report.failure = field_mismatch(state, plan.target);
    }
    return report;
}

BoxSummary enumerate_box(const BoxRanges& box, const PlannerOptions& opts,
                         unsigned threads) {
    BoxSummary total;
    Int wa = box.a_hi - box.a_lo + 1;
    Int wm = box.m_hi - box.m_lo + 1;
    Int wk = box.k_hi - box.k_lo + 1;
    Int wb = box.b_hi - box.b_lo + 1;
    if (wa <= 0 || wm <= 0 || wk <= 0 || wb <= 0 || box.j_values.empty()) {
        return total;
    }
    Int size = wa * wm * wk * wb * Int(box.j_values.size());
    if (!size.fits_ulong_p()) {
        throw Error("enumerate_box: box has " + to_string(size) + " cells");
    }
    const unsigned long count = size.get_ui();
    const unsigned long na = wa.get_ui();
    const unsigned long nm = wm.get_ui();
    const unsigned long nk = wk.get_ui();
    const unsigned long nb = wb.get_ui();

    std::vector<BaseContext> contexts;
    contexts.reserve(box.j_values.size());
    for (const Int& j : box.j_values) contexts.push_back(base_setup(j));

    if (threads == 0) threads = 1;
    constexpr std::size_t kMaxFailureSamples = 20;

    auto worker = [&](unsigned tid, BoxSummary& local) {
        for (unsigned long idx = tid; idx < count; idx += threads) {
            unsigned long rest = idx;
            const unsigned long bi = rest % nb; rest /= nb;
            const unsigned long ki = rest % nk; rest /= nk;
            const unsigned long mi = rest % nm; rest /= nm;
            const unsigned long ai = rest % na; rest /= na;
            const BaseContext& ctx = contexts[rest];
            ParamVector p;
            p.a = box.a_lo + Int(ai);
            p.m = box.m_lo + Int(mi);
            p.j = ctx.base.j;
            p.k = box.k_lo + Int(ki);
            p.b = box.b_lo + Int(bi);
            if (residue(p.a + p.m, 3) != 0) {
                ++local.inadmissible_skipped;
                continue;
            }
            try {
                Plan plan = realize(ctx, p, opts);
                VerificationReport report = verify_plan(plan);
                if (!report.verified) {
                    ++local.failed;
                    if (local.failures.size() < kMaxFailureSamples) {
                        local.failures.push_back("verify failed at (" +
                                                 to_string(p.a) + "," + to_string(p.m) + "," +
                                                 to_string(p.j) + "," + to_string(p.k) + "," +
                                                 to_string(p.b) + "): " + report.failure);
                    }
                    continue;
                }
                ++local.realized;
                const Counts& c = plan.counts;
                Int total_blowups = c.x + c.y + c.z + c.u + c.v;
                if (total_blowups > local.max_total_blowups) {
                    local.max_total_blowups = total_blowups;
                }
                if (c.v > local.max_v) local.max_v = c.v;
                if (plan.lambda > local.max_lambda) local.max_lambda = plan.lambda;
            } catch (const Error& e) {
                ++local.failed;
                if (local.failures.size() < kMaxFailureSamples) {
                    local.failures.push_back("realize failed at (" +
                                             to_string(p.a) + "," + to_string(p.m) + "," +
                                             to_string(p.j) + "," + to_string(p.k) + "," +
                                             to_string(p.b) + "): " + e.what());
                }
            }
        }
    };

    std::vector<BoxSummary> locals(threads);
    if (threads == 1) {
        worker(0, locals[0]);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back(worker, t, std::ref(locals[t]));
        }
        for (std::thread& t : pool) t.join();
    }

    for (BoxSummary& local : locals) {
        total.realized += local.realized;
        total.failed += local.failed;
        total.inadmissible_skipped += local.inadmissible_skipped;
        if (local.max_total_blowups > total.max_total_blowups) {
            total.max_total_blowups = local.max_total_blowups;
        }
        if (local.max_v > total.max_v) total.max_v = local.max_v;
        if (local.max_lambda > total.max_lambda) total.max_lambda = local.max_lambda;
        for (std::string& f : local.failures) {
            if (total.failures.size() < kMaxFailureSamples) {
                total.failures.push_back(std::move(f));
            }
        }
    }
    std::sort(total.failures.begin(), total.failures.end());
    return total;
}

}  // namespace geograph
