#include "geograph/hypersurface.hpp"

namespace geograph {

SubmanifoldProfile hypersurface_profile(const HypersurfaceConfig& cfg) {
    const Int& l = cfg.lambda;
    const Int& K = cfg.K;
    Int l2 = l * l;
    Int l3 = l2 * l;
    Int K2 = K * K;
    Int c2X = l * cfg.c2N + l * (l - 1) * cfg.c1N_c1E -
              2 * l * (l - 1) * K * cfg.c1N_beta + l2 * (l - 1) * cfg.c1sqE +
              l2 * (2 - 3 * l) * K * cfg.c1E_beta +
              l2 * (3 * l - 2) * K2 * cfg.beta_sq;
    Int c1sqX = l * cfg.c1sqN + 2 * l * (l - 1) * cfg.c1N_c1E +
                4 * l * (1 - l) * K * cfg.c1N_beta +
                l * (l - 1) * (l - 1) * cfg.c1sqE +
                l2 * (4 - 3 * l) * K * cfg.c1E_beta +
                l2 * (3 * l - 4) * K2 * cfg.beta_sq;
    Int c1X_c1nu = -l2 * cfg.c1N_c1E + 2 * l2 * K * cfg.c1N_beta +
                   l2 * (1 - l) * cfg.c1sqE +
                   l2 * (3 * l - 2) * K * cfg.c1E_beta +
                   l2 * (2 - 3 * l) * K2 * cfg.beta_sq;
    Int c1nu_sq = l3 * cfg.c1sqE - 3 * l3 * K * cfg.c1E_beta +
                  3 * l3 * K2 * cfg.beta_sq;
    return SubmanifoldProfile::fourfold(c2X, c1sqX, c1X_c1nu, c1nu_sq, Int(0));
}

ParamVector blowup_column(const HypersurfaceConfig& cfg) {
    return apply_blowup(ParamVector{0, 0, 0, 0, 0}, hypersurface_profile(cfg));
}

BColumn expanded_b_coefficients(const HypersurfaceConfig& cfg,
                                B2BetaVariant variant) {
    const Int& l = cfg.lambda;
    const Int& K = cfg.K;
    Int l2 = l * l;
    Int l3 = l2 * l;
    Int K2 = K * K;
    BColumn c;
    c.b1 = l * cfg.c2N + (l3 - l2) * cfg.c1sqE +
           (3 * l3 - 2 * l2) * K2 * cfg.beta_sq + (l2 - l) * cfg.c1N_c1E +
           (2 * l - 2 * l2) * K * cfg.c1N_beta +
           (2 * l2 - 3 * l3) * K * cfg.c1E_beta;
    Int b2_beta = (variant == B2BetaVariant::k_scaled)
                      ? Int((2 * l2 - 6 * l3) * K2)
                      : Int(2 * l2 - 6 * l3 * K2);
    c.b2 = l * cfg.c1sqN - 3 * l * cfg.c2N + (l2 - 2 * l3 + l) * cfg.c1sqE +
           b2_beta * cfg.beta_sq + (l - l2) * cfg.c1N_c1E +
           (2 * l2 - 2 * l) * K * cfg.c1N_beta +
           (6 * l3 - 2 * l2) * K * cfg.c1E_beta;
    c.b3 = -13 * l * cfg.c1sqN - l * cfg.c2N +
           (9 * l2 - 2 * l3 - 13 * l) * cfg.c1sqE +
           (18 * l2 - 6 * l3) * K2 * cfg.beta_sq +
           (27 * l - 9 * l2) * cfg.c1N_c1E +
           (18 * l2 - 54 * l) * K * cfg.c1N_beta +
           (6 * l3 - 18 * l2) * K * cfg.c1E_beta;
    c.b4 = -6 * l * cfg.c1sqN + (4 * l2 - 6 * l - l3) * cfg.c1sqE +
           (8 * l2 - 3 * l3) * K2 * cfg.beta_sq + (12 * l - 4 * l2) * cfg.c1N_c1E +
           (8 * l2 - 24 * l) * K * cfg.c1N_beta +
           (3 * l3 - 8 * l2) * K * cfg.c1E_beta;
    return c;
}

namespace {

BColumn composed_column(const HypersurfaceConfig& cfg) {
    ParamDelta d = blowup_delta(hypersurface_profile(cfg));
    return BColumn{d.a, d.m4, d.k12, d.b};
}

}  // namespace

std::vector<BTermComparison> compare_b_terms(const Int& lambda, const Int& K,
                                             B2BetaVariant variant) {
    struct Slot {
        const char* name;
        Int HypersurfaceConfig::* field;
    };
    const Slot slots[] = {
        {"c2N", &HypersurfaceConfig::c2N},
        {"c1sqN", &HypersurfaceConfig::c1sqN},
        {"c1sqE", &HypersurfaceConfig::c1sqE},
        {"c1N_c1E", &HypersurfaceConfig::c1N_c1E},
        {"beta_sq", &HypersurfaceConfig::beta_sq},
        {"c1N_beta", &HypersurfaceConfig::c1N_beta},
        {"c1E_beta", &HypersurfaceConfig::c1E_beta},
    };
    std::vector<BTermComparison> out;
    for (const Slot& slot : slots) {
        HypersurfaceConfig cfg;
        cfg.lambda = lambda;
        cfg.K = K;
        cfg.*(slot.field) = 1;
        BTermComparison cmp;
        cmp.pairing = slot.name;
        cmp.composed = composed_column(cfg);
        cmp.expanded = expanded_b_coefficients(cfg, variant);
        cmp.match = cmp.composed == cmp.expanded;
        out.push_back(std::move(cmp));
    }
    return out;
}

}  // namespace geograph
