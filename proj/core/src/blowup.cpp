#include "geograph/blowup.hpp"

namespace geograph {

ParamDelta& ParamDelta::operator+=(const ParamDelta& o) {
    a += o.a;
    m4 += o.m4;
    k12 += o.k12;
    b += o.b;
    return *this;
}

ParamDelta ParamDelta::operator*(const Int& scale) const {
    return ParamDelta{a * scale, m4 * scale, k12 * scale, b * scale};
}

ParamDelta blowup_delta(const SubmanifoldProfile& p) {
    switch (p.kind) {
        case SubmanifoldProfile::Kind::point:
            return ParamDelta{3, 0, -180, -81};
        case SubmanifoldProfile::Kind::curve: {
            Int t = 1 - p.genus;
            return ParamDelta{4 * t, -4 * t, -144 * t - 36 * p.nu_deg,
                              -64 * t - 16 * p.nu_deg};
        }
        case SubmanifoldProfile::Kind::fourfold:
            return ParamDelta{
                p.c2X,
                p.c1sqX - 3 * p.c2X,
                -13 * p.c1sqX - p.c2X - 18 * p.c1X_c1nu - 6 * p.c1nu_sq,
                -6 * p.c1sqX - 8 * p.c1X_c1nu - 3 * p.c1nu_sq + p.c2nu,
            };
    }
    throw Error("blowup_delta: unreachable");
}

namespace {

void check_integral(const ParamDelta& d) {
    if (!divides(4, d.m4) || !divides(12, d.k12)) {
        throw DivisibilityViolation(
            "blow-up delta (" + to_string(d.a) + ", " + to_string(d.m4) +
            ", " + to_string(d.k12) + ", " + to_string(d.b) +
            ") is not integral in (a, m, k, b)");
    }
}

ParamVector apply_delta(const ParamVector& p, const ParamDelta& d) {
    ParamVector out = p;
    out.a += d.a;
    out.m += exact_div(d.m4, 4);
    out.k += exact_div(d.k12, 12);
    out.b += d.b;
    return out;
}

}  // namespace

ParamVector apply_blowup(const ParamVector& p, const SubmanifoldProfile& profile) {
    ParamDelta d = blowup_delta(profile);
    check_integral(d);
    return apply_delta(p, d);
}

ParamVector apply_sequence(
    const ParamVector& p,
    std::span<const std::pair<SubmanifoldProfile, Int>> counts) {
    ParamVector out = p;
    for (const auto& [profile, count] : counts) {
        if (count == 0) continue;
        // Each repetition must be an integral step on its own.
        ParamDelta d = blowup_delta(profile);
        check_integral(d);
        out = apply_delta(out, d * count);
    }
    return out;
}

}  // namespace geograph
