#include "geograph/params.hpp"

#include <utility>

namespace geograph {

namespace {

Int lhs_mod720(const ChernQuintuple& q) {
    return -q.c4 + q.c1c3 + 3 * q.c2sq + 4 * q.c1sq_c2 - q.c1_4;
}

Int lhs_mod12(const ChernQuintuple& q) { return 2 * q.c1_4 + q.c1sq_c2; }

Int lhs_mod4(const ChernQuintuple& q) { return -2 * q.c4 + q.c1c3; }

std::string describe(const AdmissibilityReport& r) {
    std::string msg = "quintuple fails";
    for (const CongruenceResidue& v : r.violations) {
        msg += " " + v.relation + " (residue " + to_string(v.residue) + ")";
    }
    return msg;
}

}  // namespace

NotAdmissible::NotAdmissible(AdmissibilityReport r)
    : Error(describe(r)), report(std::move(r)) {}

AdmissibilityReport is_admissible(const ChernQuintuple& q) {
    AdmissibilityReport report;
    report.residues = {
        CongruenceResidue{"mod720", 720, residue(lhs_mod720(q), 720)},
        CongruenceResidue{"mod12", 12, residue(lhs_mod12(q), 12)},
        CongruenceResidue{"mod4", 4, residue(lhs_mod4(q), 4)},
    };
    for (const CongruenceResidue& r : report.residues) {
        if (r.residue != 0) report.violations.push_back(r);
    }
    report.admissible = report.violations.empty();
    return report;
}

ParamVector chern_to_params(const ChernQuintuple& q) {
    AdmissibilityReport report = is_admissible(q);
    if (!report.admissible) throw NotAdmissible(std::move(report));
    ParamVector p;
    p.a = q.c4;
    p.m = exact_div(lhs_mod4(q), 4);
    p.j = exact_div(lhs_mod720(q), 720);
    p.k = exact_div(lhs_mod12(q), 12);
    p.b = q.c1_4;
    return p;
}

ChernQuintuple params_to_chern(const ParamVector& p) {
    if (residue(p.a + p.m, 3) != 0) {
        throw Mod3Violation("params_to_chern: a + m = " +
                            to_string(Int(p.a + p.m)) +
                            " is not divisible by 3");
    }
    ChernQuintuple q;
    q.c4 = p.a;
    q.c1c3 = 4 * p.m + 2 * p.a;
    q.c1_4 = p.b;
    q.c1sq_c2 = 12 * p.k - 2 * p.b;
    // a + m = 0 (mod 3) makes this numerator divisible by 3.
    q.c2sq = exact_div(720 * p.j - p.a - 4 * p.m - 48 * p.k + 9 * p.b, 3);
    return q;
}

}  // namespace geograph
