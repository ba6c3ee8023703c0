#include "geograph/plan_io.hpp"

#include <exception>

namespace geograph {

namespace {

constexpr int kFormatVersion = 1;

Json enc(const Int& x) { return to_string(x); }

Int dec(const Json& j, const char* field) {
    if (!j.contains(field)) {
        throw MalformedPlan(std::string("missing field '") + field + "'");
    }
    const Json& v = j.at(field);
    if (v.is_string()) return parse_int(v.get<std::string>());
    if (v.is_number_integer()) {
        return Int(static_cast<long>(v.get<long long>()));
    }
    throw MalformedPlan(std::string("field '") + field +
                        "' is neither a string nor an integer");
}

}  // namespace

Json to_json(const ChernQuintuple& q) {
    Json j;
    j["c4"] = enc(q.c4);
    j["c1c3"] = enc(q.c1c3);
    j["c2sq"] = enc(q.c2sq);
    j["c1sq_c2"] = enc(q.c1sq_c2);
    j["c1_4"] = enc(q.c1_4);
    return j;
}

Json to_json(const ParamVector& p) {
    Json j;
    j["a"] = enc(p.a);
    j["m"] = enc(p.m);
    j["j"] = enc(p.j);
    j["k"] = enc(p.k);
    j["b"] = enc(p.b);
    return j;
}

Json to_json(const AdmissibilityReport& r) {
    Json j;
    j["admissible"] = r.admissible;
    Json residues = Json::array();
    for (const CongruenceResidue& c : r.residues) {
        Json entry;
        entry["relation"] = c.relation;
        entry["modulus"] = enc(c.modulus);
        entry["residue"] = enc(c.residue);
        residues.push_back(std::move(entry));
    }
    j["residues"] = std::move(residues);
    Json violations = Json::array();
    for (const CongruenceResidue& c : r.violations) {
        violations.push_back(c.relation);
    }
    j["violations"] = std::move(violations);
    return j;
}

Json to_json(const Plan& plan) {
    Json j;
    j["format_version"] = kFormatVersion;
    j["branch"] = branch_name(plan.branch);
    j["n"] = enc(plan.n);
    j["lambda"] = enc(plan.lambda);
    j["K"] = enc(plan.K);
    Json beta;
    beta["beta_sq"] = enc(plan.beta.beta_sq);
    beta["c1N_beta"] = enc(plan.beta.c1N_beta);
    beta["c1E_beta"] = enc(plan.beta.c1E_beta);
    j["beta_config"] = std::move(beta);
    Json counts;
    counts["x"] = enc(plan.counts.x);
    counts["y"] = enc(plan.counts.y);
    counts["z"] = enc(plan.counts.z);
    counts["u"] = enc(plan.counts.u);
    counts["v"] = enc(plan.counts.v);
    j["counts"] = std::move(counts);
    j["base"] = to_json(plan.base);
    j["target"] = to_json(plan.target);
    j["target_chern"] = to_json(params_to_chern(plan.target));
    j["geometric_disclaimer"] = plan.geometric_disclaimer;
    j["errata_applied"] = plan.errata_applied;
    return j;
}

Json to_json(const VerificationReport& r) {
    Json j;
    j["verified"] = r.verified;
    j["recomputed_base"] = to_json(r.recomputed_base);
    j["achieved"] = to_json(r.achieved);
    j["target"] = to_json(r.target);
    Json steps = Json::array();
    for (const ReplayStep& s : r.steps) {
        Json step;
        step["center"] = s.center;
        step["count"] = enc(s.count);
        step["after"] = to_json(s.after);
        steps.push_back(std::move(step));
    }
    j["steps"] = std::move(steps);
    if (!r.failure.empty()) j["failure"] = r.failure;
    j["notes"] = r.notes;
    return j;
}

Json to_json(const BoxSummary& s) {
    Json j;
    j["realized"] = s.realized;
    j["failed"] = s.failed;
    j["inadmissible_skipped"] = s.inadmissible_skipped;
    j["max_total_blowups"] = enc(s.max_total_blowups);
    j["max_v"] = enc(s.max_v);
    j["max_lambda"] = enc(s.max_lambda);
    j["failures"] = s.failures;
    return j;
}

Json catalog_json() {
    Json blocks = Json::array();
    for (const std::string& name : catalog_names()) {
        FourManifoldData d = building_block(name);
        Json entry;
        entry["name"] = d.name;
        entry["c1sq"] = enc(d.c1sq);
        entry["c2"] = enc(d.c2);
        if (d.lattice) {
            entry["lattice_rank"] = d.lattice->rank();
            entry["unimodular"] = d.lattice->unimodular();
        } else {
            entry["lattice_rank"] = nullptr;
            entry["unimodular"] = nullptr;
        }
        if (d.c1) {
            Json coeffs = Json::array();
            for (const Int& c : d.c1->coeffs) coeffs.push_back(enc(c));
            entry["c1"] = std::move(coeffs);
        } else {
            entry["c1"] = "abstract";
        }
        blocks.push_back(std::move(entry));
    }
    Json j;
    j["blocks"] = std::move(blocks);
    return j;
}

ChernQuintuple quintuple_from_json(const Json& j) {
    ChernQuintuple q;
    q.c4 = dec(j, "c4");
    q.c1c3 = dec(j, "c1c3");
    q.c2sq = dec(j, "c2sq");
    q.c1sq_c2 = dec(j, "c1sq_c2");
    q.c1_4 = dec(j, "c1_4");
    return q;
}

ParamVector params_from_json(const Json& j) {
    ParamVector p;
    p.a = dec(j, "a");
    p.m = dec(j, "m");
    p.j = dec(j, "j");
    p.k = dec(j, "k");
    p.b = dec(j, "b");
    return p;
}

Plan plan_from_json(const Json& j) {
    try {
        if (!j.is_object()) throw MalformedPlan("plan is not a JSON object");
        if (!j.contains("format_version") ||
            j.at("format_version").get<int>() != kFormatVersion) {
            throw MalformedPlan("unsupported or missing format_version");
        }
        Plan plan;
        plan.branch = branch_from_name(j.at("branch").get<std::string>());
        plan.n = dec(j, "n");
        plan.lambda = dec(j, "lambda");
        plan.K = dec(j, "K");
        const Json& beta = j.at("beta_config");
        plan.beta.beta_sq = dec(beta, "beta_sq");
        plan.beta.c1N_beta = dec(beta, "c1N_beta");
        plan.beta.c1E_beta = dec(beta, "c1E_beta");
        const Json& counts = j.at("counts");
        plan.counts.x = dec(counts, "x");
        plan.counts.y = dec(counts, "y");
        plan.counts.z = dec(counts, "z");
        plan.counts.u = dec(counts, "u");
        plan.counts.v = dec(counts, "v");
        plan.base = params_from_json(j.at("base"));
        plan.target = params_from_json(j.at("target"));
        if (residue(plan.target.a + plan.target.m, 3) != 0) {
            throw MalformedPlan("target has a + m not divisible by 3");
        }
        if (j.contains("target_chern")) {
            ChernQuintuple stated = quintuple_from_json(j.at("target_chern"));
            ChernQuintuple derived = params_to_chern(plan.target);
            if (!(stated == derived)) {
                throw MalformedPlan("target_chern contradicts target");
            }
        }
        if (j.contains("geometric_disclaimer")) {
            plan.geometric_disclaimer = j.at("geometric_disclaimer").get<bool>();
        }
        if (j.contains("errata_applied")) {
            plan.errata_applied =
                j.at("errata_applied").get<std::vector<std::string>>();
        }
        return plan;
    } catch (const Error&) {
        throw;
    } catch (const std::exception& e) {
        throw MalformedPlan(std::string("plan_from_json: ") + e.what());
    }
}

std::string plan_to_string(const Plan& plan) { return to_json(plan).dump(2) + "\n"; }

Plan plan_from_string(const std::string& text) {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) throw MalformedPlan("plan is not valid JSON");
    return plan_from_json(j);
}

}  // namespace geograph
