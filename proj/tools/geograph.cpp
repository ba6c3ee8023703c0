#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "geograph/plan_io.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kRejected = 1;   // not admissible / not verified / failures
constexpr int kError = 2;      // search exhausted, IO or internal errors

using geograph::Int;

geograph::ChernQuintuple quintuple_of(const std::vector<std::string>& v) {
    return geograph::ChernQuintuple{
        geograph::parse_int(v[0]), geograph::parse_int(v[1]),
        geograph::parse_int(v[2]), geograph::parse_int(v[3]),
        geograph::parse_int(v[4])};
}

geograph::ParamVector params_of(const std::vector<std::string>& v) {
    return geograph::ParamVector{
        geograph::parse_int(v[0]), geograph::parse_int(v[1]),
        geograph::parse_int(v[2]), geograph::parse_int(v[3]),
        geograph::parse_int(v[4])};
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, sep)) out.push_back(item);
    return out;
}

// GEOGRAPH_SEARCH_BUDGET=LAMBDA_MAX:V_MAX overrides the built-in defaults;
// explicit flags still win over the environment.
geograph::SearchBudget budget_from_env() {
    geograph::SearchBudget budget;
    const char* env = std::getenv("GEOGRAPH_SEARCH_BUDGET");
    if (env == nullptr || *env == '\0') return budget;
    std::vector<std::string> parts = split(env, ':');
    if (parts.size() != 2) {
        throw geograph::Error(
            "GEOGRAPH_SEARCH_BUDGET must look like LAMBDA_MAX:V_MAX");
    }
    Int lambda_max = geograph::parse_int(parts[0]);
    if (lambda_max < 1 || !lambda_max.fits_slong_p()) {
        throw geograph::Error("GEOGRAPH_SEARCH_BUDGET: bad LAMBDA_MAX");
    }
    budget.lambda_max = lambda_max.get_si();
    budget.v_max = geograph::parse_int(parts[1]);
    if (budget.v_max < 0) {
        throw geograph::Error("GEOGRAPH_SEARCH_BUDGET: bad V_MAX");
    }
    return budget;
}

std::string params_line(const geograph::ParamVector& p) {
    return "a=" + geograph::to_string(p.a) + " m=" + geograph::to_string(p.m) +
           " j=" + geograph::to_string(p.j) + " k=" + geograph::to_string(p.k) +
           " b=" + geograph::to_string(p.b);
}

std::string chern_line(const geograph::ChernQuintuple& q) {
    return "c4=" + geograph::to_string(q.c4) +
           " c1c3=" + geograph::to_string(q.c1c3) +
           " c2sq=" + geograph::to_string(q.c2sq) +
           " c1sq_c2=" + geograph::to_string(q.c1sq_c2) +
           " c1_4=" + geograph::to_string(q.c1_4);
}

int run_check(const std::vector<std::string>& values, bool as_json) {
    geograph::AdmissibilityReport report =
        geograph::is_admissible(quintuple_of(values));
    if (as_json) {
        std::cout << geograph::to_json(report).dump(2) << "\n";
    } else if (report.admissible) {
        std::cout << "admissible\n";
    } else {
        std::cout << "not admissible:\n";
        for (const geograph::CongruenceResidue& r : report.violations) {
            std::cout << "  " << r.relation << " residue "
                      << geograph::to_string(r.residue) << " (mod "
                      << geograph::to_string(r.modulus) << ")\n";
        }
    }
    return report.admissible ? kOk : kRejected;
}

int run_convert(const std::vector<std::string>& values, bool inverse,
                bool as_json) {
    if (inverse) {
        geograph::ChernQuintuple q = geograph::params_to_chern(params_of(values));
        if (as_json) {
            std::cout << geograph::to_json(q).dump(2) << "\n";
        } else {
            std::cout << chern_line(q) << "\n";
        }
        return kOk;
    }
    geograph::ParamVector p = geograph::chern_to_params(quintuple_of(values));
    if (as_json) {
        std::cout << geograph::to_json(p).dump(2) << "\n";
    } else {
        std::cout << params_line(p) << "\n";
    }
    return kOk;
}

int run_realize(const geograph::ParamVector& target,
                const geograph::PlannerOptions& opts,
                const std::string& out_path) {
    geograph::Plan plan = geograph::realize(target, opts);
    std::string text = geograph::plan_to_string(plan);
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out) throw geograph::Error("cannot write " + out_path);
        out << text;
        const geograph::Counts& c = plan.counts;
        std::cout << "plan written to " << out_path << ": branch "
                  << geograph::branch_name(plan.branch) << ", lambda "
                  << geograph::to_string(plan.lambda) << ", counts (x,y,z,u,v)=("
                  << geograph::to_string(c.x) << "," << geograph::to_string(c.y)
                  << "," << geograph::to_string(c.z) << ","
                  << geograph::to_string(c.u) << "," << geograph::to_string(c.v)
                  << ")\n";
    }
    return kOk;
}

int run_verify(const std::string& path, bool as_json) {
    std::ifstream in(path);
    if (!in) throw geograph::Error("cannot read " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    geograph::Plan plan = geograph::plan_from_string(buffer.str());
    geograph::VerificationReport report = geograph::verify_plan(plan);
    if (as_json) {
        std::cout << geograph::to_json(report).dump(2) << "\n";
    } else {
        std::cout << (report.verified ? "verified" : "NOT verified") << "\n";
        std::cout << "  base   " << params_line(report.recomputed_base) << "\n";
        for (const geograph::ReplayStep& s : report.steps) {
            std::cout << "  + " << geograph::to_string(s.count) << " x "
                      << s.center << " -> " << params_line(s.after) << "\n";
        }
        std::cout << "  target " << params_line(report.target) << "\n";
        if (!report.failure.empty()) {
            std::cout << "  failure: " << report.failure << "\n";
        }
        for (const std::string& note : report.notes) {
            std::cout << "  note: " << note << "\n";
        }
    }
    return report.verified ? kOk : kRejected;
}

int run_enumerate(std::vector<std::string> box_specs, const std::string& j_list,
                  unsigned threads, const geograph::PlannerOptions& opts,
                  bool as_json) {
    // Negative bounds are easiest to pass as one token:
    //   --box=-10:10,-10:10,-10:10,-10:10
    if (box_specs.size() == 1 &&
        box_specs[0].find(',') != std::string::npos) {
        box_specs = split(box_specs[0], ',');
    }
    if (box_specs.size() != 4) {
        throw geograph::Error("--box wants four LO:HI ranges (a, m, k, b)");
    }
    geograph::BoxRanges box;
    Int* bounds[8] = {&box.a_lo, &box.a_hi, &box.m_lo, &box.m_hi,
                      &box.k_lo, &box.k_hi, &box.b_lo, &box.b_hi};
    for (int i = 0; i < 4; ++i) {
        std::vector<std::string> parts = split(box_specs[i], ':');
        if (parts.size() != 2) {
            throw geograph::Error("--box wants LO:HI, got '" + box_specs[i] + "'");
        }
        *bounds[2 * i] = geograph::parse_int(parts[0]);
        *bounds[2 * i + 1] = geograph::parse_int(parts[1]);
    }
    for (const std::string& j : split(j_list, ',')) {
        if (!j.empty()) box.j_values.push_back(geograph::parse_int(j));
    }
    if (box.j_values.empty()) {
        throw geograph::Error("--j wants a comma-separated list of j values");
    }
    geograph::BoxSummary summary = geograph::enumerate_box(box, opts, threads);
    if (as_json) {
        std::cout << geograph::to_json(summary).dump(2) << "\n";
    } else {
        std::cout << "realized             " << summary.realized << "\n"
                  << "failed               " << summary.failed << "\n"
                  << "inadmissible skipped " << summary.inadmissible_skipped << "\n"
                  << "max total blow-ups   "
                  << geograph::to_string(summary.max_total_blowups) << "\n"
                  << "max v                " << geograph::to_string(summary.max_v)
                  << "\n"
                  << "max lambda           "
                  << geograph::to_string(summary.max_lambda) << "\n";
        for (const std::string& f : summary.failures) {
            std::cout << "failure: " << f << "\n";
        }
    }
    return summary.failed == 0 ? kOk : kRejected;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Exact planner/verifier for Chern numbers of closed symplectic "
        "8-manifolds"};
    app.require_subcommand(1);

    geograph::PlannerOptions defaults;

    // check
    std::vector<std::string> check_values;
    bool check_json = false;
    CLI::App* check = app.add_subcommand(
        "check", "Check the admissibility congruences of a Chern quintuple");
    check->add_option("values", check_values, "c4 c1c3 c2sq c1sq_c2 c1_4")
        ->expected(5)
        ->required();
    check->add_flag("--json", check_json, "Machine-readable report");

    // convert
    std::vector<std::string> convert_values;
    bool convert_inverse = false;
    bool convert_json = false;
    CLI::App* convert = app.add_subcommand(
        "convert", "Convert between Chern numbers and (a, m, j, k, b)");
    convert->add_option("values", convert_values,
                        "c4 c1c3 c2sq c1sq_c2 c1_4 (or a m j k b with --inverse)")
        ->expected(5)
        ->required();
    convert->add_flag("--inverse", convert_inverse,
                      "Treat the values as (a, m, j, k, b)");
    convert->add_flag("--json", convert_json, "Machine-readable output");

    // realize
    std::vector<std::string> realize_values;
    std::vector<std::string> realize_params;
    std::string realize_out;
    long realize_lambda_max = 0;
    std::string realize_v_max;
    std::string realize_K = "1";
    std::string realize_beta_sq = "2";
    CLI::App* realize = app.add_subcommand(
        "realize", "Produce a blow-up plan hitting the given Chern numbers");
    realize->add_option("values", realize_values, "c4 c1c3 c2sq c1sq_c2 c1_4")
        ->expected(0, 5);
    realize->add_option("--params", realize_params, "Target as a m j k b")
        ->expected(5);
    realize->add_option("-o,--output", realize_out, "Write the plan here");
    realize->add_option("--lambda-max", realize_lambda_max,
                        "Largest hypersurface degree to try");
    realize->add_option("--v-max", realize_v_max,
                        "Largest hypersurface count to try");
    realize->add_option("-K,--K", realize_K, "Twisting multiple K >= 1");
    realize->add_option("--beta-sq", realize_beta_sq,
                        "Self-pairing of the symplectic class (positive)");

    // verify
    std::string verify_path;
    bool verify_json = false;
    CLI::App* verify = app.add_subcommand(
        "verify", "Independently replay and check a plan file");
    verify->add_option("plan", verify_path, "Path to a plan JSON file")
        ->required();
    verify->add_flag("--json", verify_json, "Machine-readable report");

    // enumerate
    std::vector<std::string> enum_box;
    std::string enum_j = "0";
    unsigned enum_threads = 1;
    long enum_lambda_max = 0;
    std::string enum_v_max;
    bool enum_json = false;
    CLI::App* enumerate = app.add_subcommand(
        "enumerate", "Realize and verify every target in a parameter box");
    enumerate->add_option("--box", enum_box,
                          "a_lo:a_hi m_lo:m_hi k_lo:k_hi b_lo:b_hi (or one "
                          "comma-joined token)")
        ->expected(1, 4)
        ->required();
    enumerate->add_option("--j", enum_j, "Comma-separated j values");
    enumerate->add_option("--parallel", enum_threads,
                          "Worker threads (0 = hardware)");
    enumerate->add_option("--lambda-max", enum_lambda_max,
                          "Largest hypersurface degree to try");
    enumerate->add_option("--v-max", enum_v_max,
                          "Largest hypersurface count to try");
    enumerate->add_flag("--json", enum_json, "Machine-readable summary");

    // blocks
    CLI::App* blocks = app.add_subcommand(
        "blocks", "Dump the building-block catalog");

    CLI11_PARSE(app, argc, argv);

    try {
        defaults.budget = budget_from_env();

        if (check->parsed()) return run_check(check_values, check_json);
        if (convert->parsed()) {
            return run_convert(convert_values, convert_inverse, convert_json);
        }
        if (realize->parsed()) {
            geograph::PlannerOptions opts = defaults;
            if (realize_lambda_max > 0) opts.budget.lambda_max = realize_lambda_max;
            if (!realize_v_max.empty()) {
                opts.budget.v_max = geograph::parse_int(realize_v_max);
            }
            opts.K = geograph::parse_int(realize_K);
            opts.beta.beta_sq = geograph::parse_int(realize_beta_sq);
            if (opts.K < 1) throw geograph::Error("-K must be >= 1");
            if (opts.beta.beta_sq < 1) {
                throw geograph::Error("--beta-sq must be positive");
            }
            geograph::ParamVector target;
            if (!realize_params.empty()) {
                if (!realize_values.empty()) {
                    throw geograph::Error(
                        "give either positional Chern numbers or --params");
                }
                target = params_of(realize_params);
            } else if (realize_values.size() == 5) {
                target = geograph::chern_to_params(quintuple_of(realize_values));
            } else {
                throw geograph::Error(
                    "realize wants 5 Chern numbers or --params a m j k b");
            }
            return run_realize(target, opts, realize_out);
        }
        if (verify->parsed()) return run_verify(verify_path, verify_json);
        if (enumerate->parsed()) {
            geograph::PlannerOptions opts = defaults;
            if (enum_lambda_max > 0) opts.budget.lambda_max = enum_lambda_max;
            if (!enum_v_max.empty()) {
                opts.budget.v_max = geograph::parse_int(enum_v_max);
            }
            unsigned threads = enum_threads;
            if (threads == 0) threads = std::thread::hardware_concurrency();
            if (threads == 0) threads = 1;
            return run_enumerate(enum_box, enum_j, threads, opts, enum_json);
        }
        if (blocks->parsed()) {
            std::cout << geograph::catalog_json().dump(2) << "\n";
            return kOk;
        }
    } catch (const geograph::NotAdmissible& e) {
        std::cerr << "not admissible: " << e.what() << "\n";
        return kRejected;
    } catch (const geograph::Mod3Violation& e) {
        std::cerr << "not admissible: " << e.what() << "\n";
        return kRejected;
    } catch (const geograph::SearchExhausted& e) {
        std::cerr << "search exhausted: " << e.what() << "\n";
        return kError;
    } catch (const geograph::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kError;
    }
    return kError;
}
