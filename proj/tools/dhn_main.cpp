// Command-line surface for the double Hurwitz number engine.
//
// Exit codes: 0 success, 2 precondition error, 3 resource limit,
// 4 verification failure.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "dhn/lagrange.hpp"
#include "dhn/pic_symbol.hpp"
#include "dhn/polynomiality.hpp"
#include "dhn/verify.hpp"
#include "json.hpp"

namespace {

using namespace dhn;

constexpr int kExitOk = 0;
constexpr int kExitPrecondition = 2;
constexpr int kExitResource = 3;
constexpr int kExitVerification = 4;

void print_error(const std::string& kind, const std::string& message, int code) {
    nlohmann::json err{{"error", kind}, {"message", message}, {"code", code}};
    std::cerr << err.dump() << "\n";
}

std::string cache_file_for(const std::string& dir, int d) {
    return dir + "/characters_d" + std::to_string(d) + ".json";
}

struct ComputeResult {
    Rational value;
    std::string method;
    std::string checked_against;
};

ComputeResult compute_value(HurwitzEngine& engine, int g, const Partition& alpha,
                            const Partition& beta, const std::string& method,
                            bool aut_divided) {
    ComputeResult res;
    auto finish = [&](Rational v, std::string name) {
        if (aut_divided) v /= Rational(aut_order(alpha) * aut_order(beta));
        res.value = std::move(v);
        res.method = std::move(name);
    };
    if (method == "brute") {
        finish(engine.brute_force(g, alpha, beta, true), "brute");
    } else if (method == "character") {
        finish(engine.connected_single(g, alpha, beta), "character");
    } else if (method == "closed") {
        if (alpha.length() == 1)
            finish(engine.one_part(g, beta), "closed:one-part");
        else if (g == 0 && alpha.length() <= 3)
            finish(engine.genus0_mparts(alpha, beta), "closed:genus0-mparts");
        else if (alpha.length() == 2 && beta.length() == 2)
            finish(engine.two_two(g, alpha, beta), "closed:two-two");
        else
            throw precondition_error("no closed form covers this profile shape");
    } else if (method == "auto") {
        // cheapest valid route, cross-checked with a second when feasible
        Rational primary;
        std::string name;
        if (alpha.length() == 1) {
            primary = engine.one_part(g, beta);
            name = "one-part";
            if (g <= 5) {
                if (engine.one_part_closed(g, beta) != primary)
                    throw inconsistency_error("one-part routes disagree");
                res.checked_against = "closed-form table";
            }
        } else if (g == 0 && alpha.length() <= 3) {
            primary = engine.genus0_mparts(alpha, beta);
            name = "genus0-mparts";
            if (alpha.sum() <= 10) {
                if (engine.connected_single(0, alpha, beta) != primary)
                    throw inconsistency_error("closed form and character routes disagree");
                res.checked_against = "character";
            }
        } else {
            primary = engine.connected_single(g, alpha, beta);
            name = "character";
            if (alpha.sum() <= 5 && r_value(g, alpha, beta) <= 6) {
                if (engine.brute_force(g, alpha, beta, true) != primary)
                    throw inconsistency_error("character and brute-force routes disagree");
                res.checked_against = "brute";
            }
        }
        finish(std::move(primary), std::move(name));
    } else {
        throw precondition_error("unknown method '" + method + "'");
    }
    return res;
}

int run(int argc, char** argv) {
    CLI::App app{"Exact double Hurwitz numbers: four computation routes, the bracket "
                 "symbol, and verification suites"};
    app.require_subcommand(1);

    std::string cache_dir;
    if (const char* env = std::getenv("DHN_CACHE_DIR")) cache_dir = env;
    app.add_option("--cache-dir", cache_dir,
                   "Directory for persistent character caches (env DHN_CACHE_DIR)");

    // ---- compute ----
    auto* compute = app.add_subcommand("compute", "Compute one double Hurwitz number");
    int genus = 0;
    std::string alpha_str, beta_str, method = "auto", format = "plain";
    bool aut_divided = false;
    long long work_limit = 100000000;
    compute->add_option("--genus", genus, "Genus g >= 0")->required();
    compute->add_option("--alpha", alpha_str, "Profile over 0, e.g. 3 or 2,1")->required();
    compute->add_option("--beta", beta_str, "Profile over infinity")->required();
    compute->add_option("--method", method)
        ->check(CLI::IsMember({"auto", "brute", "character", "closed"}));
    compute->add_option("--format", format)->check(CLI::IsMember({"plain", "json", "csv"}));
    compute->add_flag("--aut-divided", aut_divided,
                      "Divide by |Aut alpha| |Aut beta| (unlabelled convention)");
    compute->add_option("--work-limit", work_limit, "Brute-force step budget");

    // ---- verify ----
    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    std::string suite;
    int vd_max = 6, vr_max = 8, vg_max = 3, vt_grid = 8;
    bool quiet = false;
    verify->add_option("--suite", suite, "cross-methods|one-part|symbols|string-dilaton|"
                                         "join-cut|ansatz|polynomiality|all")
        ->required();
    verify->add_option("--dmax", vd_max, "Degree bound override");
    verify->add_option("--rmax", vr_max, "Branch-point bound override");
    verify->add_option("--gmax", vg_max, "Genus bound override");
    verify->add_option("--grid", vt_grid, "Chamber grid bound override");
    verify->add_flag("--quiet", quiet, "Only print the summary line");

    // ---- symbol ----
    auto* symbol = app.add_subcommand("symbol", "Evaluate the bracket symbol");
    int sym_g = 0, sym_k = 0;
    std::string b_str;
    symbol->add_option("--genus", sym_g)->required();
    symbol->add_option("--k", sym_k)->required();
    symbol->add_option("--b", b_str, "Comma-separated tau indices, e.g. 2 or 1,0,2")
        ->required();

    // ---- ray ----
    auto* ray = app.add_subcommand("ray", "Sample H along a scaled ray and fit it");
    int ray_g = 0, t_max = 6;
    std::string ray_alpha, ray_beta, ray_method = "character", ray_format = "plain";
    ray->add_option("--genus", ray_g)->required();
    ray->add_option("--alpha", ray_alpha)->required();
    ray->add_option("--beta", ray_beta)->required();
    ray->add_option("--t-max", t_max);
    ray->add_option("--method", ray_method)
        ->check(CLI::IsMember({"auto", "brute", "character", "closed"}));
    ray->add_option("--format", ray_format)->check(CLI::IsMember({"plain", "json", "csv"}));

    // ---- table ----
    auto* table = app.add_subcommand("table", "Export a generating-series table as JSON");
    int td_max = 3, tr_max = 4;
    std::string out_path;
    bool table_connected = false;
    table->add_option("--dmax", td_max);
    table->add_option("--rmax", tr_max);
    table->add_option("--out", out_path, "Output file (stdout when omitted)");
    table->add_flag("--connected", table_connected, "Export the log-transformed table");

    CLI11_PARSE(app, argc, argv);

    HurwitzEngine engine;
    engine.set_work_limit(work_limit);

    if (*compute) {
        Partition alpha = Partition::parse(alpha_str);
        Partition beta = Partition::parse(beta_str);
        if (alpha.sum() != beta.sum())
            throw precondition_error("|alpha| != |beta| (" + std::to_string(alpha.sum()) +
                                     " vs " + std::to_string(beta.sum()) + ")");
        ComputeResult res = compute_value(engine, genus, alpha, beta, method, aut_divided);
        int r = r_value(genus, alpha, beta);
        if (format == "json") {
            nlohmann::json j{{"genus", genus},
                             {"alpha", alpha.parts()},
                             {"beta", beta.parts()},
                             {"r", r},
                             {"value", res.value.str()},
                             {"method", res.method}};
            if (!res.checked_against.empty()) j["checked_against"] = res.checked_against;
            std::cout << j.dump() << "\n";
        } else if (format == "csv") {
            std::cout << "genus,alpha,beta,r,value,method\n"
                      << genus << ",\"" << alpha.str() << "\",\"" << beta.str() << "\"," << r
                      << "," << res.value.str() << "," << res.method << "\n";
        } else {
            std::cout << res.value.str_plain() << "\n";
        }
        return kExitOk;
    }

    if (*verify) {
        std::vector<SuiteReport> reports;
        if (suite == "cross-methods") {
            reports.push_back(verify_cross_methods(engine, std::min(vd_max, 5), std::min(vr_max, 6)));
            reports.push_back(verify_worked_examples(engine));
        } else if (suite == "one-part") {
            reports.push_back(verify_special_series());
            reports.push_back(verify_one_part_suite(engine, vd_max, vg_max));
            reports.push_back(verify_diagonal_suite(engine, vd_max));
        } else if (suite == "symbols") {
            reports.push_back(verify_symbols(vg_max));
        } else if (suite == "string-dilaton") {
            reports.push_back(verify_string_dilaton(vg_max));
        } else if (suite == "join-cut") {
            reports.push_back(verify_join_cut_criterion(engine, std::min(vd_max, 5),
                                                        std::min(vr_max, 6)));
            reports.push_back(verify_roundtrip(engine, std::min(vd_max, 5), std::min(vr_max, 6)));
        } else if (suite == "ansatz") {
            reports.push_back(verify_ansatz_criterion(engine));
        } else if (suite == "polynomiality") {
            reports.push_back(verify_polynomiality(engine, vt_grid));
        } else if (suite == "all") {
            reports = verify_all(engine);
        } else {
            throw precondition_error("unknown suite '" + suite + "'");
        }
        int failures = 0;
        for (const auto& rep : reports) {
            for (const auto& check : rep.checks) {
                failures += check.pass ? 0 : 1;
                if (!quiet || !check.pass) {
                    std::cerr << (check.pass ? "PASS " : "FAIL ") << "[" << rep.suite << "] "
                              << check.name;
                    if (!check.pass && !check.detail.empty()) std::cerr << " :: " << check.detail;
                    std::cerr << "\n";
                }
            }
        }
        std::cerr << (failures == 0 ? "OK" : "FAILED") << " (" << failures << " failures)\n";
        return failures == 0 ? kExitOk : kExitVerification;
    }

    if (*symbol) {
        std::vector<int> b;
        {
            std::stringstream ss(b_str);
            std::string tok;
            while (std::getline(ss, tok, ',')) if (!tok.empty()) b.push_back(std::stoi(tok));
        }
        PicIndex idx(sym_g, sym_k, b);
        Rational def = symbol_def(idx);
        Rational wit = symbol_wittcor(idx);
        std::cout << def.str_plain() << ", " << wit.str_plain() << "\n";
        if (def != wit) {
            print_error("verification", "symbol_def != symbol_wittcor", kExitVerification);
            return kExitVerification;
        }
        return kExitOk;
    }

    if (*ray) {
        Partition alpha = Partition::parse(ray_alpha);
        Partition beta = Partition::parse(ray_beta);
        DegreeBoundsReport rep = check_degree_bounds(engine, ray_g, alpha, beta, t_max,
                                                     method_from_string(ray_method));
        RaySample sample = ray_samples(engine, ray_g, alpha, beta, t_max,
                                       method_from_string(ray_method));
        if (ray_format == "json") {
            nlohmann::json values = nlohmann::json::array();
            for (const auto& v : sample.values) values.push_back(v.str());
            nlohmann::json coeffs = nlohmann::json::array();
            for (const auto& c : rep.fit.monomial_coefficients) coeffs.push_back(c.str());
            nlohmann::json j{{"genus", ray_g},
                             {"alpha", alpha.parts()},
                             {"beta", beta.parts()},
                             {"values", values},
                             {"degree", rep.fit.degree},
                             {"leading", rep.fit.leading.str()},
                             {"coefficients", coeffs},
                             {"window", {rep.window_lo, rep.window_hi}},
                             {"window_ok", rep.ok}};
            std::cout << j.dump() << "\n";
        } else if (ray_format == "csv") {
            std::cout << "t,value\n";
            for (size_t t = 0; t < sample.values.size(); ++t)
                std::cout << t + 1 << "," << sample.values[t].str() << "\n";
            std::cout << "degree," << rep.fit.degree << "\nleading," << rep.fit.leading.str()
                      << "\nwindow_ok," << (rep.ok ? "true" : "false") << "\n";
        } else {
            std::cout << "values:";
            for (const auto& v : sample.values) std::cout << " " << v.str_plain();
            std::cout << "\ndegree " << rep.fit.degree << ", leading "
                      << rep.fit.leading.str_plain() << ", window [" << rep.window_lo << ","
                      << rep.window_hi << "] " << (rep.ok ? "ok" : "violated") << "\n";
        }
        return rep.ok ? kExitOk : kExitVerification;
    }

    if (*table) {
        SeriesTable t = engine.build_series_table(td_max, tr_max);
        if (table_connected) t = t.log();
        if (out_path.empty()) {
            t.export_json(std::cout);
        } else {
            std::ofstream out(out_path);
            if (!out) throw resource_error("cannot open " + out_path);
            t.export_json(out);
        }
        return kExitOk;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const precondition_error& e) {
        print_error("precondition", e.what(), kExitPrecondition);
        return kExitPrecondition;
    } catch (const resource_error& e) {
        print_error("resource", e.what(), kExitResource);
        return kExitResource;
    } catch (const inconsistency_error& e) {
        print_error("inconsistency", e.what(), kExitVerification);
        return kExitVerification;
    } catch (const std::exception& e) {
        print_error("error", e.what(), kExitPrecondition);
        return kExitPrecondition;
    }
}
