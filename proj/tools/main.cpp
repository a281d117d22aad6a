// sqfdist command line: square-free distance toolkit over Z, GF(2) and F_p.
//
// Exit codes: 0 = verified / found, 1 = refuted / not found (reports carry
// certificates either way), 2 = usage error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "sqfdist/congruence.hpp"
#include "sqfdist/fpfamily.hpp"
#include "sqfdist/fppoly.hpp"
#include "sqfdist/gf2lemmas.hpp"
#include "sqfdist/gf2poly.hpp"
#include "sqfdist/intpoly.hpp"
#include "sqfdist/neighborhood.hpp"
#include "sqfdist/parallel.hpp"
#include "sqfdist/poly_text.hpp"
#include "sqfdist/totient.hpp"
#include "sqfdist/turan.hpp"

using json = nlohmann::ordered_json;
using namespace sqf;

namespace {

constexpr const char* kVersion = "0.1.0";

struct Output {
    json report;
    int exit_code = 0;
};

json square_divisor_certificate(const IntPoly& poly, const IntPoly& witness) {
    return json{{"type", "square_divisor"},
                {"ring", "Z"},
                {"poly", to_string(poly)},
                {"witness", to_string(witness)}};
}

json square_divisor_certificate_fp(const FpPoly& poly, const FpPoly& witness) {
    return json{{"type", "square_divisor"},
                {"ring", "Fp"},
                {"p", poly.p()},
                {"poly", to_string(poly)},
                {"witness", to_string(witness)}};
}

json squarefree_certificate(const IntPoly& poly) {
    return json{{"type", "squarefree"}, {"ring", "Z"}, {"poly", to_string(poly)}};
}

json squarefree_certificate_fp(const FpPoly& poly) {
    return json{{"type", "squarefree"},
                {"ring", "Fp"},
                {"p", poly.p()},
                {"poly", to_string(poly)}};
}

json distance_certificate(const IntPoly& a, const IntPoly& b, long max) {
    return json{{"type", "distance"},
                {"ring", "Z"},
                {"a", to_string(a)},
                {"b", to_string(b)},
                {"max", max}};
}

json blockers_json(const HardInstanceReport& r) {
    json blockers = json::array();
    for (const auto& b : r.blockers)
        blockers.push_back(json{{"perturbation", to_string(b.perturbation)},
                                {"witness", to_string(b.square_witness)}});
    return blockers;
}

Output run_squarefree_check(const std::string& poly_text, long mod_p) {
    Output out;
    out.report["result"] = json::object();
    out.report["certificates"] = json::array();
    json& result = out.report["result"];
    json& certs = out.report["certificates"];
    if (mod_p == 0) {
        IntPoly f = parse_int_poly(poly_text);
        if (f.is_zero()) throw std::invalid_argument("the zero polynomial is rejected");
        bool sf = is_squarefree(f);
        result["squarefree"] = sf;
        if (sf) {
            certs.push_back(squarefree_certificate(f));
        } else {
            IntPoly root = repeated_factor_part(f);
            result["witness"] = to_string(root * root);
            result["witness_root"] = to_string(root);
            certs.push_back(square_divisor_certificate(f, root));
            out.exit_code = 1;
        }
    } else {
        FpPoly f = parse_fp_poly(mod_p, poly_text);
        if (f.is_zero()) throw std::invalid_argument("the zero polynomial is rejected");
        bool sf = is_squarefree(f);
        result["squarefree"] = sf;
        result["p"] = mod_p;
        if (sf) {
            certs.push_back(squarefree_certificate_fp(f));
        } else {
            FpPoly root = repeated_factor_part(f);
            result["witness"] = to_string(root * root);
            result["witness_root"] = to_string(root);
            certs.push_back(square_divisor_certificate_fp(f, root));
            out.exit_code = 1;
        }
    }
    return out;
}

Output run_search(const std::string& poly_text, int budget, int degree_cap, bool force) {
    Output out;
    IntPoly f = parse_int_poly(poly_text);
    SearchReport r = nearest_squarefree(f, budget, degree_cap, force);
    out.report["result"] = json::object();
    out.report["certificates"] = json::array();
    json& result = out.report["result"];
    result["center"] = to_string(r.center);
    result["budget"] = r.budget;
    result["degree_cap"] = r.degree_cap;
    result["neighbors_tested"] = r.neighbors_tested;
    json& certs = out.report["certificates"];
    if (r.found) {
        result["found"] = to_string(*r.found);
        result["distance"] = r.distance;
        certs.push_back(squarefree_certificate(*r.found));
        certs.push_back(distance_certificate(f, *r.found, r.budget));
    } else {
        result["found"] = nullptr;
        out.exit_code = 1;
    }
    return out;
}

Output run_tail(const std::string& poly_text, std::optional<long> n, bool min_exponent,
                bool window) {
    Output out;
    IntPoly f = parse_int_poly(poly_text);
    if (f.is_zero()) throw std::invalid_argument("the zero polynomial is rejected");
    out.report["result"] = json::object();
    out.report["certificates"] = json::array();
    json& result = out.report["result"];
    json& certs = out.report["certificates"];
    if (window) {
        WindowResult w = tail_window(f);
        if (w.special_g) {
            result["special_g"] = to_string(*w.special_g);
            certs.push_back(squarefree_certificate(*w.special_g));
        } else {
            result["window"] = {{"m", w.window->m},
                                {"phi_d", w.window->phi_d},
                                {"lo", w.window->lo},
                                {"hi", w.window->hi}};
        }
        return out;
    }
    if (min_exponent) {
        mpz_class cap = f.derivative().length() + 1;
        long nmin = minimal_tail_exponent(f, cap.get_si());
        bool x2 = f.coeff(0) == 0 && f.coeff(1) == 0;
        IntPoly g = f + IntPoly::monomial(1, static_cast<int>(nmin));
        if (x2) g += IntPoly{1};
        result["n"] = nmin;
        result["g"] = to_string(g);
        result["squarefree"] = true;
        certs.push_back(squarefree_certificate(g));
        return out;
    }
    long n_used = n ? *n : static_cast<long>(mpz_class(f.derivative().length() + 1).get_si());
    IntPoly g = tail_construct(f, n_used);
    result["n"] = n_used;
    result["g"] = to_string(g);
    result["squarefree"] = true;
    certs.push_back(squarefree_certificate(g));
    return out;
}

Output run_construct_turan15(bool referee, long k, std::optional<int> degree) {
    Output out;
    out.report["result"] = json::object();
    out.report["certificates"] = json::array();
    json& result = out.report["result"];
    IntPoly f;
    if (referee) {
        CongruenceSystem system = referee_system();
        RatPoly solution = crt_solve(system);
        f = solution.to_intpoly();
        result["f0"] = to_string(solution);
        result["h"] = to_string(moduli_product(system));
    } else {
        CongruenceSystem system = turan15_system();
        RatPoly f0 = crt_solve(system);
        IntPoly h = moduli_product(system);
        IntegerizeResult integral = integerize(f0, h, 5);
        f = integral.witness;
        result["f0"] = to_string(f0);
        result["h"] = to_string(h);
        json cosets = json::array();
        for (const auto& c : integral.cosets) cosets.push_back(c.get_str());
        result["cosets"] = cosets;
    }
    if (degree) {
        f = referee ? hard_family_referee(*degree, k, f) : hard_family(*degree, k, f);
        result["degree"] = *degree;
        result["k"] = k;
    }
    HardInstanceReport report = verify_hard_instance(f, 8);
    result["f"] = to_string(f);
    result["blockers"] = blockers_json(report);
    json& certs = out.report["certificates"];
    for (const auto& b : report.blockers)
        certs.push_back(square_divisor_certificate(f + b.perturbation, b.square_witness));
    if (!report.verified) {
        result["counterexample"] = report.counterexample ? to_string(*report.counterexample) : "";
        out.exit_code = 1;
    }
    return out;
}

Output run_construct_family(long p, int d, const std::string& u_text) {
    Output out;
    FpPoly u = u_text.empty()
                   ? (p >= 5 && d == 15 ? FpPoly(p)
                                        : FpPoly::monomial(p, 1, d - family_tail_degree(p)))
                   : parse_fp_poly(p, u_text);
    FpPoly f = family_member(p, d, u);
    MemberReport report = verify_family_member(f);
    out.report["result"] = json::object();
    out.report["certificates"] = json::array();
    json& result = out.report["result"];
    result["p"] = p;
    result["d"] = d;
    result["u"] = to_string(u);
    result["f"] = to_string(f);
    json blockers = json::array();
    for (const auto& b : report.blockers)
        blockers.push_back(json{{"perturbation", to_string(b.perturbation)},
                                {"witness", to_string(b.square_witness)}});
    result["blockers"] = blockers;
    json& certs = out.report["certificates"];
    for (const auto& b : report.blockers)
        certs.push_back(square_divisor_certificate_fp(f + b.perturbation, b.square_witness));
    if (!report.verified) {
        result["refutation"] = report.refutation ? to_string(*report.refutation) : "";
        if (report.refutation) certs.push_back(squarefree_certificate_fp(*report.refutation));
        out.exit_code = 1;
    }
    return out;
}

Output run_census(std::uint64_t r_max, const std::string& threshold_text,
                  const std::string& csv_path) {
    Output out;
    mpq_class threshold(threshold_text);
    threshold.canonicalize();
    auto rows = census(r_max, threshold);
    std::string csv = "r,phi_count,ratio\n";
    for (const auto& row : rows) {
        csv += std::to_string(row.r) + "," + std::to_string(row.phi_count) + "," +
               row.ratio.get_str() + "\n";
    }
    if (!csv_path.empty()) {
        std::ofstream f(csv_path);
        if (!f.good()) throw std::runtime_error("cannot write " + csv_path);
        f << csv;
    }
    out.report["result"] = json::object();
    out.report["result"] = json::object();
    out.report["result"] = json::object();
    out.report["result"] = json::object();
    out.report["result"] = json::object();
    json& result = out.report["result"];
    result["r_max"] = r_max;
    result["threshold"] = threshold.get_str();
    result["rows"] = rows.size();
    result["csv"] = csv;
    return out;
}

Output run_verify_lemma52(int max_degree, int jobs, const std::string& checkpoint,
                          bool corollary) {
    Output out;
    TailSearchOptions opts;
    opts.jobs = jobs;
    opts.checkpoint_path = checkpoint;
    opts.corollary_mode = corollary;
    TailSearchReport r = squarefree_tail_search(max_degree, opts);
    out.report["result"] = json::object();
    json& result = out.report["result"];
    result["max_degree"] = r.max_degree;
    result["corollary_mode"] = r.corollary_mode;
    result["shards_total"] = r.shards_total;
    result["shards_skipped"] = r.shards_skipped;
    json per_degree = json::array();
    for (const auto& s : r.per_degree)
        per_degree.push_back(json{{"degree", s.degree},
                                  {"candidates", s.candidates},
                                  {"non_squarefree", s.non_squarefree},
                                  {"max_min_n", s.max_min_n},
                                  {"failures", s.failures}});
    result["per_degree"] = per_degree;
    result["ok"] = r.ok();
    if (!r.ok()) {
        result["counterexample"] = r.counterexample->to_hex();
        out.exit_code = 1;
    }
    return out;
}

Output run_verify_theorem61(long p, int d, int jobs) {
    Output out;
    FamilyCheck c = family_count_check(p, d, jobs);
    out.report["result"] = json::object();
    json& result = out.report["result"];
    result["p"] = c.p;
    result["d"] = c.d;
    result["expected_members"] = c.expected.get_str();
    result["verified_members"] = c.verified_members;
    result["distinct"] = c.distinct;
    result["ok"] = c.ok;
    if (!c.ok) {
        if (c.failure) result["failure"] = to_string(*c.failure);
        out.exit_code = 1;
    }
    return out;
}

Output run_scan_question62(long p, int d, int jobs) {
    Output out;
    ScanResult r = question62_scan(p, d, jobs);
    out.report["result"] = json::object();
    json& result = out.report["result"];
    result["p"] = r.p;
    result["d"] = r.d;
    result["max_min_distance"] = r.max_min_distance;
    result["witness"] = to_string(r.witness);
    result["scanned"] = r.scanned;
    return out;
}

bool recheck_certificate(const json& cert) {
    std::string type = cert.at("type");
    std::string ring = cert.at("ring");
    if (ring == "Z") {
        if (type == "square_divisor") {
            IntPoly poly = parse_int_poly(cert.at("poly").get<std::string>());
            IntPoly w = parse_int_poly(cert.at("witness").get<std::string>());
            if (w.degree() < 1) return false;
            return divide_exact(poly.primitive_part(), (w * w).primitive_part()).has_value();
        }
        if (type == "squarefree")
            return is_squarefree(parse_int_poly(cert.at("poly").get<std::string>()));
        if (type == "distance") {
            IntPoly a = parse_int_poly(cert.at("a").get<std::string>());
            IntPoly b = parse_int_poly(cert.at("b").get<std::string>());
            return (a - b).length() <= cert.at("max").get<long>();
        }
    } else if (ring == "Fp") {
        long p = cert.at("p").get<long>();
        if (type == "square_divisor") {
            FpPoly poly = parse_fp_poly(p, cert.at("poly").get<std::string>());
            FpPoly w = parse_fp_poly(p, cert.at("witness").get<std::string>());
            if (w.degree() < 1) return false;
            try {
                divide_exact_fp(poly, w * w);
                return true;
            } catch (const std::domain_error&) {
                return false;
            }
        }
        if (type == "squarefree")
            return is_squarefree(parse_fp_poly(p, cert.at("poly").get<std::string>()));
    }
    throw std::invalid_argument("unknown certificate type '" + type + "' over " + ring);
}

Output run_recheck(const std::string& path) {
    Output out;
    json report;
    if (path == "-") {
        std::cin >> report;
    } else {
        std::ifstream in(path);
        if (!in.good()) throw std::runtime_error("cannot read " + path);
        in >> report;
    }
    out.report["result"] = json::object();
    json& result = out.report["result"];
    int checked = 0, valid = 0;
    json details = json::array();
    if (report.contains("certificates")) {
        for (const auto& cert : report["certificates"]) {
            bool ok = recheck_certificate(cert);
            details.push_back(json{{"type", cert.at("type")}, {"ok", ok}});
            ++checked;
            if (ok) ++valid;
        }
    }
    result["checked"] = checked;
    result["valid"] = valid;
    result["details"] = details;
    result["ok"] = checked == valid;
    if (checked != valid) out.exit_code = 1;
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"square-free distance toolkit"};
    app.require_subcommand(1);

    auto* squarefree_cmd = app.add_subcommand("squarefree", "square-free predicates");
    squarefree_cmd->require_subcommand(1);
    auto* check_cmd = squarefree_cmd->add_subcommand("check", "test a polynomial");
    std::string check_poly;
    long check_mod = 0;
    check_cmd->add_option("--poly", check_poly, "polynomial text")->required();
    check_cmd->add_option("--mod", check_mod, "prime modulus (0 = over Z)");

    auto* search_cmd = app.add_subcommand("search", "nearest square-free neighbor");
    std::string search_poly;
    int search_budget = 2, search_cap = 0;
    bool search_force = false;
    search_cmd->add_option("--budget", search_budget, "L1 budget (1 or 2)")->required();
    search_cmd->add_option("--degree-cap", search_cap, "maximum degree of the neighbor")
        ->required();
    search_cmd->add_option("--poly", search_poly, "polynomial text")->required();
    search_cmd->add_flag("--allow-large-budget", search_force, "lift the budget guard");

    auto* tail_cmd = app.add_subcommand("tail", "square-free tail construction x^n + f");
    std::string tail_poly;
    long tail_n = -1;
    bool tail_min = false, tail_window_flag = false;
    tail_cmd->add_option("--poly", tail_poly, "polynomial text")->required();
    auto* tail_n_opt = tail_cmd->add_option("--n", tail_n, "tail exponent (default: L(f') + 1)")
                           ->check(CLI::PositiveNumber);
    auto* tail_min_opt =
        tail_cmd->add_flag("--min", tail_min, "smallest square-free tail exponent");
    tail_cmd->add_flag("--window", tail_window_flag, "degree window that contains a witness")
        ->excludes(tail_n_opt)
        ->excludes(tail_min_opt);
    tail_min_opt->excludes(tail_n_opt);

    auto* construct_cmd = app.add_subcommand("construct", "hard-instance constructions");
    construct_cmd->require_subcommand(1);
    auto* turan_cmd = construct_cmd->add_subcommand(
        "turan15", "degree-15 polynomial with no square-free L-distance-1 neighbor");
    bool turan_referee = false;
    long turan_k = 1;
    int turan_degree = 0;
    turan_cmd->add_flag("--referee", turan_referee, "use the unimodular-list variant");
    turan_cmd->add_option("--k", turan_k, "family multiplier (nonzero)");
    turan_cmd->add_option("--degree", turan_degree, "extend to this degree (>= 16)");
    auto* family_cmd = construct_cmd->add_subcommand("family", "hard family member over F_p");
    long family_p = 2;
    int family_d = 8;
    std::string family_u;
    family_cmd->add_option("--p", family_p, "prime modulus")->required();
    family_cmd->add_option("--d", family_d, "member degree")->required();
    family_cmd->add_option("--u", family_u, "parameter polynomial u");

    auto* census_cmd = app.add_subcommand("census", "totient censuses");
    census_cmd->require_subcommand(1);
    auto* phi_cmd = census_cmd->add_subcommand("phi", "Phi(r)/r ratio census");
    std::uint64_t census_max = 10000;
    std::string census_threshold = "2", census_csv;
    phi_cmd->add_option("--max", census_max, "largest r")->required();
    phi_cmd->add_option("--threshold", census_threshold, "ratio threshold (rational)")
        ->required();
    phi_cmd->add_option("--csv", census_csv, "also write rows to this file");

    auto* verify_cmd = app.add_subcommand("verify", "exhaustive verifications");
    verify_cmd->require_subcommand(1);
    auto* lemma52_cmd =
        verify_cmd->add_subcommand("lemma52", "square-free tails over GF(2), exhaustive");
    int l52_degree = 20, l52_jobs = 0;
    std::string l52_checkpoint;
    bool l52_corollary = false;
    lemma52_cmd->add_option("--max-degree", l52_degree, "largest degree (<= 36)")->required();
    lemma52_cmd->add_option("--jobs", l52_jobs, "worker count");
    lemma52_cmd->add_option("--checkpoint", l52_checkpoint, "shard checkpoint file");
    lemma52_cmd->add_flag("--corollary", l52_corollary, "x | f, x^2 does not divide f variant");
    auto* thm61_cmd = verify_cmd->add_subcommand("theorem61", "hard family counting over F_p");
    long t61_p = 2;
    int t61_d = 8, t61_jobs = 0;
    thm61_cmd->add_option("--p", t61_p, "prime modulus")->required();
    thm61_cmd->add_option("--d", t61_d, "member degree")->required();
    thm61_cmd->add_option("--jobs", t61_jobs, "worker count");

    auto* scan_cmd = app.add_subcommand("scan", "exhaustive distance scans");
    scan_cmd->require_subcommand(1);
    auto* q62_cmd = scan_cmd->add_subcommand(
        "question62", "max over degree-d f of the distance to square-free g");
    long q62_p = 2;
    int q62_d = 6, q62_jobs = 0;
    q62_cmd->add_option("--p", q62_p, "prime modulus")->required();
    q62_cmd->add_option("--d", q62_d, "degree")->required();
    q62_cmd->add_option("--jobs", q62_jobs, "worker count");

    auto* recheck_cmd = app.add_subcommand("recheck", "re-validate a report's certificates");
    std::string recheck_path;
    recheck_cmd->add_option("--report", recheck_path, "report file ('-' for stdin)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    auto started = std::chrono::steady_clock::now();
    Output out;
    std::string command;
    try {
        if (check_cmd->parsed()) {
            command = "squarefree check";
            out = run_squarefree_check(check_poly, check_mod);
        } else if (search_cmd->parsed()) {
            command = "search";
            out = run_search(search_poly, search_budget, search_cap, search_force);
        } else if (tail_cmd->parsed()) {
            command = "tail";
            out = run_tail(tail_poly, tail_n >= 0 ? std::optional<long>(tail_n) : std::nullopt,
                           tail_min, tail_window_flag);
        } else if (turan_cmd->parsed()) {
            command = "construct turan15";
            out = run_construct_turan15(
                turan_referee, turan_k,
                turan_degree > 0 ? std::optional<int>(turan_degree) : std::nullopt);
        } else if (family_cmd->parsed()) {
            command = "construct family";
            out = run_construct_family(family_p, family_d, family_u);
        } else if (phi_cmd->parsed()) {
            command = "census phi";
            out = run_census(census_max, census_threshold, census_csv);
        } else if (lemma52_cmd->parsed()) {
            command = "verify lemma52";
            out = run_verify_lemma52(l52_degree, l52_jobs, l52_checkpoint, l52_corollary);
        } else if (thm61_cmd->parsed()) {
            command = "verify theorem61";
            out = run_verify_theorem61(t61_p, t61_d, t61_jobs);
        } else if (q62_cmd->parsed()) {
            command = "scan question62";
            out = run_scan_question62(q62_p, q62_d, q62_jobs);
        } else if (recheck_cmd->parsed()) {
            command = "recheck";
            out = run_recheck(recheck_path);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - started)
                       .count();
    json report;
    report["command"] = command;
    json input = json::array();
    for (int i = 1; i < argc; ++i) input.push_back(argv[i]);
    report["input"] = input;
    for (auto& [key, value] : out.report.items()) report[key] = value;
    if (!report.contains("certificates")) report["certificates"] = json::array();
    report["version"] = kVersion;
    report["timing_ms"] = elapsed;
    std::cout << report.dump(2) << "\n";
    return out.exit_code;
}
