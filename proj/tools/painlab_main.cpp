// painlab: batch verification front end.
// Subcommands: selftest, verify, classify, integrate, report-merge.
// Exit codes: 0 = pass, 1 = quantitative failure, 2 = usage/config error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "painlab/config.hpp"
#include "painlab/suites.hpp"

namespace {

using namespace painlab;

cplx parse_complex(const std::string& s) {
    // forms: "0.3+1.1i", "1.1i", "0.3"
    std::string body = s;
    bool has_i = false;
    if (!body.empty() && (body.back() == 'i' || body.back() == 'I')) {
        has_i = true;
        body.pop_back();
    }
    if (!has_i) return cplx(std::stod(body), 0.0);
    // split at the last +/- that is not an exponent sign
    for (size_t k = body.size(); k-- > 1;) {
        const char c = body[k];
        if ((c == '+' || c == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
            const double re = std::stod(body.substr(0, k));
            std::string im = body.substr(k);
            if (im == "+" || im == "-") im += "1";
            return cplx(re, std::stod(im));
        }
    }
    if (body.empty() || body == "+") return cplx(0.0, 1.0);
    if (body == "-") return cplx(0.0, -1.0);
    return cplx(0.0, std::stod(body));
}

void write_output(const ordered_json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw config_error("cannot open output file: " + out_path);
    out << j.dump(2) << "\n";
}

int emit_report(const ResidualReport& rep, const RunConfig& cfg, const std::string& out_path) {
    write_output(report_to_json(rep, cfg.digest()), out_path);
    return rep.pass() ? 0 : 1;
}

ordered_json classification_json(const ClassificationResult& r) {
    ordered_json j;
    j["schema_version"] = 1;
    j["case"] = r.case_name;
    ordered_json fams = ordered_json::array();
    for (const auto& f : r.families) {
        ordered_json jf;
        jf["name"] = f.name;
        jf["coefficients"] = f.coefficients;
        jf["odes"] = f.odes;
        jf["free_params"] = f.free_params;
        fams.push_back(jf);
    }
    j["families"] = fams;
    if (!r.hyp_two_exponents.empty()) j["exponents"] = r.hyp_two_exponents;
    j["constraints"] = r.constraints;
    return j;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"painlab: numerical and exact verification of the Painleve potential catalog,"
                 " its functional equations, and the matching connection pairs"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string config_path, out_path, tau_str;
    std::optional<int> samples_opt, grid_opt;
    std::optional<std::uint64_t> seed_opt;
    app.add_option("--config", config_path, "key=value configuration file");
    app.add_option("--out", out_path, "output path (default: stdout)");

    auto* selftest = app.add_subcommand("selftest", "run the special-function identity battery");
    std::string domain = "elliptic";
    selftest->add_option("domain", domain, "elliptic | all")
        ->check(CLI::IsMember({"elliptic", "all"}));
    selftest->add_option("--tau", tau_str, "modular parameter, e.g. 0.3+1.1i");
    selftest->add_option("--samples", samples_opt, "samples per identity");
    selftest->add_option("--seed", seed_opt, "sampling seed");

    auto* verify = app.add_subcommand("verify", "verify one family");
    std::string kind, family = "p1", bkind_str;
    bool no_shift = false;
    verify->add_option("kind", kind, "funceq | laxpair")->required()
        ->check(CLI::IsMember({"funceq", "laxpair"}));
    verify->add_option("--family", family, "family name")->required();
    verify->add_option("--bkind", bkind_str, "override the b-function shape (funceq)");
    verify->add_flag("--no-shift", no_shift, "skip the quantum parameter shifts (laxpair)");
    verify->add_option("--grid", grid_opt, "grid size");
    verify->add_option("--seed", seed_opt, "sampling seed");

    auto* classify_cmd = app.add_subcommand("classify", "run a classification case");
    std::string case_name;
    classify_cmd
        ->add_option("case", case_name, "rat-one | rat-two | hyp-one | hyp-two | elliptic | elliptic-one-zero")
        ->required();

    auto* integrate_cmd = app.add_subcommand("integrate", "integrate a classical trajectory, CSV output");
    std::string int_family = "p1";
    double u0 = 0.7, v0 = 0.1, t0 = 0.0, t1 = 1.0, h = 1e-3;
    bool adaptive = false;
    integrate_cmd->add_option("--family", int_family, "family name")->required();
    integrate_cmd->add_option("--u0", u0, "initial position");
    integrate_cmd->add_option("--v0", v0, "initial velocity");
    integrate_cmd->add_option("--t0", t0, "start time");
    integrate_cmd->add_option("--t1", t1, "end time");
    integrate_cmd->add_option("--step", h, "step size");
    integrate_cmd->add_flag("--adaptive", adaptive, "embedded adaptive stepping");

    auto* merge = app.add_subcommand("report-merge", "merge report JSON files");
    std::string merge_out;
    std::vector<std::string> merge_in;
    merge->add_option("output", merge_out, "merged report path")->required();
    merge->add_option("inputs", merge_in, "input reports")->required()->expected(-1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return 2;
    }

    try {
        RunConfig cfg;
        if (!config_path.empty()) cfg = load_config(config_path);
        if (!tau_str.empty()) {
            const cplx tau = parse_complex(tau_str);
            cfg.tau_re = tau.real();
            cfg.tau_im = tau.imag();
        }
        if (samples_opt) cfg.samples = *samples_opt;
        if (grid_opt) cfg.grid = *grid_opt;
        if (seed_opt) cfg.seed = *seed_opt;
        cfg.validate();

        if (selftest->parsed()) {
            if (domain == "elliptic") return emit_report(suite_elliptic(cfg), cfg, out_path);
            ResidualReport all;
            all.suite = "selftest-all";
            all.seed = cfg.seed;
            all.grid = "aggregate";
            for (const ResidualReport& r :
                 {suite_elliptic(cfg), suite_funceq(cfg), suite_classify(cfg), suite_dynamics(cfg)})
                for (const auto& c : r.cases) all.cases.push_back(c);
            for (LaxFamily f : {LaxFamily::P1, LaxFamily::P2, LaxFamily::P3Trunc, LaxFamily::P3Full,
                                LaxFamily::P4, LaxFamily::P5})
                for (const auto& c : suite_laxpair(cfg, f).cases) {
                    auto cc = c;
                    cc.name = std::string(lax_family_name(f)) + ": " + c.name;
                    all.cases.push_back(cc);
                }
            return emit_report(all, cfg, out_path);
        }

        if (verify->parsed()) {
            if (kind == "funceq") {
                PotentialSpec spec;
                BKind bk;
                bool found = false;
                for (const auto& pr : funceq_soundness_pairings()) {
                    if (family_name(pr.spec.family) == family) {
                        spec = pr.spec;
                        bk = pr.bk;
                        found = true;
                        break;
                    }
                }
                if (!found) throw config_error("no functional-equation pairing for family " + family);
                if (!bkind_str.empty()) bk.shape = bshape_from_name(bkind_str);
                ResidualReport rep;
                rep.suite = "funceq " + family + "/" + bshape_name(bk.shape);
                rep.seed = cfg.seed;
                rep.grid = std::to_string(cfg.grid) + " samples";
                std::string at;
                const double r =
                    funceq_grid_residual(spec, bk, cfg.grid, cfg.seed, cfg.exclusion, &at);
                rep.add(family + "/" + bshape_name(bk.shape), r, cfg.tol_funceq, cfg.grid, at);
                return emit_report(rep, cfg, out_path);
            }
            const LaxFamily lf = lax_family_from_name(family);
            return emit_report(suite_laxpair(cfg, lf, !no_shift), cfg, out_path);
        }

        if (classify_cmd->parsed()) {
            if (case_name == "elliptic") {
                ResidualReport rep;
                rep.suite = "classification elliptic";
                rep.seed = cfg.seed;
                rep.grid = "five modular parameters";
                const auto odes =
                    verify_elliptic_coefficient_odes({0.15, 0.18, 0.21, 0.25, 0.30}, cfg.fd_step);
                rep.add("coefficient odes", odes.max_ode_residual, cfg.tol_ode, 20);
                rep.add("modulus-derivative identity", odes.max_modulus_residual, cfg.tol_ode, 5);
                return emit_report(rep, cfg, out_path);
            }
            if (case_name == "elliptic-one-zero") {
                ResidualReport rep;
                rep.suite = "classification elliptic-one-zero";
                rep.seed = cfg.seed;
                rep.grid = "24 samples";
                const auto tv = elliptic_one_zero_triviality(0.2, 24);
                rep.add("constant potential", tv.constant_residual, cfg.tol_funceq, 24);
                rep.add_exceeds("wp candidate", tv.wp_min_residual, cfg.tol_selectivity, 24);
                rep.add("wp curvature periodicity", tv.periodicity_residual, 1e-8, 24);
                return emit_report(rep, cfg, out_path);
            }
            const auto cs = classify_case_from_name(case_name);
            write_output(classification_json(solve_constraints(cs)), out_path);
            return 0;
        }

        if (integrate_cmd->parsed()) {
            PotentialSpec spec;
            if (int_family == "p1") spec = p1_hamiltonian();
            else if (int_family == "p2") spec = p2_hamiltonian(0.4);
            else if (int_family == "p3-trunc") spec = p3_truncated(0.5);
            else if (int_family == "p4") spec = p4_hamiltonian(0.3, 0.7);
            else if (int_family == "p5") spec = p5_to_hamiltonian(p5_classification(0.12, 0.38, 0.30));
            else if (int_family == "harmonic") spec = harmonic(1.0, 0.0);
            else throw config_error("integrate: unsupported family " + int_family);
            IntegratorConfig icfg;
            icfg.h = h;
            icfg.method =
                adaptive ? IntegratorConfig::Method::AdaptiveCK : IntegratorConfig::Method::RK4;
            const Trajectory tr = integrate(spec, {u0, 0.0}, {v0, 0.0}, t0, t1, icfg);
            std::ostringstream os;
            os << "t,u,udot,H\n";
            os.precision(15);
            for (size_t i = 0; i < tr.size(); ++i)
                os << tr.t[i] << "," << tr.u[i].real() << "," << tr.v[i].real() << ","
                   << tr.H[i].real() << "\n";
            if (out_path.empty()) {
                std::cout << os.str();
            } else {
                std::ofstream out(out_path);
                if (!out) throw config_error("cannot open output file: " + out_path);
                out << os.str();
            }
            return 0;
        }

        if (merge->parsed()) {
            ordered_json merged;
            merged["schema_version"] = 1;
            merged["suite"] = "merged";
            std::string digest_src;
            ordered_json cases = ordered_json::array();
            bool pass = true;
            for (const auto& path : merge_in) {
                std::ifstream in(path);
                if (!in) throw config_error("cannot open report: " + path);
                ordered_json j = ordered_json::parse(in);
                digest_src += j.value("config_digest", "");
                for (auto& c : j.at("cases")) {
                    cases.push_back(c);
                    if (!c.at("pass").get<bool>()) pass = false;
                }
            }
            merged["config_digest"] = hex64(fnv1a(digest_src));
            merged["cases"] = cases;
            merged["pass"] = pass;
            std::ofstream out(merge_out);
            if (!out) throw config_error("cannot open output file: " + merge_out);
            out << merged.dump(2) << "\n";
            return pass ? 0 : 1;
        }
        return 2;
    } catch (const config_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "report error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
