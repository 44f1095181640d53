#ifndef PAINLAB_CONFIG_HPP
#define PAINLAB_CONFIG_HPP

#include <cstdint>
#include <fstream>
#include <map>
#include <sstream>
#include <string>

#include "painlab/errors.hpp"
#include "painlab/report.hpp"

namespace painlab {

// Run configuration: a flat key=value file, every key validated against the
// registry below; command-line flags override file entries.
struct RunConfig {
    double tau_re = 0.3;
    double tau_im = 1.1;
    int samples = 50;           // samples per identity case
    int grid = 100;             // grid points per functional-equation pairing
    std::uint64_t seed = 20121u;
    double fd_step = 1e-5;      // plain central-difference step
    double exclusion = 0.1;     // |x-u|, |x+u| and lattice exclusion in suites
    double lattice_radius = 1e-3;
    double rk_h = 1e-3;         // fixed RK4 step
    double u0 = 0.7;            // default initial data for acceptance runs
    double v0 = 0.1;
    double t0 = 0.0;
    double t1 = 1.0;
    double tol_elliptic = 1e-9;
    double tol_elliptic_fd = 1e-6;
    double tol_funceq = 1e-8;
    double tol_selectivity = 1e-2;
    double tol_lax = 1e-7;
    double tol_lax_exact = 1e-12;
    double tol_la_relation = 1e-8;
    double tol_consistency = 1e-8;
    double tol_consistency_fail = 1e-3;
    double tol_drift = 1e-6;
    double tol_roundtrip = 1e-7;
    double tol_ode = 1e-6;

    std::string canonical() const {
        std::ostringstream os;
        os.precision(17);
        for (const auto& [k, v] : as_map()) os << k << "=" << v << "\n";
        return os.str();
    }
    std::string digest() const { return hex64(fnv1a(canonical())); }

    std::map<std::string, std::string> as_map() const {
        auto d = [](double x) {
            std::ostringstream os;
            os.precision(17);
            os << x;
            return os.str();
        };
        return {{"tau_re", d(tau_re)},
                {"tau_im", d(tau_im)},
                {"samples", std::to_string(samples)},
                {"grid", std::to_string(grid)},
                {"seed", std::to_string(seed)},
                {"fd_step", d(fd_step)},
                {"exclusion", d(exclusion)},
                {"lattice_radius", d(lattice_radius)},
                {"rk_h", d(rk_h)},
                {"u0", d(u0)},
                {"v0", d(v0)},
                {"t0", d(t0)},
                {"t1", d(t1)},
                {"tol_elliptic", d(tol_elliptic)},
                {"tol_elliptic_fd", d(tol_elliptic_fd)},
                {"tol_funceq", d(tol_funceq)},
                {"tol_selectivity", d(tol_selectivity)},
                {"tol_lax", d(tol_lax)},
                {"tol_lax_exact", d(tol_lax_exact)},
                {"tol_la_relation", d(tol_la_relation)},
                {"tol_consistency", d(tol_consistency)},
                {"tol_consistency_fail", d(tol_consistency_fail)},
                {"tol_drift", d(tol_drift)},
                {"tol_roundtrip", d(tol_roundtrip)},
                {"tol_ode", d(tol_ode)}};
    }

    void set(const std::string& key, const std::string& value) {
        auto want_d = [&](double& slot) { slot = std::stod(value); };
        if (key == "tau_re") want_d(tau_re);
        else if (key == "tau_im") want_d(tau_im);
        else if (key == "samples") samples = std::stoi(value);
        else if (key == "grid") grid = std::stoi(value);
        else if (key == "seed") seed = std::stoull(value);
        else if (key == "fd_step") want_d(fd_step);
        else if (key == "exclusion") want_d(exclusion);
        else if (key == "lattice_radius") want_d(lattice_radius);
        else if (key == "rk_h") want_d(rk_h);
        else if (key == "u0") want_d(u0);
        else if (key == "v0") want_d(v0);
        else if (key == "t0") want_d(t0);
        else if (key == "t1") want_d(t1);
        else if (key == "tol_elliptic") want_d(tol_elliptic);
        else if (key == "tol_elliptic_fd") want_d(tol_elliptic_fd);
        else if (key == "tol_funceq") want_d(tol_funceq);
        else if (key == "tol_selectivity") want_d(tol_selectivity);
        else if (key == "tol_lax") want_d(tol_lax);
        else if (key == "tol_lax_exact") want_d(tol_lax_exact);
        else if (key == "tol_la_relation") want_d(tol_la_relation);
        else if (key == "tol_consistency") want_d(tol_consistency);
        else if (key == "tol_consistency_fail") want_d(tol_consistency_fail);
        else if (key == "tol_drift") want_d(tol_drift);
        else if (key == "tol_roundtrip") want_d(tol_roundtrip);
        else if (key == "tol_ode") want_d(tol_ode);
        else throw config_error("unknown configuration key: " + key);
        validate();
    }

    void validate() const {
        for (double tol : {tol_elliptic, tol_elliptic_fd, tol_funceq, tol_selectivity, tol_lax,
                           tol_lax_exact, tol_la_relation, tol_consistency, tol_consistency_fail,
                           tol_drift, tol_roundtrip, tol_ode})
            if (!(tol > 0.0)) throw config_error("tolerances must be positive");
        if (samples <= 0 || grid <= 0) throw config_error("samples and grid must be positive");
        if (!(fd_step > 0.0) || !(rk_h > 0.0)) throw config_error("steps must be positive");
        if (!(tau_im > 0.0)) throw config_error("tau_im must be positive");
    }
};

inline RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw config_error("cannot open config file: " + path);
    RunConfig cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            if (line.find_first_not_of(" \t\r") != std::string::npos)
                throw config_error(path + ":" + std::to_string(lineno) + ": expected key=value");
            continue;
        }
        auto trim = [](std::string s) {
            const auto a = s.find_first_not_of(" \t\r");
            const auto b = s.find_last_not_of(" \t\r");
            return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
        };
        const std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
        if (key.empty()) throw config_error(path + ":" + std::to_string(lineno) + ": empty key");
        try {
            cfg.set(key, value);
        } catch (const std::invalid_argument&) {
            throw config_error(path + ":" + std::to_string(lineno) + ": bad value for " + key);
        }
    }
    return cfg;
}

} // namespace painlab

#endif
