#ifndef PAINLAB_REPORT_HPP
#define PAINLAB_REPORT_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "painlab/numdiff.hpp"

namespace painlab {

using ordered_json = nlohmann::ordered_json;

// One table row of a verification suite. For ordinary cases pass means
// max_residual < tol; negative controls (title carries " [must-exceed]")
// demand the opposite and keep the same fields.
struct CaseResult {
    std::string name;
    double max_residual = 0.0;
    double tol = 0.0;
    bool pass = false;
    int samples = 0;
    std::string worst_point; // grid metadata: where the max was attained
};

struct ResidualReport {
    std::string suite;
    std::uint64_t seed = 0;
    std::string grid;
    std::vector<CaseResult> cases;

    double max_residual() const {
        double m = 0.0;
        for (const auto& c : cases) m = std::max(m, c.max_residual);
        return m;
    }
    bool pass() const {
        for (const auto& c : cases)
            if (!c.pass) return false;
        return true;
    }

    void add(const std::string& name, double max_res, double tol, int samples,
             const std::string& worst = "") {
        cases.push_back({name, max_res, tol, max_res < tol, samples, worst});
    }
    void add_exceeds(const std::string& name, double observed, double threshold, int samples,
                     const std::string& worst = "") {
        cases.push_back({name + " [must-exceed]", observed, threshold, observed > threshold,
                         samples, worst});
    }
    void add_flag(const std::string& name, bool ok) { cases.push_back({name, ok ? 0.0 : 1.0, 0.5, ok, 1, ""}); }
};

inline std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

inline std::string hex64(std::uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<size_t>(i)] = digits[v & 0xf];
        v >>= 4;
    }
    return out;
}

inline ordered_json report_to_json(const ResidualReport& rep, const std::string& config_digest) {
    ordered_json j;
    j["schema_version"] = 1;
    j["suite"] = rep.suite;
    j["config_digest"] = config_digest;
    j["seed"] = rep.seed;
    j["grid"] = rep.grid;
    ordered_json cases = ordered_json::array();
    for (const auto& c : rep.cases) {
        ordered_json jc;
        jc["name"] = c.name;
        jc["max_residual"] = c.max_residual;
        jc["tol"] = c.tol;
        jc["pass"] = c.pass;
        jc["samples"] = c.samples;
        if (!c.worst_point.empty()) jc["worst_point"] = c.worst_point;
        cases.push_back(jc);
    }
    j["cases"] = cases;
    j["pass"] = rep.pass();
    return j;
}

// Deterministic complex sample streams.
struct SampleGen {
    std::mt19937_64 rng;
    explicit SampleGen(std::uint64_t seed) : rng(seed) {}

    double uniform(double lo, double hi) {
        std::uniform_real_distribution<double> d(lo, hi);
        return d(rng);
    }
    cplx box(double re_lo, double re_hi, double im_lo, double im_hi) {
        return {uniform(re_lo, re_hi), uniform(im_lo, im_hi)};
    }
    // point z = a + b*tau in lattice coordinates, margins keep it generic
    cplx lattice_point(const cplx& tau, double margin = 0.08) {
        const double a = uniform(margin, 1.0 - margin);
        const double b = uniform(margin, 1.0 - margin);
        return a + b * tau;
    }
};

inline std::string point_str(cplx z) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g%+.6gi", z.real(), z.imag());
    return buf;
}

} // namespace painlab

#endif
