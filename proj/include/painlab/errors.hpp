#ifndef PAINLAB_ERRORS_HPP
#define PAINLAB_ERRORS_HPP

#include <complex>
#include <stdexcept>
#include <string>

namespace painlab {

// Evaluation requested too close to a pole / lattice point.
struct singularity_error : std::domain_error {
    using std::domain_error::domain_error;
};

// Series would not converge (e.g. Im tau <= 0).
struct divergence_error : std::domain_error {
    using std::domain_error::domain_error;
};

// Inverse coordinate map requested outside its principal region.
struct branch_error : std::domain_error {
    using std::domain_error::domain_error;
};

struct unknown_family_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct unsupported_gauge_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct degree_overflow_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct grid_degeneracy_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct step_failure_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Trajectory integration stopped near a movable singularity.
// Carries the last accepted state so callers can resume or report.
struct singularity_approach_error : std::runtime_error {
    double last_t;
    std::complex<double> last_u;
    std::complex<double> last_v;
    singularity_approach_error(const std::string& msg, double t,
                               std::complex<double> u, std::complex<double> v)
        : std::runtime_error(msg), last_t(t), last_u(u), last_v(v) {}
};

} // namespace painlab

#endif
