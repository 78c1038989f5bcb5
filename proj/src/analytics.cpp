#include "qseal/analytics.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qseal::analytics {

namespace {

void require_angle(double theta, const char* what) {
    if (std::abs(theta) >= std::numbers::pi / 4.0) {
        throw std::invalid_argument(std::string(what) + " must have magnitude below pi/4");
    }
}

double theta_range(double theta_cap, double alpha, std::size_t n) {
    if (theta_cap <= 0.0) throw std::invalid_argument("Theta must be positive");
    if (n < 1) throw std::invalid_argument("n must be at least 1");
    return theta_cap / std::pow(static_cast<double>(n), alpha);
}

}  // namespace

double eps_bound(double theta_cap, double alpha, std::size_t n) {
    const double s = std::sin(theta_range(theta_cap, alpha, n));
    return s * s;
}

double pass_prob_fake(double theta, double theta_prime) {
    require_angle(theta, "theta");
    require_angle(theta_prime, "theta_prime");
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    const double cd = std::cos(theta - theta_prime);
    const double sd = std::sin(theta + theta_prime);
    return c * c * cd * cd + s * s * sd * sd;
}

double pass_prob_leave(double theta) {
    require_angle(theta, "theta");
    const double s2 = std::sin(2.0 * theta);
    return 1.0 - 0.5 * s2 * s2;
}

double avg_pass_prob(double theta_cap, double alpha, std::size_t n, double theta_prime) {
    const double d = theta_range(theta_cap, alpha, n);
    require_angle(theta_prime, "theta_prime");
    double error = 0.0;
    const double integral = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
        [theta_prime](double theta) { return pass_prob_fake(theta, theta_prime); }, -d, d, 10,
        1e-12, &error);
    if (error > 1e-10) {
        throw std::runtime_error("quadrature did not converge to the requested tolerance");
    }
    return integral / (2.0 * d);
}

double avg_pass_prob_closed_form(double theta_cap, double alpha, std::size_t n,
                                 double theta_prime) {
    const double d = theta_range(theta_cap, alpha, n);
    require_angle(theta_prime, "theta_prime");
    // The integrand reduces to (1/2)(1 + sin 2t sin 2t' + cos^2 2t cos 2t');
    // the odd term vanishes and cos^2 2t averages to 1/2 + sin(4d)/(8d).
    return 0.5 + 0.5 * std::cos(2.0 * theta_prime) * (0.5 + std::sin(4.0 * d) / (8.0 * d));
}

double evade_prob_individual(std::span<const double> thetas) {
    double p = 1.0;
    for (double t : thetas) {
        p *= pass_prob_leave(t);
    }
    return p;
}

double info_bound(std::size_t n, double m) {
    const double dim = std::pow(2.0, static_cast<double>(n));
    if (m < 1.0 || m > dim) {
        throw std::invalid_argument("subspace dimension must lie in [1, 2^n]");
    }
    return static_cast<double>(n) - std::log2(m);
}

double evade_bound_collective(std::span<const double> thetas, double k) {
    if (k < 0.0 || k > static_cast<double>(thetas.size())) {
        throw std::invalid_argument("k must lie in [0, n]");
    }
    double bound = std::pow(2.0, -k);
    for (double t : thetas) {
        require_angle(t, "theta");
        const double c = std::cos(t);
        bound *= 2.0 * c * c;
    }
    return bound;
}

double per_v_amplitude_bound(std::span<const double> thetas) {
    double bound = 1.0;
    for (double t : thetas) {
        require_angle(t, "theta");
        const double c = std::cos(t);
        bound *= c * c;
    }
    return bound;
}

}  // namespace qseal::analytics
