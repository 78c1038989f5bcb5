#pragma once

#include <cstddef>
#include <span>

namespace qseal::analytics {

/// Honest reading error bound sin^2(Theta / n^alpha).
double eps_bound(double theta_cap, double alpha, std::size_t n);

/// Probability that a fake state prepared with angle theta_prime passes
/// Alice's check against a qubit sealed with angle theta:
/// cos^2(t) cos^2(t - t') + sin^2(t) sin^2(t + t').
double pass_prob_fake(double theta, double theta_prime);

/// Measure-and-leave pass probability, 1 - (1/2) sin^2(2 theta).
double pass_prob_leave(double theta);

/// Average of pass_prob_fake over theta uniform on [-Theta/n^alpha,
/// Theta/n^alpha], by adaptive quadrature to 1e-10 absolute.
double avg_pass_prob(double theta_cap, double alpha, std::size_t n, double theta_prime);

/// Same average via the expanded antiderivative:
/// 1/2 + (1/2) cos(2 t') (1/2 + sin(4 d) / (8 d)), d the interval half-width.
double avg_pass_prob_closed_form(double theta_cap, double alpha, std::size_t n,
                                 double theta_prime);

/// Product evasion probability over the read qubits' angles.
double evade_prob_individual(std::span<const double> thetas);

/// Information yield of collapsing into an m-dimensional subspace, n - log2(m).
double info_bound(std::size_t n, double m);

/// Collective evasion bound 2^-k * prod 2 cos^2(theta_i). May exceed 1 for
/// small k; reported raw (callers can clamp).
double evade_bound_collective(std::span<const double> thetas, double k);

/// Per-basis-vector amplitude bound prod cos^2(theta_i).
double per_v_amplitude_bound(std::span<const double> thetas);

}  // namespace qseal::analytics
