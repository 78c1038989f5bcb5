#include "qseal/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qseal {

namespace {

constexpr double kNormTol = 1e-12;
constexpr double kDegenerateNorm = 1e-300;

void require_normalized(double norm_sq, const char* what) {
    if (std::abs(norm_sq - 1.0) > 1e-9) {
        throw std::invalid_argument(std::string(what) + " is not normalized");
    }
}

}  // namespace

StateVector::StateVector(std::size_t n_qubits, std::vector<double> amplitudes)
    : n_qubits_(n_qubits), amps_(std::move(amplitudes)) {
    if (amps_.size() != (std::uint64_t{1} << n_qubits_)) {
        throw std::invalid_argument("amplitude vector length must be 2^n_qubits");
    }
}

StateVector StateVector::basis_state(std::size_t n_qubits, std::uint64_t index) {
    std::vector<double> amps(std::uint64_t{1} << n_qubits, 0.0);
    amps.at(index) = 1.0;
    return StateVector(n_qubits, std::move(amps));
}

double StateVector::norm_sq() const {
    double s = 0.0;
    for (double a : amps_) s += a * a;
    return s;
}

Subspace::Subspace(std::size_t n_qubits, std::vector<std::uint64_t> basis_indices)
    : n_qubits_(n_qubits), indices_(std::move(basis_indices)) {
    std::sort(indices_.begin(), indices_.end());
    indices_.erase(std::unique(indices_.begin(), indices_.end()), indices_.end());
    const std::uint64_t dim = std::uint64_t{1} << n_qubits_;
    if (indices_.empty()) {
        throw std::invalid_argument("subspace must contain at least one basis index");
    }
    if (indices_.back() >= dim) {
        throw std::invalid_argument("subspace index out of range for n_qubits");
    }
}

QubitState make_qubit(int bit, double theta) {
    if (bit != 0 && bit != 1) {
        throw std::invalid_argument("bit must be 0 or 1");
    }
    if (std::abs(theta) >= std::numbers::pi / 4.0) {
        throw std::invalid_argument("|theta| must be below pi/4");
    }
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    return bit == 0 ? QubitState{c, s} : QubitState{s, c};
}

StateVector expand(const ProductState& product, std::size_t max_qubits) {
    const std::size_t n = product.n_qubits();
    if (n < 1) {
        throw std::invalid_argument("product state must have at least one qubit");
    }
    if (n > max_qubits) {
        throw std::length_error("dense expansion exceeds the configured qubit limit");
    }
    // Qubit 0 is the most significant bit of the basis index.
    std::vector<double> amps{1.0};
    for (const QubitState& f : product.factors) {
        std::vector<double> next(amps.size() * 2);
        for (std::size_t i = 0; i < amps.size(); ++i) {
            next[2 * i] = amps[i] * f.a0;
            next[2 * i + 1] = amps[i] * f.a1;
        }
        amps = std::move(next);
    }
    return StateVector(n, std::move(amps));
}

MeasureResult measure_computational(const QubitState& state, Rng& rng) {
    require_normalized(state.norm_sq(), "qubit state");
    const int outcome = rng.bernoulli(state.a1 * state.a1) ? 1 : 0;
    return {outcome, outcome == 0 ? QubitState{1.0, 0.0} : QubitState{0.0, 1.0}};
}

ProjectPureResult project_onto_pure(const QubitState& state, const QubitState& target, Rng& rng) {
    require_normalized(state.norm_sq(), "qubit state");
    require_normalized(target.norm_sq(), "projection target");
    const double ov = state.overlap(target);
    const bool pass = rng.bernoulli(ov * ov);
    return {pass, pass ? target : target.orthogonal()};
}

ProjectSubspaceResult project_onto_subspace(const StateVector& state, const Subspace& subspace,
                                            Rng& rng) {
    if (subspace.n_qubits() != state.n_qubits()) {
        throw std::invalid_argument("subspace and state qubit counts differ");
    }
    double norm_in_v = 0.0;
    for (std::uint64_t v : subspace.basis_indices()) {
        const double a = state.amplitude(v);
        norm_in_v += a * a;
    }
    if (norm_in_v < kDegenerateNorm) {
        // State has no weight in V; the complement outcome is certain.
        return {false, state, 0.0};
    }
    const bool collapsed = rng.bernoulli(norm_in_v);
    std::vector<double> amps(state.dim(), 0.0);
    if (collapsed) {
        const double inv = 1.0 / std::sqrt(norm_in_v);
        for (std::uint64_t v : subspace.basis_indices()) {
            amps[v] = state.amplitude(v) * inv;
        }
    } else {
        const double out = 1.0 - norm_in_v;
        if (out < kDegenerateNorm) {
            // V was the full support; the complement branch cannot occur with
            // nonzero probability, keep the state unchanged.
            return {true, state, norm_in_v};
        }
        const double inv = 1.0 / std::sqrt(out);
        amps = state.amplitudes();
        for (double& a : amps) a *= inv;
        for (std::uint64_t v : subspace.basis_indices()) amps[v] = 0.0;
        // Renormalize after zeroing to keep the invariant tight.
        double s = 0.0;
        for (double a : amps) s += a * a;
        const double fix = 1.0 / std::sqrt(s);
        for (double& a : amps) a *= fix;
    }
    StateVector post(state.n_qubits(), std::move(amps));
    if (std::abs(post.norm_sq() - 1.0) > kNormTol) {
        throw std::runtime_error("projection produced a non-normalized state");
    }
    return {collapsed, std::move(post), norm_in_v};
}

StateVector restrict_to_subspace(const StateVector& state, const Subspace& subspace) {
    if (subspace.n_qubits() != state.n_qubits()) {
        throw std::invalid_argument("subspace and state qubit counts differ");
    }
    double norm_in_v = 0.0;
    for (std::uint64_t v : subspace.basis_indices()) {
        const double a = state.amplitude(v);
        norm_in_v += a * a;
    }
    if (norm_in_v < kDegenerateNorm) {
        throw std::invalid_argument("state has no weight in the subspace");
    }
    std::vector<double> amps(state.dim(), 0.0);
    const double inv = 1.0 / std::sqrt(norm_in_v);
    for (std::uint64_t v : subspace.basis_indices()) {
        amps[v] = state.amplitude(v) * inv;
    }
    return StateVector(state.n_qubits(), std::move(amps));
}

double overlap_sq(const StateVector& a, const StateVector& b) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("state dimensions differ");
    }
    double ov = 0.0;
    for (std::uint64_t i = 0; i < a.dim(); ++i) {
        ov += a.amplitude(i) * b.amplitude(i);
    }
    return ov * ov;
}

}  // namespace qseal
