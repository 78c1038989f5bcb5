#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "qseal/rng.hpp"

namespace qseal {

/// Amplitude pair (a0, a1) of a single qubit in the computational basis.
/// All states in this library are real-valued.
struct QubitState {
    double a0 = 1.0;
    double a1 = 0.0;

    double norm_sq() const { return a0 * a0 + a1 * a1; }
    double overlap(const QubitState& other) const { return a0 * other.a0 + a1 * other.a1; }
    /// The orthogonal complement within the real qubit plane.
    QubitState orthogonal() const { return {-a1, a0}; }
};

/// n-qubit product state, one amplitude pair per qubit. Scales to large n
/// since no dense vector is materialized.
struct ProductState {
    std::vector<QubitState> factors;

    std::size_t n_qubits() const { return factors.size(); }
};

/// Dense real amplitude vector over the 2^n computational basis states.
class StateVector {
public:
    StateVector() = default;
    StateVector(std::size_t n_qubits, std::vector<double> amplitudes);

    /// Computational basis state |index> on n qubits.
    static StateVector basis_state(std::size_t n_qubits, std::uint64_t index);

    std::size_t n_qubits() const { return n_qubits_; }
    std::uint64_t dim() const { return std::uint64_t{1} << n_qubits_; }
    const std::vector<double>& amplitudes() const { return amps_; }
    double amplitude(std::uint64_t index) const { return amps_[index]; }

    double norm_sq() const;

private:
    std::size_t n_qubits_ = 0;
    std::vector<double> amps_;
};

/// Set of computational-basis indices an adversary collapses into.
class Subspace {
public:
    Subspace(std::size_t n_qubits, std::vector<std::uint64_t> basis_indices);

    std::size_t n_qubits() const { return n_qubits_; }
    std::uint64_t dimension() const { return indices_.size(); }
    const std::vector<std::uint64_t>& basis_indices() const { return indices_; }

private:
    std::size_t n_qubits_;
    std::vector<std::uint64_t> indices_;  // sorted, duplicate-free
};

inline constexpr std::size_t kDefaultDenseMaxQubits = 20;

/// Qubit encoding a bit: amplitude cos(theta) on |bit>, sin(theta) on the
/// flipped basis state. Rejects |theta| >= pi/4.
QubitState make_qubit(int bit, double theta);

/// Tensor-product expansion of a product state into a dense vector.
StateVector expand(const ProductState& product, std::size_t max_qubits = kDefaultDenseMaxQubits);

struct MeasureResult {
    int outcome;
    QubitState post;
};

/// Computational-basis measurement of one qubit: outcome b with probability
/// amplitude(b)^2, post-state |b>.
MeasureResult measure_computational(const QubitState& state, Rng& rng);

struct ProjectPureResult {
    bool pass;
    QubitState post;
};

/// Two-outcome projective measurement {|t><t|, 1 - |t><t|}. Passes with
/// probability overlap^2; the post-state is the target on pass and its
/// orthogonal complement on fail.
ProjectPureResult project_onto_pure(const QubitState& state, const QubitState& target, Rng& rng);

struct ProjectSubspaceResult {
    bool collapsed_into_v;
    StateVector post;
    double norm_in_v;
};

/// Two-outcome projective measurement {P_V, 1 - P_V} on a dense state.
/// norm_in_v is the exact weight of the state inside V; collapse into V
/// happens with that probability and yields the renormalized restriction.
ProjectSubspaceResult project_onto_subspace(const StateVector& state, const Subspace& subspace,
                                            Rng& rng);

/// Renormalized restriction of a state to a subspace it has weight in.
/// Used when the measurement outcome is already decided.
StateVector restrict_to_subspace(const StateVector& state, const Subspace& subspace);

/// Squared inner product of two same-dimension state vectors.
double overlap_sq(const StateVector& a, const StateVector& b);

}  // namespace qseal
