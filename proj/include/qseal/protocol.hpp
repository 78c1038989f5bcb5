#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qseal/quantum.hpp"
#include "qseal/rng.hpp"

namespace qseal {

/// Protocol constants: string length n, angle scale Theta, shrink exponent
/// alpha, and the master RNG seed.
struct ProtocolParams {
    std::size_t n = 1;
    double theta_cap = 0.1;  // Theta
    double alpha = 0.25;
    std::uint64_t seed = 0;

    /// Half-width of the per-qubit angle interval, Theta / n^alpha.
    double theta_range() const;
};

/// Throws std::invalid_argument naming the violated constraint; returns
/// human-readable warnings for legal-but-questionable settings.
std::vector<std::string> validate(const ProtocolParams& params);

using BitString = std::vector<int>;

/// A complete sealing instance. The public quantum state is what any reader
/// can touch; the bit values and angles are Alice's private records, exposed
/// only through the alice_* accessors so adversary code can be audited for
/// never calling them.
class SealedString {
public:
    SealedString(ProtocolParams params, BitString bits, std::vector<double> thetas,
                 ProductState state);

    const ProtocolParams& params() const { return params_; }
    std::size_t n() const { return params_.n; }

    bool is_product() const { return std::holds_alternative<ProductState>(state_); }
    const ProductState& product_state() const { return std::get<ProductState>(state_); }
    ProductState& product_state() { return std::get<ProductState>(state_); }
    const StateVector& dense_state() const { return std::get<StateVector>(state_); }

    /// Replace the public state with a dense vector (after a collective
    /// attack entangles it across qubits).
    void set_dense_state(StateVector state);

    /// Dense view of the current public state.
    StateVector to_dense(std::size_t max_qubits = kDefaultDenseMaxQubits) const;

    // Alice's private records.
    const BitString& alice_bits() const { return bits_; }
    const std::vector<double>& alice_thetas() const { return thetas_; }

private:
    ProtocolParams params_;
    BitString bits_;
    std::vector<double> thetas_;
    std::variant<ProductState, StateVector> state_;
};

enum class Verdict { Unread, Read };

struct CheckReport {
    std::vector<bool> per_qubit_pass;  // single entry on the dense path
    Verdict verdict = Verdict::Unread;
    std::uint64_t rng_stream = 0;
};

/// Seal a bit string: draw each theta_i uniformly on the closed interval
/// [-Theta/n^alpha, Theta/n^alpha] and encode bit i as make_qubit(b_i, theta_i).
SealedString seal(const ProtocolParams& params, const BitString& bits, Rng& rng);

/// Diagnostic variant fixing every theta_i to one value instead of sampling.
/// Not part of the protocol; exists so point formulas are directly testable.
SealedString seal_pinned(const ProtocolParams& params, const BitString& bits, double theta_value);

struct ReadResult {
    BitString bits;
};

/// Honest reading: measure every qubit in the computational basis and take
/// the outcomes as the string. Collapses the public state qubit-wise.
ReadResult read_honest(SealedString& sealed, Rng& rng);

/// Alice's check: try to project each qubit back onto its sealed state.
/// Verdict is Read iff any qubit fails. On a dense public state the check is
/// a single projection onto the full product target. With early_exit the
/// per-qubit report stops at the first failure.
CheckReport check(SealedString& sealed, Rng& rng, bool early_exit = false);

}  // namespace qseal
