#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "qseal/quantum.hpp"
#include "qseal/rng.hpp"

namespace qseal {

/// Dishonest-reader strategy on individual qubits: measure a chosen index
/// set in the computational basis, then either leave the collapsed qubits
/// as they are or replace each with a fake rotated state.
struct IndividualAttack {
    std::vector<std::size_t> read_indices;  // zero-based qubit positions

    struct Leave {};
    struct Fake {
        double theta_prime = 0.0;
    };
    /// Per-qubit fake angles, parallel to read_indices.
    struct FakePerQubit {
        std::vector<double> theta_primes;
    };
    std::variant<Leave, Fake, FakePerQubit> fake_policy = Leave{};
};

struct IndividualAttackResult {
    std::vector<int> learned_bits;  // parallel to read_indices
};

/// Apply an individual attack to the public product state. Never touches
/// anything but the state handed in.
IndividualAttackResult attack_individual(ProductState& public_state,
                                         const IndividualAttack& attack, Rng& rng);

/// Collective strategy: collapse the whole public state into a
/// computational-basis subspace V chosen by policy.
struct CollectiveAttack {
    struct Random {
        std::uint64_t m = 1;  // subspace dimension
    };
    /// Measure the first j qubits in the computational basis and keep the
    /// subspace matching the observed prefix.
    struct Prefix {
        std::size_t j = 0;
    };
    /// The half-space of basis indices with the chosen bit parity.
    struct Parity {
        int target_parity = 0;
    };
    struct Explicit {
        std::vector<std::uint64_t> basis_indices;
    };
    std::variant<Random, Prefix, Parity, Explicit> policy = Random{};
};

struct CollectiveAttackResult {
    Subspace subspace;
    bool collapsed = false;
    double norm_in_v = 0.0;
    double info_bits = 0.0;  // n - log2(m)
};

/// Apply a collective attack to a dense public state, mutating it to the
/// post-measurement state. info_bits reports the information yield of the
/// subspace dimension regardless of which outcome occurred.
CollectiveAttackResult attack_collective(StateVector& public_state, const CollectiveAttack& attack,
                                         Rng& rng);

}  // namespace qseal
