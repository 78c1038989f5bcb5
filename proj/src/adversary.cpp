#include "qseal/adversary.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace qseal {

namespace {

double fake_angle(const IndividualAttack& attack, std::size_t slot) {
    if (const auto* fake = std::get_if<IndividualAttack::Fake>(&attack.fake_policy)) {
        return fake->theta_prime;
    }
    const auto& per_qubit = std::get<IndividualAttack::FakePerQubit>(attack.fake_policy);
    return per_qubit.theta_primes.at(slot);
}

Subspace build_random_subspace(std::size_t n, std::uint64_t m, Rng& rng) {
    const std::uint64_t dim = std::uint64_t{1} << n;
    if (m < 1 || m > dim) {
        throw std::invalid_argument("random subspace dimension out of range");
    }
    // Floyd's sampling of m distinct indices.
    std::vector<std::uint64_t> picked;
    picked.reserve(m);
    for (std::uint64_t j = dim - m; j < dim; ++j) {
        std::uint64_t t = rng.below(j + 1);
        if (std::find(picked.begin(), picked.end(), t) != picked.end()) t = j;
        picked.push_back(t);
    }
    return Subspace(n, std::move(picked));
}

Subspace build_parity_subspace(std::size_t n, int target_parity) {
    std::vector<std::uint64_t> indices;
    indices.reserve(std::uint64_t{1} << (n - 1));
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
        if ((std::popcount(v) & 1) == (target_parity & 1)) {
            indices.push_back(v);
        }
    }
    return Subspace(n, std::move(indices));
}

Subspace build_prefix_subspace(std::size_t n, std::size_t j, std::uint64_t prefix) {
    // Qubit 0 is the most significant bit of the basis index.
    const std::uint64_t block = std::uint64_t{1} << (n - j);
    std::vector<std::uint64_t> indices(block);
    std::iota(indices.begin(), indices.end(), prefix * block);
    return Subspace(n, std::move(indices));
}

}  // namespace

IndividualAttackResult attack_individual(ProductState& public_state,
                                         const IndividualAttack& attack, Rng& rng) {
    IndividualAttackResult result;
    result.learned_bits.reserve(attack.read_indices.size());
    for (std::size_t slot = 0; slot < attack.read_indices.size(); ++slot) {
        const std::size_t idx = attack.read_indices[slot];
        if (idx >= public_state.n_qubits()) {
            throw std::out_of_range("attack index beyond the public state");
        }
        auto [outcome, post] = measure_computational(public_state.factors[idx], rng);
        result.learned_bits.push_back(outcome);
        if (std::holds_alternative<IndividualAttack::Leave>(attack.fake_policy)) {
            public_state.factors[idx] = post;
        } else {
            public_state.factors[idx] = make_qubit(outcome, fake_angle(attack, slot));
        }
    }
    return result;
}

CollectiveAttackResult attack_collective(StateVector& public_state, const CollectiveAttack& attack,
                                         Rng& rng) {
    const std::size_t n = public_state.n_qubits();

    if (const auto* prefix = std::get_if<CollectiveAttack::Prefix>(&attack.policy)) {
        const std::size_t j = prefix->j;
        if (j > n) {
            throw std::invalid_argument("prefix length exceeds qubit count");
        }
        // Computational measurement of the first j qubits: a 2^j-outcome
        // projective measurement. Sample the prefix from the Born marginal
        // and collapse into the matching subspace.
        const std::uint64_t block = std::uint64_t{1} << (n - j);
        std::vector<double> marginal(std::uint64_t{1} << j, 0.0);
        for (std::uint64_t v = 0; v < public_state.dim(); ++v) {
            const double a = public_state.amplitude(v);
            marginal[v / block] += a * a;
        }
        double u = rng.canonical();
        std::uint64_t outcome = 0;
        for (std::uint64_t p = 0; p < marginal.size(); ++p) {
            if (u < marginal[p] || p + 1 == marginal.size()) {
                outcome = p;
                break;
            }
            u -= marginal[p];
        }
        Subspace subspace = build_prefix_subspace(n, j, outcome);
        public_state = restrict_to_subspace(public_state, subspace);
        const double info = static_cast<double>(j);
        return {std::move(subspace), true, marginal[outcome], info};
    }

    Subspace subspace = [&] {
        if (const auto* random = std::get_if<CollectiveAttack::Random>(&attack.policy)) {
            return build_random_subspace(n, random->m, rng);
        }
        if (const auto* parity = std::get_if<CollectiveAttack::Parity>(&attack.policy)) {
            if (n < 1) throw std::invalid_argument("parity attack needs at least one qubit");
            return build_parity_subspace(n, parity->target_parity);
        }
        return Subspace(n, std::get<CollectiveAttack::Explicit>(attack.policy).basis_indices);
    }();

    auto [collapsed, post, norm_in_v] = project_onto_subspace(public_state, subspace, rng);
    public_state = std::move(post);
    const double info =
        static_cast<double>(n) - std::log2(static_cast<double>(subspace.dimension()));
    return {std::move(subspace), collapsed, norm_in_v, info};
}

}  // namespace qseal
