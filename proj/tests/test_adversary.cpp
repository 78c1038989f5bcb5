#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qseal/adversary.hpp"
#include "qseal/analytics.hpp"
#include "qseal/protocol.hpp"

using namespace qseal;

namespace {

BitString zero_bits(std::size_t n) { return BitString(n, 0); }

std::vector<std::size_t> first_k(std::size_t k) {
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    return idx;
}

Subspace random_subspace(std::size_t n, std::uint64_t m, Rng& rng) {
    std::vector<std::uint64_t> indices;
    while (indices.size() < m) {
        const std::uint64_t v = rng.below(std::uint64_t{1} << n);
        if (std::find(indices.begin(), indices.end(), v) == indices.end()) indices.push_back(v);
    }
    return Subspace(n, std::move(indices));
}

double weight_in(const StateVector& psi, const Subspace& v) {
    double w = 0.0;
    for (std::uint64_t idx : v.basis_indices()) w += psi.amplitude(idx) * psi.amplitude(idx);
    return w;
}

}  // namespace

TEST_CASE("reading zero qubits changes nothing and the check passes") {
    ProtocolParams params{8, 0.2, 0.25, 0};
    for (std::size_t trial = 0; trial < 500; ++trial) {
        Rng rng(19, trial);
        SealedString sealed = seal(params, zero_bits(8), rng);
        IndividualAttack attack;  // empty index set
        attack_individual(sealed.product_state(), attack, rng);
        CHECK(check(sealed, rng).verdict == Verdict::Unread);
    }
}

TEST_CASE("measure-and-leave on every qubit matches the product pass probability") {
    const double theta = 0.2;
    ProtocolParams params{6, 0.3, 0.1, 0};
    const double expected = std::pow(analytics::pass_prob_leave(theta), 6.0);
    IndividualAttack attack{first_k(6), IndividualAttack::Leave{}};
    std::uint64_t passes = 0;
    const std::uint64_t trials = 100'000;
    for (std::uint64_t t = 0; t < trials; ++t) {
        Rng rng(23, t);
        SealedString sealed = seal_pinned(params, zero_bits(6), theta);
        attack_individual(sealed.product_state(), attack, rng);
        if (check(sealed, rng).verdict == Verdict::Unread) ++passes;
    }
    const double sigma = std::sqrt(expected * (1.0 - expected) / trials);
    CHECK(std::abs(static_cast<double>(passes) / trials - expected) < 3.0 * sigma);
}

TEST_CASE("faking with theta_prime matches the single-qubit pass formula") {
    const double theta = 0.22, theta_prime = 0.1;
    ProtocolParams params{1, 0.3, 0.1, 0};
    const double expected = analytics::pass_prob_fake(theta, theta_prime);
    IndividualAttack attack{first_k(1), IndividualAttack::Fake{theta_prime}};
    std::uint64_t passes = 0;
    const std::uint64_t trials = 200'000;
    for (std::uint64_t t = 0; t < trials; ++t) {
        Rng rng(29, t);
        SealedString sealed = seal_pinned(params, zero_bits(1), theta);
        attack_individual(sealed.product_state(), attack, rng);
        if (check(sealed, rng).verdict == Verdict::Unread) ++passes;
    }
    const double sigma = std::sqrt(expected * (1.0 - expected) / trials);
    CHECK(std::abs(static_cast<double>(passes) / trials - expected) < 3.0 * sigma);
}

TEST_CASE("per-qubit fake angles are honored") {
    ProtocolParams params{2, 0.3, 0.1, 0};
    Rng rng(31, 0);
    SealedString sealed = seal_pinned(params, zero_bits(2), 0.0);
    IndividualAttack attack{first_k(2), IndividualAttack::FakePerQubit{{0.1, -0.2}}};
    attack_individual(sealed.product_state(), attack, rng);
    CHECK(sealed.product_state().factors[0].a0 == doctest::Approx(std::cos(0.1)));
    CHECK(sealed.product_state().factors[1].a0 == doctest::Approx(std::cos(0.2)));
}

TEST_CASE("collective policies report the information yield") {
    ProtocolParams params{8, 0.2, 0.25, 0};
    Rng rng(37, 0);

    SUBCASE("full-space prefix is a no-op with zero information") {
        SealedString sealed = seal(params, zero_bits(8), rng);
        StateVector dense = sealed.to_dense();
        const StateVector before = dense;
        auto res = attack_collective(dense, CollectiveAttack{CollectiveAttack::Prefix{0}}, rng);
        CHECK(res.info_bits == 0.0);
        CHECK(res.collapsed);
        CHECK(overlap_sq(dense, before) == doctest::Approx(1.0));
    }

    SUBCASE("a single explicit index yields n bits") {
        SealedString sealed = seal(params, zero_bits(8), rng);
        StateVector dense = sealed.to_dense();
        auto res = attack_collective(dense, CollectiveAttack{CollectiveAttack::Explicit{{3}}}, rng);
        CHECK(res.info_bits == doctest::Approx(8.0));
    }

    SUBCASE("parity halves the space") {
        SealedString sealed = seal(params, zero_bits(8), rng);
        StateVector dense = sealed.to_dense();
        auto res = attack_collective(dense, CollectiveAttack{CollectiveAttack::Parity{0}}, rng);
        CHECK(res.info_bits == doctest::Approx(1.0));
        CHECK(res.subspace.dimension() == 128);
    }
}

TEST_CASE("prefix attack collapses onto a Born-sampled prefix") {
    ProtocolParams params{4, 0.2, 0.25, 0};
    std::uint64_t prefix_zero = 0;
    const std::uint64_t trials = 50'000;
    for (std::uint64_t t = 0; t < trials; ++t) {
        Rng rng(41, t);
        SealedString sealed = seal_pinned(params, zero_bits(4), 0.05);
        StateVector dense = sealed.to_dense();
        auto res = attack_collective(dense, CollectiveAttack{CollectiveAttack::Prefix{1}}, rng);
        CHECK(res.collapsed);
        if (res.subspace.basis_indices().front() == 0) ++prefix_zero;
    }
    // First qubit reads 0 with probability cos^2(0.05).
    const double expected = std::cos(0.05) * std::cos(0.05);
    const double sigma = std::sqrt(expected * (1.0 - expected) / trials);
    CHECK(std::abs(static_cast<double>(prefix_zero) / trials - expected) < 3.0 * sigma);
}

TEST_CASE("collapse overlap identity holds for collective attacks") {
    Rng rng(2025, 0);
    int collapsed_cases = 0;
    while (collapsed_cases < 100) {
        const std::size_t n = 2 + rng.below(11);  // 2..12
        ProtocolParams params{n, 0.2, 0.25, 0};
        SealedString sealed = seal(params, zero_bits(n), rng);
        const StateVector psi = sealed.to_dense();
        StateVector dense = psi;
        const std::uint64_t m = 1 + rng.below(std::uint64_t{1} << n);
        CollectiveAttack attack{CollectiveAttack::Explicit{
            random_subspace(n, m, rng).basis_indices()}};
        auto res = attack_collective(dense, attack, rng);
        if (!res.collapsed) continue;
        ++collapsed_cases;
        CHECK(std::abs(overlap_sq(psi, dense) - weight_in(psi, res.subspace)) < 1e-10);
    }
}

TEST_CASE("no basis amplitude exceeds the product cosine bound") {
    Rng rng(2026, 0);
    for (int c = 0; c < 50; ++c) {
        const std::size_t n = 10;
        ProtocolParams params{n, 0.6, 0.2, 0};  // wide angles to stress the bound
        SealedString sealed = seal(params, zero_bits(n), rng);
        const StateVector psi = sealed.to_dense();
        const double bound = analytics::per_v_amplitude_bound(sealed.alice_thetas());
        double max_amp_sq = 0.0;
        for (std::uint64_t v = 0; v < psi.dim(); ++v) {
            max_amp_sq = std::max(max_amp_sq, psi.amplitude(v) * psi.amplitude(v));
        }
        CHECK(max_amp_sq <= bound + 1e-12);
    }
}

TEST_CASE("collective evasion never beats the 2^-k bound") {
    Rng rng(2027, 0);
    for (int c = 0; c < 300; ++c) {
        const std::size_t n = 2 + rng.below(11);
        ProtocolParams params{n, 0.2, 0.25, 0};
        SealedString sealed = seal(params, zero_bits(n), rng);
        const StateVector psi = sealed.to_dense();
        const std::uint64_t m = 1 + rng.below(std::uint64_t{1} << n);
        const Subspace v = random_subspace(n, m, rng);
        const double k = analytics::info_bound(n, static_cast<double>(m));
        const double exact = weight_in(psi, v);
        const double bound = analytics::evade_bound_collective(sealed.alice_thetas(), k);
        CHECK(exact <= bound + 1e-12);
    }
}

TEST_CASE("the empirical best fake angle is zero") {
    // Average check-pass probability over uniformly drawn theta, per fake
    // angle on a grid; the zero-fake column must be within statistical reach
    // of the top everywhere.
    ProtocolParams params{1, 0.2, 0.25, 0};
    const double range = params.theta_range();
    const std::uint64_t trials = 20'000;
    const int points = 41;
    std::vector<double> estimates(points);
    for (int g = 0; g < points; ++g) {
        const double theta_prime = -range + 2.0 * range * g / (points - 1);
        IndividualAttack attack{first_k(1), IndividualAttack::Fake{theta_prime}};
        std::uint64_t passes = 0;
        for (std::uint64_t t = 0; t < trials; ++t) {
            Rng rng(6000 + g, t);
            SealedString sealed = seal(params, zero_bits(1), rng);
            attack_individual(sealed.product_state(), attack, rng);
            if (check(sealed, rng).verdict == Verdict::Unread) ++passes;
        }
        estimates[g] = static_cast<double>(passes) / trials;
    }
    const double at_zero = estimates[points / 2];
    const double sigma = std::sqrt(0.25 / trials);  // conservative
    for (double e : estimates) {
        CHECK(at_zero >= e - 6.0 * sigma);
    }
}

TEST_CASE("attack index bounds are enforced") {
    ProtocolParams params{4, 0.2, 0.25, 0};
    Rng rng(55, 0);
    SealedString sealed = seal(params, zero_bits(4), rng);
    IndividualAttack attack{{7}, IndividualAttack::Leave{}};
    CHECK_THROWS_AS(attack_individual(sealed.product_state(), attack, rng), std::out_of_range);
}
