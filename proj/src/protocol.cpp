#include "qseal/protocol.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qseal {

namespace {

ProductState sealed_target(const ProtocolParams& params, const BitString& bits,
                           const std::vector<double>& thetas) {
    ProductState target;
    target.factors.reserve(params.n);
    for (std::size_t i = 0; i < params.n; ++i) {
        target.factors.push_back(make_qubit(bits[i], thetas[i]));
    }
    return target;
}

}  // namespace

double ProtocolParams::theta_range() const {
    return theta_cap / std::pow(static_cast<double>(n), alpha);
}

std::vector<std::string> validate(const ProtocolParams& params) {
    constexpr double pi = std::numbers::pi;
    if (params.n < 1) {
        throw std::invalid_argument("params.n must satisfy n >= 1");
    }
    if (!(params.theta_cap > 0.0 && params.theta_cap < pi / 4.0)) {
        throw std::invalid_argument("params.theta_cap must satisfy 0 < Theta < pi/4");
    }
    if (!(params.alpha > 0.0 && params.alpha < 0.5)) {
        throw std::invalid_argument("params.alpha must satisfy 0 < alpha < 1/2");
    }
    std::vector<std::string> warnings;
    if (params.theta_cap > pi / 8.0) {
        warnings.push_back("Theta exceeds pi/8; the protocol assumes Theta well below pi/4");
    }
    return warnings;
}

SealedString::SealedString(ProtocolParams params, BitString bits, std::vector<double> thetas,
                           ProductState state)
    : params_(params), bits_(std::move(bits)), thetas_(std::move(thetas)), state_(std::move(state)) {
    if (bits_.size() != params_.n || thetas_.size() != params_.n ||
        std::get<ProductState>(state_).n_qubits() != params_.n) {
        throw std::invalid_argument("sealed string component lengths disagree with params.n");
    }
}

void SealedString::set_dense_state(StateVector state) {
    if (state.n_qubits() != params_.n) {
        throw std::invalid_argument("dense state qubit count disagrees with params.n");
    }
    state_ = std::move(state);
}

StateVector SealedString::to_dense(std::size_t max_qubits) const {
    if (is_product()) {
        return expand(product_state(), max_qubits);
    }
    return dense_state();
}

SealedString seal(const ProtocolParams& params, const BitString& bits, Rng& rng) {
    validate(params);
    if (bits.size() != params.n) {
        throw std::invalid_argument("bit string length must equal params.n");
    }
    const double range = params.theta_range();
    std::vector<double> thetas(params.n);
    for (double& t : thetas) {
        t = rng.uniform(-range, range);
    }
    return SealedString(params, bits, thetas, sealed_target(params, bits, thetas));
}

SealedString seal_pinned(const ProtocolParams& params, const BitString& bits, double theta_value) {
    validate(params);
    if (bits.size() != params.n) {
        throw std::invalid_argument("bit string length must equal params.n");
    }
    if (std::abs(theta_value) > params.theta_range()) {
        throw std::invalid_argument("pinned theta outside [-Theta/n^alpha, Theta/n^alpha]");
    }
    std::vector<double> thetas(params.n, theta_value);
    return SealedString(params, bits, thetas, sealed_target(params, bits, thetas));
}

ReadResult read_honest(SealedString& sealed, Rng& rng) {
    if (!sealed.is_product()) {
        throw std::logic_error("honest reading requires a product public state");
    }
    ProductState& state = sealed.product_state();
    BitString out(sealed.n());
    for (std::size_t i = 0; i < sealed.n(); ++i) {
        auto [outcome, post] = measure_computational(state.factors[i], rng);
        out[i] = outcome;
        state.factors[i] = post;
    }
    return {std::move(out)};
}

CheckReport check(SealedString& sealed, Rng& rng, bool early_exit) {
    CheckReport report;
    report.rng_stream = rng.stream_id();
    if (sealed.is_product()) {
        ProductState& state = sealed.product_state();
        for (std::size_t i = 0; i < sealed.n(); ++i) {
            const QubitState target =
                make_qubit(sealed.alice_bits()[i], sealed.alice_thetas()[i]);
            auto [pass, post] = project_onto_pure(state.factors[i], target, rng);
            state.factors[i] = post;
            report.per_qubit_pass.push_back(pass);
            if (!pass && early_exit) break;
        }
    } else {
        const StateVector target = expand(
            sealed_target(sealed.params(), sealed.alice_bits(), sealed.alice_thetas()));
        const StateVector& current = sealed.dense_state();
        double ov = 0.0;
        for (std::uint64_t i = 0; i < target.dim(); ++i) {
            ov += target.amplitude(i) * current.amplitude(i);
        }
        const bool pass = rng.bernoulli(ov * ov);
        if (pass) {
            report.per_qubit_pass.push_back(true);
            sealed.set_dense_state(target);
        } else {
            report.per_qubit_pass.push_back(false);
            // Collapse onto the component orthogonal to the target.
            std::vector<double> amps(current.amplitudes());
            for (std::uint64_t i = 0; i < target.dim(); ++i) {
                amps[i] -= ov * target.amplitude(i);
            }
            double s = 0.0;
            for (double a : amps) s += a * a;
            if (s < 1e-300) {
                // Current state was (up to sign) the target; a fail branch
                // with zero probability cannot be realized.
                sealed.set_dense_state(target);
                report.per_qubit_pass.back() = true;
            } else {
                const double inv = 1.0 / std::sqrt(s);
                for (double& a : amps) a *= inv;
                sealed.set_dense_state(StateVector(sealed.n(), std::move(amps)));
            }
        }
    }
    bool all_pass = true;
    for (bool p : report.per_qubit_pass) all_pass = all_pass && p;
    report.verdict = all_pass ? Verdict::Unread : Verdict::Read;
    return report;
}

}  // namespace qseal
