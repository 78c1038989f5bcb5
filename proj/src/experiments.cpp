#include "qseal/experiments.hpp"

#include <chrono>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "qseal/analytics.hpp"

namespace qseal {

namespace {

constexpr double kZ95 = 1.959963984540054;

BitString random_bits(std::size_t n, Rng& rng) {
    BitString bits(n);
    for (int& b : bits) b = rng.bernoulli(0.5) ? 1 : 0;
    return bits;
}

std::size_t strategy_read_count(const Strategy& strategy, std::size_t n) {
    if (std::holds_alternative<HonestRead>(strategy)) return n;
    if (const auto* ind = std::get_if<IndividualAttack>(&strategy)) {
        return ind->read_indices.size();
    }
    return 0;
}

std::optional<double> analytic_reference(const ExperimentConfig& config) {
    const auto& p = config.params;
    const std::size_t k = strategy_read_count(config.strategy, p.n);
    if (std::holds_alternative<NoAttack>(config.strategy)) return 1.0;
    if (std::holds_alternative<CollectiveAttack>(config.strategy)) return std::nullopt;

    double theta_prime = 0.0;
    if (const auto* ind = std::get_if<IndividualAttack>(&config.strategy)) {
        if (const auto* fake = std::get_if<IndividualAttack::Fake>(&ind->fake_policy)) {
            theta_prime = fake->theta_prime;
        } else if (std::holds_alternative<IndividualAttack::FakePerQubit>(ind->fake_policy)) {
            return std::nullopt;  // heterogeneous fakes have no single closed form here
        }
    }
    double per_qubit;
    if (config.pinned_theta) {
        per_qubit = analytics::pass_prob_fake(*config.pinned_theta, theta_prime);
    } else {
        per_qubit = analytics::avg_pass_prob(p.theta_cap, p.alpha, p.n, theta_prime);
    }
    return std::pow(per_qubit, static_cast<double>(k));
}

struct TrialTally {
    std::uint64_t unread = 0;
    std::uint64_t bits_read = 0;
    std::uint64_t bit_errors = 0;
};

void run_one_trial(const ExperimentConfig& config, Rng& rng, TrialTally& tally) {
    const auto& params = config.params;
    const BitString bits = random_bits(params.n, rng);
    SealedString sealed = config.pinned_theta ? seal_pinned(params, bits, *config.pinned_theta)
                                              : seal(params, bits, rng);

    if (std::holds_alternative<HonestRead>(config.strategy)) {
        const ReadResult read = read_honest(sealed, rng);
        for (std::size_t i = 0; i < params.n; ++i) {
            ++tally.bits_read;
            if (read.bits[i] != sealed.alice_bits()[i]) ++tally.bit_errors;
        }
    } else if (const auto* ind = std::get_if<IndividualAttack>(&config.strategy)) {
        const auto result = attack_individual(sealed.product_state(), *ind, rng);
        for (std::size_t slot = 0; slot < ind->read_indices.size(); ++slot) {
            ++tally.bits_read;
            if (result.learned_bits[slot] != sealed.alice_bits()[ind->read_indices[slot]]) {
                ++tally.bit_errors;
            }
        }
    } else if (const auto* coll = std::get_if<CollectiveAttack>(&config.strategy)) {
        StateVector dense = sealed.to_dense();
        attack_collective(dense, *coll, rng);
        sealed.set_dense_state(std::move(dense));
    }

    if (check(sealed, rng).verdict == Verdict::Unread) ++tally.unread;
}

ExperimentConfig apply_sweep_value(ExperimentConfig config, const std::string& variable,
                                   double value) {
    if (variable == "n") {
        config.params.n = static_cast<std::size_t>(value);
    } else if (variable == "Theta") {
        config.params.theta_cap = value;
    } else if (variable == "alpha") {
        config.params.alpha = value;
    } else if (variable == "theta_prime") {
        auto* ind = std::get_if<IndividualAttack>(&config.strategy);
        if (!ind) throw std::invalid_argument("theta_prime sweep needs an individual strategy");
        ind->fake_policy = IndividualAttack::Fake{value};
    } else if (variable == "k") {
        auto* ind = std::get_if<IndividualAttack>(&config.strategy);
        if (!ind) throw std::invalid_argument("k sweep needs an individual strategy");
        const auto k = static_cast<std::size_t>(value);
        if (k > config.params.n) throw std::invalid_argument("k exceeds n in sweep");
        ind->read_indices.resize(k);
        std::iota(ind->read_indices.begin(), ind->read_indices.end(), std::size_t{0});
    } else if (variable == "m") {
        auto* coll = std::get_if<CollectiveAttack>(&config.strategy);
        if (!coll) throw std::invalid_argument("m sweep needs a collective strategy");
        coll->policy = CollectiveAttack::Random{static_cast<std::uint64_t>(value)};
    } else if (variable == "j") {
        auto* coll = std::get_if<CollectiveAttack>(&config.strategy);
        if (!coll) throw std::invalid_argument("j sweep needs a collective strategy");
        coll->policy = CollectiveAttack::Prefix{static_cast<std::size_t>(value)};
    } else {
        throw std::invalid_argument("unknown sweep variable: " + variable);
    }
    return config;
}

TrialReport run_point(const ExperimentConfig& config, std::uint64_t sweep_index) {
    const auto start = std::chrono::steady_clock::now();
    TrialTally tally;
    for (std::size_t t = 0; t < config.trials; ++t) {
        Rng rng(config.params.seed, (sweep_index << 32) | t);
        run_one_trial(config, rng, tally);
    }
    TrialReport report;
    report.trials = config.trials;
    report.seed = config.params.seed;
    report.estimate = static_cast<double>(tally.unread) / static_cast<double>(config.trials);
    const Wilson ci = wilson_interval(tally.unread, config.trials);
    report.ci_low = ci.low;
    report.ci_high = ci.high;
    report.analytic_ref = config.analytic_ref_override ? config.analytic_ref_override
                                                       : analytic_reference(config);
    if (tally.bits_read > 0) {
        report.bit_error_rate =
            static_cast<double>(tally.bit_errors) / static_cast<double>(tally.bits_read);
    }
    if (config.pinned_theta) {
        report.pinned = true;
        report.pinned_theta = *config.pinned_theta;
    }
    report.wall_time =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace

Wilson wilson_interval(std::uint64_t successes, std::uint64_t trials) {
    if (trials == 0) throw std::invalid_argument("wilson interval needs at least one trial");
    const double nn = static_cast<double>(trials);
    const double p = static_cast<double>(successes) / nn;
    const double z2 = kZ95 * kZ95;
    const double denom = 1.0 + z2 / nn;
    const double center = (p + z2 / (2.0 * nn)) / denom;
    const double half =
        kZ95 * std::sqrt(p * (1.0 - p) / nn + z2 / (4.0 * nn * nn)) / denom;
    // Degenerate endpoints are exact.
    const double low = successes == 0 ? 0.0 : std::max(0.0, center - half);
    const double high = successes == trials ? 1.0 : std::min(1.0, center + half);
    return {low, high};
}

void validate(const ExperimentConfig& config) {
    validate(config.params);
    if (config.trials < 1) throw std::invalid_argument("trials must be at least 1");
    if (config.pinned_theta &&
        std::abs(*config.pinned_theta) > config.params.theta_range()) {
        throw std::invalid_argument("pinned theta outside [-Theta/n^alpha, Theta/n^alpha]");
    }
    if (const auto* ind = std::get_if<IndividualAttack>(&config.strategy)) {
        for (std::size_t idx : ind->read_indices) {
            if (idx >= config.params.n) {
                throw std::invalid_argument("attack index beyond params.n");
            }
        }
    }
    if (config.sweep) {
        if (config.sweep->values.empty()) {
            throw std::invalid_argument("sweep needs at least one value");
        }
        // Each point is re-validated with the value applied.
        for (double v : config.sweep->values) {
            ExperimentConfig point = apply_sweep_value(config, config.sweep->variable, v);
            point.sweep.reset();
            validate(point);
        }
    }
}

std::vector<TrialReport> run(const ExperimentConfig& config) {
    validate(config);
    std::vector<TrialReport> reports;
    if (!config.sweep) {
        reports.push_back(run_point(config, 0));
        return reports;
    }
    for (std::size_t s = 0; s < config.sweep->values.size(); ++s) {
        const double value = config.sweep->values[s];
        ExperimentConfig point = apply_sweep_value(config, config.sweep->variable, value);
        point.sweep.reset();
        TrialReport report = run_point(point, s);
        report.sweep_variable = config.sweep->variable;
        report.sweep_value = value;
        reports.push_back(std::move(report));
    }
    return reports;
}

ExperimentConfig pin_thetas(ExperimentConfig config, double theta_value) {
    config.pinned_theta = theta_value;
    validate(config);
    return config;
}

DecayFit decay_fit(const std::vector<TrialReport>& reports) {
    std::vector<double> xs;
    std::vector<double> ys;
    for (const TrialReport& r : reports) {
        if (!r.sweep_value) continue;
        if (r.estimate <= 0.0) continue;  // excluded; log undefined
        xs.push_back(*r.sweep_value);
        ys.push_back(std::log(r.estimate));
    }
    if (xs.size() < 4) {
        throw std::invalid_argument("decay fit needs at least 4 positive sweep points");
    }
    const double n = static_cast<double>(xs.size());
    const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
    const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / n;
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
        syy += (ys[i] - my) * (ys[i] - my);
    }
    DecayFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    fit.r_squared = syy > 0.0 ? (sxy * sxy) / (sxx * syy) : 1.0;
    fit.points_used = xs.size();
    return fit;
}

TrialReport evasion_probability_empirical(const ProtocolParams& params, const Strategy& strategy,
                                          std::size_t trials,
                                          std::optional<double> pinned_theta) {
    ExperimentConfig config;
    config.params = params;
    config.strategy = strategy;
    config.trials = trials;
    config.pinned_theta = pinned_theta;
    return run(config).front();
}

std::string to_csv(const std::vector<TrialReport>& reports) {
    std::ostringstream out;
    out.precision(17);
    out << "sweep_variable,sweep_value,estimate,ci_low,ci_high,analytic_ref,bit_error_rate\n";
    for (const TrialReport& r : reports) {
        out << (r.sweep_variable ? *r.sweep_variable : "") << ",";
        if (r.sweep_value) out << *r.sweep_value;
        out << "," << r.estimate << "," << r.ci_low << "," << r.ci_high << ",";
        if (r.analytic_ref) out << *r.analytic_ref;
        out << ",";
        if (r.bit_error_rate) out << *r.bit_error_rate;
        out << "\n";
    }
    return out.str();
}

}  // namespace qseal
