#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qseal/adversary.hpp"
#include "qseal/protocol.hpp"

namespace qseal {

struct Wilson {
    double low = 0.0;
    double high = 1.0;
};

/// Wilson 95% score interval for a binomial proportion.
Wilson wilson_interval(std::uint64_t successes, std::uint64_t trials);

struct NoAttack {};
struct HonestRead {};

using Strategy = std::variant<NoAttack, HonestRead, IndividualAttack, CollectiveAttack>;

struct SweepSpec {
    std::string variable;  // one of n, Theta, alpha, k, theta_prime, m, j
    std::vector<double> values;
};

struct ExperimentConfig {
    ProtocolParams params;
    Strategy strategy = NoAttack{};
    std::size_t trials = 1000;
    /// Diagnostic mode: fix every sealed theta to this value instead of
    /// sampling. Reports are flagged as non-protocol.
    std::optional<double> pinned_theta;
    std::optional<SweepSpec> sweep;
    /// Diagnostic: replace the computed reference in every report (used to
    /// exercise assertion-mode failures deliberately).
    std::optional<double> analytic_ref_override;
};

struct TrialReport {
    std::optional<std::string> sweep_variable;
    std::optional<double> sweep_value;
    std::size_t trials = 0;
    double estimate = 0.0;  // fraction of trials where the check verdict was Unread
    double ci_low = 0.0;
    double ci_high = 1.0;
    std::optional<double> analytic_ref;
    std::optional<double> bit_error_rate;
    double wall_time = 0.0;
    std::uint64_t seed = 0;
    bool pinned = false;
    double pinned_theta = 0.0;
};

/// Throws std::invalid_argument on any constraint violation.
void validate(const ExperimentConfig& config);

/// Run the campaign: for each sweep point (or once, without a sweep),
/// seal -> apply strategy -> check over independent RNG streams, then
/// aggregate the evasion estimate with its Wilson interval and the matching
/// closed-form reference when one exists.
std::vector<TrialReport> run(const ExperimentConfig& config);

/// Config variant with every sealed theta fixed to one value.
ExperimentConfig pin_thetas(ExperimentConfig config, double theta_value);

struct DecayFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
    std::size_t points_used = 0;
};

/// Least-squares fit of log(estimate) against the sweep value. Nonpositive
/// estimates are excluded.
DecayFit decay_fit(const std::vector<TrialReport>& reports);

/// End-to-end evasion estimate for one strategy: seal, attack, check,
/// repeated over independent streams.
TrialReport evasion_probability_empirical(const ProtocolParams& params, const Strategy& strategy,
                                          std::size_t trials,
                                          std::optional<double> pinned_theta = std::nullopt);

std::string to_csv(const std::vector<TrialReport>& reports);

}  // namespace qseal
