#include "qseal/serialize.hpp"

#include <nlohmann/json.hpp>
#include <numeric>
#include <stdexcept>

namespace qseal {

using nlohmann::json;

std::string bits_to_hex(const BitString& bits) {
    std::string hex;
    hex.reserve((bits.size() + 3) / 4);
    for (std::size_t i = 0; i < bits.size(); i += 4) {
        int nibble = 0;
        for (std::size_t b = 0; b < 4; ++b) {
            nibble <<= 1;
            if (i + b < bits.size()) nibble |= bits[i + b];
        }
        hex.push_back("0123456789abcdef"[nibble]);
    }
    return hex;
}

BitString bits_from_hex(const std::string& hex, std::size_t n_bits) {
    if (hex.size() != (n_bits + 3) / 4) {
        throw std::invalid_argument("hex string length disagrees with bit count");
    }
    BitString bits;
    bits.reserve(n_bits);
    for (char c : hex) {
        int nibble;
        if (c >= '0' && c <= '9') nibble = c - '0';
        else if (c >= 'a' && c <= 'f') nibble = c - 'a' + 10;
        else if (c >= 'A' && c <= 'F') nibble = c - 'A' + 10;
        else throw std::invalid_argument("invalid hex digit in bit string");
        for (int b = 3; b >= 0; --b) {
            if (bits.size() < n_bits) bits.push_back((nibble >> b) & 1);
        }
    }
    return bits;
}

namespace {

json params_to_json(const ProtocolParams& p) {
    return {{"n", p.n}, {"theta", p.theta_cap}, {"alpha", p.alpha}, {"seed", p.seed}};
}

ProtocolParams params_from_json(const json& j) {
    ProtocolParams p;
    p.n = j.at("n").get<std::size_t>();
    p.theta_cap = j.at("theta").get<double>();
    p.alpha = j.at("alpha").get<double>();
    p.seed = j.at("seed").get<std::uint64_t>();
    return p;
}

json strategy_to_json(const Strategy& strategy) {
    if (std::holds_alternative<NoAttack>(strategy)) return {{"type", "none"}};
    if (std::holds_alternative<HonestRead>(strategy)) return {{"type", "honest"}};
    if (const auto* ind = std::get_if<IndividualAttack>(&strategy)) {
        json j{{"type", "individual"}, {"k", ind->read_indices.size()}};
        if (const auto* fake = std::get_if<IndividualAttack::Fake>(&ind->fake_policy)) {
            j["fake"] = {{"theta_prime", fake->theta_prime}};
        } else if (const auto* per =
                       std::get_if<IndividualAttack::FakePerQubit>(&ind->fake_policy)) {
            j["fake"] = {{"theta_primes", per->theta_primes}};
        }
        j["indices"] = ind->read_indices;
        return j;
    }
    const auto& coll = std::get<CollectiveAttack>(strategy);
    json j{{"type", "collective"}};
    if (const auto* random = std::get_if<CollectiveAttack::Random>(&coll.policy)) {
        j["policy"] = "random";
        j["m"] = random->m;
    } else if (const auto* prefix = std::get_if<CollectiveAttack::Prefix>(&coll.policy)) {
        j["policy"] = "prefix";
        j["j"] = prefix->j;
    } else if (const auto* parity = std::get_if<CollectiveAttack::Parity>(&coll.policy)) {
        j["policy"] = "parity";
        j["parity"] = parity->target_parity;
    } else {
        const auto& ex = std::get<CollectiveAttack::Explicit>(coll.policy);
        j["policy"] = "explicit";
        j["indices"] = ex.basis_indices;
    }
    return j;
}

Strategy strategy_from_json(const json& j) {
    const std::string type = j.at("type").get<std::string>();
    if (type == "none") return NoAttack{};
    if (type == "honest") return HonestRead{};
    if (type == "individual") {
        IndividualAttack attack;
        if (j.contains("indices")) {
            attack.read_indices = j.at("indices").get<std::vector<std::size_t>>();
        } else {
            const auto k = j.at("k").get<std::size_t>();
            attack.read_indices.resize(k);
            std::iota(attack.read_indices.begin(), attack.read_indices.end(), std::size_t{0});
        }
        if (j.contains("fake") && !j.at("fake").is_null()) {
            const json& fake = j.at("fake");
            if (fake.contains("theta_primes")) {
                attack.fake_policy =
                    IndividualAttack::FakePerQubit{fake.at("theta_primes").get<std::vector<double>>()};
            } else {
                attack.fake_policy = IndividualAttack::Fake{fake.at("theta_prime").get<double>()};
            }
        }
        return attack;
    }
    if (type == "collective") {
        CollectiveAttack attack;
        const std::string policy = j.at("policy").get<std::string>();
        if (policy == "random") {
            attack.policy = CollectiveAttack::Random{j.at("m").get<std::uint64_t>()};
        } else if (policy == "prefix") {
            attack.policy = CollectiveAttack::Prefix{j.at("j").get<std::size_t>()};
        } else if (policy == "parity") {
            attack.policy = CollectiveAttack::Parity{j.value("parity", 0)};
        } else if (policy == "explicit") {
            attack.policy =
                CollectiveAttack::Explicit{j.at("indices").get<std::vector<std::uint64_t>>()};
        } else {
            throw std::invalid_argument("unknown collective policy: " + policy);
        }
        return attack;
    }
    throw std::invalid_argument("unknown strategy type: " + type);
}

}  // namespace

json sealed_to_json(const SealedString& sealed, bool public_view) {
    json j{{"version", kSealedSchemaVersion}, {"params", params_to_json(sealed.params())}};
    if (!public_view) {
        j["bits"] = bits_to_hex(sealed.alice_bits());
        j["thetas"] = sealed.alice_thetas();
    }
    if (sealed.is_product()) {
        json factors = json::array();
        for (const QubitState& f : sealed.product_state().factors) {
            factors.push_back({f.a0, f.a1});
        }
        j["state"] = {{"type", "product"}, {"factors", std::move(factors)}};
    } else {
        j["state"] = {{"type", "dense"}, {"amplitudes", sealed.dense_state().amplitudes()}};
    }
    return j;
}

SealedString sealed_from_json(const json& j) {
    if (j.at("version").get<int>() != kSealedSchemaVersion) {
        throw std::invalid_argument("unsupported sealed-string schema version");
    }
    const ProtocolParams params = params_from_json(j.at("params"));
    if (!j.contains("bits") || !j.contains("thetas")) {
        throw std::invalid_argument("record is a public view; private fields are absent");
    }
    const BitString bits = bits_from_hex(j.at("bits").get<std::string>(), params.n);
    const auto thetas = j.at("thetas").get<std::vector<double>>();

    const json& state = j.at("state");
    const std::string type = state.at("type").get<std::string>();
    if (type == "product") {
        ProductState product;
        for (const json& f : state.at("factors")) {
            product.factors.push_back({f.at(0).get<double>(), f.at(1).get<double>()});
        }
        return SealedString(params, bits, thetas, std::move(product));
    }
    if (type == "dense") {
        // Reconstruct through a placeholder product state, then install the
        // dense vector.
        ProductState placeholder;
        for (std::size_t i = 0; i < params.n; ++i) {
            placeholder.factors.push_back(make_qubit(bits[i], thetas[i]));
        }
        SealedString sealed(params, bits, thetas, std::move(placeholder));
        sealed.set_dense_state(
            StateVector(params.n, state.at("amplitudes").get<std::vector<double>>()));
        return sealed;
    }
    throw std::invalid_argument("unknown state type: " + type);
}

json config_to_json(const ExperimentConfig& config) {
    json j{{"version", kConfigSchemaVersion},
           {"params", params_to_json(config.params)},
           {"trials", config.trials},
           {"strategy", strategy_to_json(config.strategy)}};
    if (config.pinned_theta) j["pinned_theta"] = *config.pinned_theta;
    if (config.analytic_ref_override) j["analytic_ref_override"] = *config.analytic_ref_override;
    if (config.sweep) {
        j["sweep"] = {{"variable", config.sweep->variable}, {"values", config.sweep->values}};
    }
    return j;
}

ExperimentConfig config_from_json(const json& j) {
    if (j.at("version").get<int>() != kConfigSchemaVersion) {
        throw std::invalid_argument("unsupported config schema version");
    }
    ExperimentConfig config;
    config.params = params_from_json(j.at("params"));
    config.trials = j.at("trials").get<std::size_t>();
    config.strategy = strategy_from_json(j.at("strategy"));
    if (j.contains("pinned_theta") && !j.at("pinned_theta").is_null()) {
        config.pinned_theta = j.at("pinned_theta").get<double>();
    }
    if (j.contains("analytic_ref_override") && !j.at("analytic_ref_override").is_null()) {
        config.analytic_ref_override = j.at("analytic_ref_override").get<double>();
    }
    if (j.contains("sweep") && !j.at("sweep").is_null()) {
        config.sweep = SweepSpec{j.at("sweep").at("variable").get<std::string>(),
                                 j.at("sweep").at("values").get<std::vector<double>>()};
    }
    return config;
}

json report_to_json(const TrialReport& report) {
    json j{{"trials", report.trials},
           {"estimate", report.estimate},
           {"ci_low", report.ci_low},
           {"ci_high", report.ci_high},
           {"wall_time", report.wall_time},
           {"seed", report.seed}};
    if (report.sweep_variable) j["sweep_variable"] = *report.sweep_variable;
    if (report.sweep_value) j["sweep_value"] = *report.sweep_value;
    if (report.analytic_ref) j["analytic_ref"] = *report.analytic_ref;
    if (report.bit_error_rate) j["bit_error_rate"] = *report.bit_error_rate;
    if (report.pinned) {
        j["pinned"] = true;
        j["pinned_theta"] = report.pinned_theta;
        j["note"] = "pinned-theta diagnostic mode, not the sampled protocol";
    }
    return j;
}

}  // namespace qseal
