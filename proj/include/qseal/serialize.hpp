#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>

#include "qseal/experiments.hpp"
#include "qseal/protocol.hpp"

namespace qseal {

inline constexpr int kSealedSchemaVersion = 1;
inline constexpr int kConfigSchemaVersion = 1;

/// Bit string <-> hex, most significant bit first, zero-padded last nibble.
std::string bits_to_hex(const BitString& bits);
BitString bits_from_hex(const std::string& hex, std::size_t n_bits);

/// Full record including Alice's private fields, or the public view with
/// them excluded.
nlohmann::json sealed_to_json(const SealedString& sealed, bool public_view = false);
SealedString sealed_from_json(const nlohmann::json& j);

nlohmann::json config_to_json(const ExperimentConfig& config);
ExperimentConfig config_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const TrialReport& report);

}  // namespace qseal
