#pragma once

#include <numbers>
#include <string>
#include <vector>

#include "qseal/protocol.hpp"

namespace qseal {

/// Single-bit sealing built on the string protocol: the sealed string
/// carries the decoding instruction, two payload qubits hold the secret bit
/// in the parity of their rotated-basis labels, and dummy qubits pad the
/// system.
struct DemoSpec {
    int secret_bit = 0;
    std::string instruction_text =
        "Measure the last two qubits in the basis {cos15|0>+sin15|1>, -sin15|0>+cos15|1>} "
        "and you will know the value of the sealed bit from their parity. Other qubits "
        "following this sentence are all dummy qubits. You can simply leave them alone.";
    std::size_t dummy_count = 16;
    double payload_basis_angle = std::numbers::pi / 12.0;  // 15 degrees
    double theta_cap = 0.2;
    double alpha = 0.25;
    std::uint64_t seed = 0;
};

struct DemoTranscript {
    std::vector<std::string> steps;

    BitString instruction_bits;
    std::vector<double> instruction_thetas;  // Alice's record, for the transcript
    int payload_label_1 = 0;
    int payload_label_2 = 0;

    bool decoded = false;
    BitString read_bits;       // honest reading of the instruction qubits
    int decoded_label_1 = 0;
    int decoded_label_2 = 0;
    int decoded_secret = 0;

    Verdict check_verdict = Verdict::Unread;
};

/// Encode ASCII text as bits, 8 per character, most significant bit first.
BitString encode_ascii(const std::string& text);
std::string decode_ascii(const BitString& bits);

/// Run the demo: seal the instruction string, prepare the payload and dummy
/// qubits, optionally perform the honest decode, then run Alice's check on
/// the instruction qubits.
DemoTranscript run_demo(const DemoSpec& spec, Rng& rng, bool honest_decode = true);

}  // namespace qseal
