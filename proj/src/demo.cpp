#include "qseal/demo.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qseal {

namespace {

QubitState rotated_basis_state(double angle, int label) {
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    return label == 0 ? QubitState{c, s} : QubitState{-s, c};
}

/// Rotated-basis measurement: two-outcome projection onto the label-0 state.
int measure_rotated(QubitState& qubit, double angle, Rng& rng) {
    auto [pass, post] = project_onto_pure(qubit, rotated_basis_state(angle, 0), rng);
    qubit = post;
    return pass ? 0 : 1;
}

}  // namespace

BitString encode_ascii(const std::string& text) {
    BitString bits;
    bits.reserve(text.size() * 8);
    for (char c : text) {
        const auto byte = static_cast<unsigned char>(c);
        if (byte > 127) throw std::invalid_argument("instruction text must be ASCII");
        for (int b = 7; b >= 0; --b) {
            bits.push_back((byte >> b) & 1);
        }
    }
    return bits;
}

std::string decode_ascii(const BitString& bits) {
    if (bits.size() % 8 != 0) throw std::invalid_argument("bit count must be a multiple of 8");
    std::string text;
    text.reserve(bits.size() / 8);
    for (std::size_t i = 0; i < bits.size(); i += 8) {
        int byte = 0;
        for (std::size_t b = 0; b < 8; ++b) byte = (byte << 1) | bits[i + b];
        text.push_back(static_cast<char>(byte));
    }
    return text;
}

DemoTranscript run_demo(const DemoSpec& spec, Rng& rng, bool honest_decode) {
    if (spec.secret_bit != 0 && spec.secret_bit != 1) {
        throw std::invalid_argument("secret_bit must be 0 or 1");
    }
    if (!(spec.payload_basis_angle > 0.0 && spec.payload_basis_angle < std::numbers::pi / 4.0)) {
        throw std::invalid_argument("payload_basis_angle must lie in (0, pi/4)");
    }

    DemoTranscript t;
    t.instruction_bits = encode_ascii(spec.instruction_text);

    ProtocolParams params;
    params.n = t.instruction_bits.size();
    params.theta_cap = spec.theta_cap;
    params.alpha = spec.alpha;
    params.seed = spec.seed;

    SealedString sealed = seal(params, t.instruction_bits, rng);
    t.instruction_thetas = sealed.alice_thetas();
    std::ostringstream step;
    step << "sealed " << params.n << " instruction qubits (Theta=" << params.theta_cap
         << ", alpha=" << params.alpha << ")";
    t.steps.push_back(step.str());

    // Payload: rotated-basis labels whose XOR is the secret bit.
    t.payload_label_1 = rng.bernoulli(0.5) ? 1 : 0;
    t.payload_label_2 = t.payload_label_1 ^ spec.secret_bit;
    QubitState payload_1 = rotated_basis_state(spec.payload_basis_angle, t.payload_label_1);
    QubitState payload_2 = rotated_basis_state(spec.payload_basis_angle, t.payload_label_2);
    t.steps.push_back("prepared 2 payload qubits in the rotated basis; label parity carries the bit");

    // Dummy qubits in random computational states; Alice never checks them.
    std::vector<QubitState> dummies(spec.dummy_count);
    for (QubitState& d : dummies) {
        d = rng.bernoulli(0.5) ? QubitState{0.0, 1.0} : QubitState{1.0, 0.0};
    }
    std::ostringstream dstep;
    dstep << "appended " << spec.dummy_count << " dummy qubits (never checked; padding only)";
    t.steps.push_back(dstep.str());

    if (honest_decode) {
        t.read_bits = read_honest(sealed, rng).bits;
        t.decoded_label_1 = measure_rotated(payload_1, spec.payload_basis_angle, rng);
        t.decoded_label_2 = measure_rotated(payload_2, spec.payload_basis_angle, rng);
        t.decoded_secret = t.decoded_label_1 ^ t.decoded_label_2;
        t.decoded = true;
        t.steps.push_back("honest decode: read the instruction string, measured the payload in "
                          "the rotated basis, took the label parity");
    }

    t.check_verdict = check(sealed, rng).verdict;
    t.steps.push_back(t.check_verdict == Verdict::Read
                          ? "Alice's check on the instruction qubits: READ"
                          : "Alice's check on the instruction qubits: UNREAD");
    return t;
}

}  // namespace qseal
