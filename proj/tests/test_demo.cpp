#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "qseal/analytics.hpp"
#include "qseal/demo.hpp"

using namespace qseal;

TEST_CASE("ascii encoding round trip, most significant bit first") {
    const std::string text = "Seal me";
    const BitString bits = encode_ascii(text);
    CHECK(bits.size() == text.size() * 8);
    // 'S' = 0x53
    CHECK(bits[0] == 0);
    CHECK(bits[1] == 1);
    CHECK(bits[2] == 0);
    CHECK(bits[3] == 1);
    CHECK(bits[4] == 0);
    CHECK(bits[5] == 0);
    CHECK(bits[6] == 1);
    CHECK(bits[7] == 1);
    CHECK(decode_ascii(bits) == text);
    CHECK_THROWS_AS(encode_ascii("caf\xc3\xa9"), std::invalid_argument);
}

TEST_CASE("honest decode always recovers the secret bit") {
    for (int secret : {0, 1}) {
        DemoSpec spec;
        spec.secret_bit = secret;
        spec.instruction_text = "measure the payload in the tilted basis";  // keep the run small
        spec.dummy_count = 4;
        for (std::uint64_t t = 0; t < 500; ++t) {
            Rng rng(640 + secret, t);
            const DemoTranscript tr = run_demo(spec, rng);
            REQUIRE(tr.decoded);
            CHECK(tr.decoded_secret == secret);
            CHECK((tr.payload_label_1 ^ tr.payload_label_2) == secret);
        }
    }
}

TEST_CASE("without a decode the instruction string checks UNREAD") {
    DemoSpec spec;
    spec.instruction_text = "short";
    for (std::uint64_t t = 0; t < 500; ++t) {
        Rng rng(650, t);
        const DemoTranscript tr = run_demo(spec, rng, /*honest_decode=*/false);
        CHECK_FALSE(tr.decoded);
        CHECK(tr.check_verdict == Verdict::Unread);
    }
}

TEST_CASE("after a decode the check flags READ at the product rate") {
    DemoSpec spec;
    spec.instruction_text = "a short decoding instruction";
    spec.dummy_count = 0;
    const std::uint64_t trials = 20'000;
    std::uint64_t read_flags = 0;
    double expected_sum = 0.0, var_sum = 0.0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        Rng rng(660, t);
        const DemoTranscript tr = run_demo(spec, rng);
        if (tr.check_verdict == Verdict::Read) ++read_flags;
        const double p_read =
            1.0 - analytics::evade_prob_individual(tr.instruction_thetas);
        expected_sum += p_read;
        var_sum += p_read * (1.0 - p_read);
    }
    const double rate = static_cast<double>(read_flags) / trials;
    const double expected = expected_sum / trials;
    const double sigma = std::sqrt(var_sum) / trials;
    CHECK(std::abs(rate - expected) < 3.0 * sigma);
}

TEST_CASE("demo spec validation") {
    DemoSpec spec;
    spec.secret_bit = 2;
    Rng rng(1, 0);
    CHECK_THROWS_AS(run_demo(spec, rng), std::invalid_argument);
    spec.secret_bit = 0;
    spec.payload_basis_angle = 1.0;
    CHECK_THROWS_AS(run_demo(spec, rng), std::invalid_argument);
}
