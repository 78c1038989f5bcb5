#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <optional>
#include <sstream>
#include <string>

#include "qseal/analytics.hpp"
#include "qseal/demo.hpp"
#include "qseal/experiments.hpp"
#include "qseal/serialize.hpp"

using nlohmann::json;

namespace {

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return json::parse(in);
}

void save_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

qseal::BitString parse_bits(const std::string& spec, std::size_t n) {
    // Accept a 0/1 string of length n or hex of ceil(n/4) digits.
    if (spec.size() == n &&
        spec.find_first_not_of("01") == std::string::npos) {
        qseal::BitString bits;
        for (char c : spec) bits.push_back(c - '0');
        return bits;
    }
    return qseal::bits_from_hex(spec, n);
}

int run_analytic(const std::string& formula, double theta, double theta_prime, double theta_cap,
                 double alpha, std::size_t n, double k, double m,
                 const std::vector<double>& thetas) {
    json inputs;
    double value;
    if (formula == "eps") {
        inputs = {{"Theta", theta_cap}, {"alpha", alpha}, {"n", n}};
        value = qseal::analytics::eps_bound(theta_cap, alpha, n);
    } else if (formula == "eq1") {
        inputs = {{"theta", theta}, {"theta_prime", theta_prime}};
        value = qseal::analytics::pass_prob_fake(theta, theta_prime);
    } else if (formula == "eq2") {
        inputs = {{"Theta", theta_cap}, {"alpha", alpha}, {"n", n}, {"theta_prime", theta_prime}};
        value = qseal::analytics::avg_pass_prob(theta_cap, alpha, n, theta_prime);
    } else if (formula == "eq3") {
        inputs = {{"theta", theta}};
        value = qseal::analytics::pass_prob_leave(theta);
    } else if (formula == "eq4") {
        inputs = {{"thetas", thetas}};
        value = qseal::analytics::evade_prob_individual(thetas);
    } else if (formula == "eq5") {
        inputs = {{"n", n}, {"m", m}};
        value = qseal::analytics::info_bound(n, m);
    } else if (formula == "eq9") {
        inputs = {{"thetas", thetas}};
        value = qseal::analytics::per_v_amplitude_bound(thetas);
    } else if (formula == "eq10") {
        inputs = {{"thetas", thetas}, {"k", k}};
        value = qseal::analytics::evade_bound_collective(thetas, k);
        std::cout << json{{"formula", formula},
                          {"inputs", inputs},
                          {"value", value},
                          {"clamped", std::min(value, 1.0)}}
                  << "\n";
        return 0;
    } else {
        std::cerr << "unknown formula: " << formula << "\n";
        return 1;
    }
    std::cout << json{{"formula", formula}, {"inputs", inputs}, {"value", value}} << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quantum bit-string sealing simulator"};
    app.require_subcommand(1);

    std::uint64_t seed = 0;
    std::size_t n = 8;
    double theta_cap = 0.2;
    double alpha = 0.25;
    std::string in_path;
    std::string out_path;
    std::string bits_spec;
    std::string format = "json";

    auto* seal_cmd = app.add_subcommand("seal", "Seal a bit string and write the record");
    seal_cmd->add_option("--n", n, "Number of bits");
    seal_cmd->add_option("--theta", theta_cap, "Angle scale Theta");
    seal_cmd->add_option("--alpha", alpha, "Shrink exponent alpha");
    seal_cmd->add_option("--seed", seed, "Master RNG seed");
    seal_cmd->add_option("--bits", bits_spec, "Bits as a 0/1 string or hex (default random)");
    seal_cmd->add_option("--out", out_path, "Output record path")->required();
    bool public_view = false;
    seal_cmd->add_flag("--public-view", public_view, "Also write a public view next to the record");

    auto* read_cmd = app.add_subcommand("read", "Honestly read a sealed record");
    read_cmd->add_option("--in", in_path, "Sealed record path")->required();
    read_cmd->add_option("--seed", seed, "Master RNG seed");
    read_cmd->add_option("--out", out_path, "Rewrite the mutated record here (default: in place)");

    auto* check_cmd = app.add_subcommand("check", "Run Alice's check on a sealed record");
    check_cmd->add_option("--in", in_path, "Sealed record path")->required();
    check_cmd->add_option("--seed", seed, "Master RNG seed");
    check_cmd->add_option("--out", out_path, "Rewrite the mutated record here (default: in place)");
    bool early_exit = false;
    check_cmd->add_flag("--early-exit", early_exit, "Stop at the first failing qubit");

    auto* analytic_cmd = app.add_subcommand("analytic", "Evaluate a closed-form quantity");
    std::string formula;
    double a_theta = 0.0, a_theta_prime = 0.0, a_k = 0.0, a_m = 1.0;
    std::vector<double> a_thetas;
    analytic_cmd->add_option("formula", formula, "One of eps, eq1, eq2, eq3, eq4, eq5, eq9, eq10")
        ->required();
    analytic_cmd->add_option("--theta", a_theta, "Angle theta");
    analytic_cmd->add_option("--theta-prime", a_theta_prime, "Fake angle theta'");
    analytic_cmd->add_option("--Theta", theta_cap, "Angle scale Theta");
    analytic_cmd->add_option("--alpha", alpha, "Shrink exponent alpha");
    analytic_cmd->add_option("--n", n, "Number of bits");
    analytic_cmd->add_option("--k", a_k, "Information bits k");
    analytic_cmd->add_option("--m", a_m, "Subspace dimension m");
    analytic_cmd->add_option("--thetas", a_thetas, "Angle list");

    auto* demo_cmd = app.add_subcommand("demo", "Single-bit sealing walkthrough");
    int secret_bit = 0;
    std::size_t dummy_count = 16;
    bool no_decode = false;
    std::string instruction_text;
    demo_cmd->add_option("--bit", secret_bit, "Secret bit to seal");
    demo_cmd->add_option("--dummies", dummy_count, "Number of dummy qubits");
    demo_cmd->add_option("--text", instruction_text, "Override the instruction text");
    demo_cmd->add_option("--seed", seed, "Master RNG seed");
    demo_cmd->add_flag("--no-decode", no_decode, "Skip the honest decode before checking");

    auto* exp_cmd = app.add_subcommand("experiment", "Run a Monte Carlo campaign from a config");
    std::string config_path;
    bool assert_mode = false;
    exp_cmd->add_option("config", config_path, "Experiment config (JSON)")->required();
    exp_cmd->add_option("--out", out_path, "Report output path (default stdout)");
    exp_cmd->add_option("--format", format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    exp_cmd->add_flag("--assert", assert_mode,
                      "Fail (exit 2) if any estimate is more than 3 sigma from its reference");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*seal_cmd) {
            qseal::ProtocolParams params{n, theta_cap, alpha, seed};
            for (const std::string& w : qseal::validate(params)) {
                std::cerr << "warning: " << w << "\n";
            }
            qseal::Rng rng(seed, 0);
            qseal::BitString bits;
            if (bits_spec.empty()) {
                for (std::size_t i = 0; i < n; ++i) bits.push_back(rng.bernoulli(0.5) ? 1 : 0);
            } else {
                bits = parse_bits(bits_spec, n);
            }
            qseal::SealedString sealed = qseal::seal(params, bits, rng);
            save_text(out_path, qseal::sealed_to_json(sealed).dump(2));
            if (public_view) {
                save_text(out_path + ".public",
                          qseal::sealed_to_json(sealed, true).dump(2));
            }
            std::cout << "sealed " << n << " bits -> " << out_path << "\n";
        } else if (*read_cmd) {
            qseal::SealedString sealed = qseal::sealed_from_json(load_json(in_path));
            qseal::Rng rng(seed, 1);
            const qseal::ReadResult result = qseal::read_honest(sealed, rng);
            std::string out;
            for (int b : result.bits) out.push_back('0' + b);
            std::cout << out << "\n";
            save_text(out_path.empty() ? in_path : out_path,
                      qseal::sealed_to_json(sealed).dump(2));
        } else if (*check_cmd) {
            qseal::SealedString sealed = qseal::sealed_from_json(load_json(in_path));
            qseal::Rng rng(seed, 2);
            const qseal::CheckReport report = qseal::check(sealed, rng, early_exit);
            json out{{"verdict", report.verdict == qseal::Verdict::Unread ? "UNREAD" : "READ"},
                     {"per_qubit_pass", report.per_qubit_pass},
                     {"rng_stream", report.rng_stream}};
            std::cout << out.dump(2) << "\n";
            save_text(out_path.empty() ? in_path : out_path,
                      qseal::sealed_to_json(sealed).dump(2));
        } else if (*analytic_cmd) {
            return run_analytic(formula, a_theta, a_theta_prime, theta_cap, alpha, n, a_k, a_m,
                                a_thetas);
        } else if (*demo_cmd) {
            qseal::DemoSpec spec;
            spec.secret_bit = secret_bit;
            spec.dummy_count = dummy_count;
            spec.seed = seed;
            if (!instruction_text.empty()) spec.instruction_text = instruction_text;
            qseal::Rng rng(seed, 3);
            const qseal::DemoTranscript t = qseal::run_demo(spec, rng, !no_decode);
            for (const std::string& step : t.steps) std::cout << step << "\n";
            if (t.decoded) std::cout << "decoded secret bit: " << t.decoded_secret << "\n";
            std::cout << "verdict: " << (t.check_verdict == qseal::Verdict::Read ? "READ" : "UNREAD")
                      << "\n";
        } else if (*exp_cmd) {
            qseal::ExperimentConfig config;
            try {
                config = qseal::config_from_json(load_json(config_path));
                qseal::validate(config);
            } catch (const std::exception& e) {
                std::cerr << "config error: " << e.what() << "\n";
                return 1;
            }
            const std::vector<qseal::TrialReport> reports = qseal::run(config);
            std::string rendered;
            if (format == "csv") {
                rendered = qseal::to_csv(reports);
            } else {
                std::ostringstream lines;
                for (const qseal::TrialReport& r : reports) {
                    lines << qseal::report_to_json(r) << "\n";
                }
                rendered = lines.str();
            }
            if (out_path.empty()) {
                std::cout << rendered;
            } else {
                save_text(out_path, rendered);
            }
            if (assert_mode) {
                for (const qseal::TrialReport& r : reports) {
                    if (!r.analytic_ref) continue;
                    const double ref = *r.analytic_ref;
                    const double sigma =
                        std::sqrt(std::max(ref * (1.0 - ref), 1e-300) /
                                  static_cast<double>(r.trials));
                    if (std::abs(r.estimate - ref) > 3.0 * sigma) {
                        std::cerr << "assertion failed: estimate " << r.estimate
                                  << " vs reference " << ref << " (3 sigma = " << 3.0 * sigma
                                  << ")\n";
                        return 2;
                    }
                }
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
