#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <string>
#include <sys/wait.h>

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code;
    std::string stdout_text;
};

RunResult run_cli(const std::string& args) {
    const fs::path out = fs::temp_directory_path() / "qseal_cli_test_stdout.txt";
    const std::string cmd =
        std::string(QSEAL_CLI_PATH) + " " + args + " > " + out.string() + " 2>&1";
    const int status = std::system(cmd.c_str());
    std::ifstream in(out);
    std::ostringstream text;
    text << in.rdbuf();
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, text.str()};
}

fs::path temp_file(const std::string& name) {
    return fs::temp_directory_path() / name;
}

}  // namespace

TEST_CASE("seal then check reports UNREAD; read then check reports results") {
    const fs::path record = temp_file("qseal_record.json");

    auto sealed = run_cli("seal --n 16 --theta 0.2 --alpha 0.25 --seed 7 --out " + record.string());
    CHECK(sealed.exit_code == 0);

    auto checked = run_cli("check --in " + record.string() + " --seed 7");
    CHECK(checked.exit_code == 0);
    CHECK(checked.stdout_text.find("UNREAD") != std::string::npos);

    auto read = run_cli("read --in " + record.string() + " --seed 8");
    CHECK(read.exit_code == 0);
    // Prints the 16 recovered bits.
    CHECK(read.stdout_text.find_first_not_of("01\n") == std::string::npos);
    CHECK(read.stdout_text.size() == 17);

    // After reading, the record on disk holds collapsed basis states.
    std::ifstream in(record);
    const json j = json::parse(in);
    for (const json& f : j.at("state").at("factors")) {
        const double a0 = f.at(0).get<double>();
        CHECK((a0 == 0.0 || a0 == 1.0));
    }
}

TEST_CASE("seal writes a public view on request") {
    const fs::path record = temp_file("qseal_public.json");
    auto sealed = run_cli("seal --n 8 --seed 3 --public-view --out " + record.string());
    CHECK(sealed.exit_code == 0);
    std::ifstream in(record.string() + ".public");
    const json pub = json::parse(in);
    CHECK_FALSE(pub.contains("bits"));
    CHECK_FALSE(pub.contains("thetas"));
}

TEST_CASE("analytic subcommand prints a formula record") {
    auto r = run_cli("analytic eq5 --n 8 --m 16");
    CHECK(r.exit_code == 0);
    const json j = json::parse(r.stdout_text);
    CHECK(j.at("formula") == "eq5");
    CHECK(j.at("value") == doctest::Approx(4.0));

    auto eq3 = run_cli("analytic eq3 --theta 0");
    CHECK(json::parse(eq3.stdout_text).at("value") == doctest::Approx(1.0));

    auto eq1 = run_cli("analytic eq1 --theta 0.05 --theta-prime 0");
    auto eq3b = run_cli("analytic eq3 --theta 0.05");
    CHECK(json::parse(eq1.stdout_text).at("value").get<double>() ==
          doctest::Approx(json::parse(eq3b.stdout_text).at("value").get<double>())
              .epsilon(1e-14));

    CHECK(run_cli("analytic eq7 --theta 0").exit_code == 1);
}

TEST_CASE("demo subcommand decodes the bit and reports the verdict") {
    auto r = run_cli("demo --bit 1 --seed 5 --dummies 4 --text 'tiny demo instruction'");
    CHECK(r.exit_code == 0);
    CHECK(r.stdout_text.find("decoded secret bit: 1") != std::string::npos);
    CHECK(r.stdout_text.find("verdict:") != std::string::npos);

    auto unread = run_cli("demo --bit 0 --seed 5 --no-decode --text 'tiny demo instruction'");
    CHECK(unread.stdout_text.find("verdict: UNREAD") != std::string::npos);
}

TEST_CASE("experiment subcommand runs configs and enforces exit codes") {
    const fs::path config = temp_file("qseal_config.json");
    {
        std::ofstream out(config);
        out << R"({"version":1,
                   "params":{"n":1,"theta":0.4,"alpha":0.25,"seed":11},
                   "trials":20000,
                   "pinned_theta":0.3,
                   "strategy":{"type":"honest"}})";
    }
    auto ok = run_cli("experiment " + config.string() + " --assert");
    CHECK(ok.exit_code == 0);
    const json report = json::parse(ok.stdout_text);
    CHECK(report.at("trials") == 20000);
    CHECK(report.contains("analytic_ref"));

    auto csv = run_cli("experiment " + config.string() + " --format csv");
    CHECK(csv.exit_code == 0);
    CHECK(csv.stdout_text.rfind("sweep_variable,", 0) == 0);

    const fs::path bad = temp_file("qseal_bad_config.json");
    {
        std::ofstream out(bad);
        out << R"({"version":1,"trials":10})";
    }
    CHECK(run_cli("experiment " + bad.string()).exit_code == 1);

    // Deliberately wrong reference: assertion mode must exit 2.
    const fs::path wrong = temp_file("qseal_wrong_config.json");
    {
        std::ofstream out(wrong);
        out << R"({"version":1,
                   "params":{"n":1,"theta":0.4,"alpha":0.25,"seed":11},
                   "trials":20000,
                   "pinned_theta":0.3,
                   "analytic_ref_override":0.5,
                   "strategy":{"type":"honest"}})";
    }
    CHECK(run_cli("experiment " + wrong.string() + " --assert").exit_code == 2);
    CHECK(run_cli("experiment " + wrong.string()).exit_code == 0);
}

TEST_CASE("the bundled pass-rate config runs clean under assertion mode") {
    auto r = run_cli("experiment " QSEAL_SOURCE_DIR "/configs/pass_rate_pinned.json --assert");
    CHECK(r.exit_code == 0);
}
