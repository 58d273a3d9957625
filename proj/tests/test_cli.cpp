// End-to-end tests of the xgd binary. The harness provides its path through
// the XGD_CLI environment variable; every test spawns the real executable and
// inspects exit codes and captured output.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "xgd/state_io.hpp"
#include "xgd/xstate.hpp"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

const std::string& cli_path() {
    static const std::string path = [] {
        const char* p = std::getenv("XGD_CLI");
        REQUIRE_MESSAGE(p != nullptr, "XGD_CLI must point at the xgd binary");
        return std::string(p);
    }();
    return path;
}

RunResult run(const std::string& args) {
    const std::string out_file = "cli_stdout.txt";
    const std::string err_file = "cli_stderr.txt";
    const std::string cmd =
        "'" + cli_path() + "' " + args + " > " + out_file + " 2> " + err_file;
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out_file);
    r.err = slurp(err_file);
    std::remove(out_file.c_str());
    std::remove(err_file.c_str());
    return r;
}

// Extract "value" from "key : value" aligned-text output.
std::string field(const std::string& text, const std::string& key) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        const auto colon = line.find(':');
        if (colon == std::string::npos) continue;
        std::string k = line.substr(0, colon);
        while (!k.empty() && k.back() == ' ') k.pop_back();
        if (k != key) continue;
        std::string v = line.substr(colon + 1);
        while (!v.empty() && v.front() == ' ') v.erase(v.begin());
        return v;
    }
    return "";
}

}  // namespace

TEST_CASE("family --out writes a loadable state; discord reads it back") {
    const RunResult fam = run("family ghz --p 0.3 --out cli_ghz.json");
    CHECK(fam.exit_code == 0);
    const xgd::DensityMatrix rho = xgd::load_state("cli_ghz.json");
    CHECK(rho(0, 7).real() == doctest::Approx(0.35).epsilon(1e-15));

    const RunResult d = run("discord cli_ghz.json");
    CHECK(d.exit_code == 0);
    CHECK(std::stod(field(d.out, "value")) == doctest::Approx(0.245).epsilon(1e-11));
    CHECK(field(d.out, "method") == "class1");
    CHECK(field(d.out, "branch") == "B3");

    const RunResult j = run("discord cli_ghz.json --json");
    CHECK(j.exit_code == 0);
    const nlohmann::json doc = nlohmann::json::parse(j.out);
    CHECK(doc["value"].get<double>() == doctest::Approx(0.245).epsilon(1e-11));
    CHECK(doc["method"] == "class1");
}

TEST_CASE("validate reports class and compliance") {
    REQUIRE(run("family w --p 0.4 --out cli_w.json").exit_code == 0);
    const RunResult v = run("validate cli_w.json");
    CHECK(v.exit_code == 0);
    CHECK(field(v.out, "class") == "Class2");
    CHECK(field(v.out, "compliant") == "true");

    const RunResult j = run("validate cli_w.json --json");
    const nlohmann::json doc = nlohmann::json::parse(j.out);
    CHECK(doc["class"] == "Class2");
    CHECK(doc["compliant"].get<bool>());
    CHECK(doc["off_support_class2"].get<double>() <= 1e-12);
}

TEST_CASE("discord --method oracle prints both oracles and their gap") {
    const RunResult r = run("discord cli_ghz.json --method oracle --grid 16x32");
    CHECK(r.exit_code == 0);
    CHECK(std::stod(field(r.out, "oracle_sphere")) == doctest::Approx(0.245).epsilon(1e-6));
    CHECK(std::stod(field(r.out, "oracle_meas")) == doctest::Approx(0.245).epsilon(1e-6));
    CHECK(std::stod(field(r.out, "oracle_gap")) <= 1e-6);
}

TEST_CASE("closest writes the classical state and certifies the distance") {
    const RunResult r = run("closest cli_ghz.json --out cli_chi.json");
    CHECK(r.exit_code == 0);
    CHECK(std::stod(field(r.out, "distance_sq")) == doctest::Approx(0.245).epsilon(1e-11));
    CHECK(std::stod(field(r.out, "certificate_gap")) <= 1e-12);
    CHECK(field(r.out, "psd_ok") == "yes");
    const RunResult d = run("discord cli_chi.json");
    CHECK(d.exit_code == 0);
    CHECK(std::stod(field(d.out, "value")) <= 1e-10);
}

TEST_CASE("monogamy renders the report") {
    const RunResult r = run("monogamy cli_w.json");
    CHECK(r.exit_code == 0);
    const double w = 0.36;  // (1 - 0.4)^2
    CHECK(std::stod(field(r.out, "d_1_23")) == doctest::Approx(4.0 / 9.0 * w).epsilon(1e-10));
    CHECK(std::stod(field(r.out, "d_12")) == doctest::Approx(w / 6.0).epsilon(1e-10));
    CHECK(std::stod(field(r.out, "residual")) ==
          doctest::Approx(4.0 / 9.0 * w - w / 3.0).epsilon(1e-10));
    CHECK(field(r.out, "monogamous") == "yes");
}

TEST_CASE("sweep emits CSV with the requested columns") {
    const RunResult r = run("sweep --family ghz --param p --from 0 --to 1 --steps 3 "
                            "--outputs discord_1_23,k1");
    CHECK(r.exit_code == 0);
    std::istringstream in(r.out);
    std::string header;
    std::getline(in, header);
    CHECK(header == "p,discord_1_23,k1");
    std::string row;
    int rows = 0;
    double last_discord = -1;
    while (std::getline(in, row)) {
        ++rows;
        const auto c1 = row.find(',');
        const auto c2 = row.find(',', c1 + 1);
        last_discord = std::stod(row.substr(c1 + 1, c2 - c1 - 1));
    }
    CHECK(rows == 3);
    CHECK(last_discord == 0.0);  // p = 1 is the maximally mixed state
}

TEST_CASE("permute relabels qubits before the split") {
    // For the W mixture every qubit plays the same role: permuting must not
    // change the discord.
    const RunResult a = run("discord cli_w.json");
    const RunResult b = run("discord cli_w.json --permute 2,3,1");
    CHECK(b.exit_code == 0);
    CHECK(std::stod(field(a.out, "value")) ==
          doctest::Approx(std::stod(field(b.out, "value"))).epsilon(1e-10));
}

TEST_CASE("random --class emits reproducible states") {
    const RunResult a = run("random --class class2 --seed 9 --out cli_r1.json");
    const RunResult b = run("random --class class2 --seed 9 --out cli_r2.json");
    REQUIRE(a.exit_code == 0);
    REQUIRE(b.exit_code == 0);
    CHECK(slurp("cli_r1.json") == slurp("cli_r2.json"));
    const RunResult v = run("validate cli_r1.json");
    CHECK(field(v.out, "class") == "Class2");
    std::remove("cli_r1.json");
    std::remove("cli_r2.json");
}

TEST_CASE("exit codes: parse 2, validation 3, class mismatch 4, success 0") {
    // Unknown flag: command-line parse failure.
    CHECK(run("discord cli_ghz.json --nonsense").exit_code == 2);
    // Missing subcommand.
    CHECK(run("").exit_code == 2);
    // Unreadable state file.
    CHECK(run("discord no_such_file.json").exit_code == 2);

    // Malformed document.
    {
        std::ofstream f("cli_bad.json");
        f << "{ not json";
    }
    CHECK(run("discord cli_bad.json").exit_code == 2);
    std::remove("cli_bad.json");

    // Structurally fine but fails validation (trace 0.9).
    {
        std::ofstream f("cli_trace.json");
        f << "{\"dim\": 2, \"matrix\": [[[0.45,0],[0,0]], [[0,0],[0.45,0]]]}";
    }
    const RunResult tv = run("discord cli_trace.json");
    CHECK(tv.exit_code == 3);
    CHECK(tv.err.find("trace residual") != std::string::npos);
    std::remove("cli_trace.json");

    // Requesting the wrong closed form: class mismatch.
    const RunResult cm = run("discord cli_ghz.json --kroute class2");
    CHECK(cm.exit_code == 4);
    CHECK(cm.err.find("Class1") != std::string::npos);

    // Invalid family parameter: validation failure.
    CHECK(run("family ghz --p 1.5").exit_code == 3);

    // Success path cleanup check.
    CHECK(run("validate cli_ghz.json").exit_code == 0);
}

TEST_CASE("cleanup of shared fixture files") {
    std::remove("cli_ghz.json");
    std::remove("cli_w.json");
    std::remove("cli_chi.json");
    CHECK(true);
}
