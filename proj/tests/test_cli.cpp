#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "lgbound/cli.hpp"

using namespace lgbound;
using namespace lgbound::cli;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        if (!line.empty() && line.back() == ',') cells.emplace_back();
        rows.push_back(cells);
    }
    return rows;
}

}  // namespace

TEST(Config, JsonRoundTrip) {
    RunConfig c;
    c.command = "lg";
    c.system = "morse";
    c.lambda = 12.5;
    c.n = 3;
    c.tau_count = 77;
    c.half_line = true;
    c.format = "json";
    const RunConfig back = config_from_json(nlohmann::json::parse(to_json(c).dump()));
    EXPECT_EQ(back, c);
    EXPECT_THROW(config_from_json(nlohmann::json::parse(R"({"bogus": 1})")), ConfigError);
    EXPECT_THROW(config_from_json(nlohmann::json::parse(R"({"lambda": "big"})")), ConfigError);
}

TEST(Config, StateSpec) {
    RunConfig c;
    apply_state_spec(c, "n=4");
    EXPECT_EQ(c.state, "eigenstate");
    EXPECT_EQ(c.n, 4u);
    apply_state_spec(c, "theta=1.4,phi=3.14");
    EXPECT_EQ(c.state, "superposition");
    EXPECT_DOUBLE_EQ(c.theta, 1.4);
    EXPECT_THROW(apply_state_spec(c, "n=1,theta=2"), ConfigError);
    EXPECT_THROW(apply_state_spec(c, "n=1.5"), ConfigError);
    EXPECT_THROW(apply_state_spec(c, "x=1"), ConfigError);
}

TEST(Config, InvalidCombinationsRejected) {
    EXPECT_EQ(run_cli({"correlator", "--system", "morse", "--state", "theta=1,phi=0"}).code, kExitConfig);
    EXPECT_EQ(run_cli({"lg", "--system", "morse", "--lambda", "3", "--state", "n=3"}).code, kExitConfig);
    EXPECT_EQ(run_cli({"nonsense"}).code, kExitConfig);
    EXPECT_EQ(run_cli({"lg", "--format", "xml"}).code, kExitConfig);
    EXPECT_EQ(run_cli({"lg", "--tau-count", "1"}).code, kExitConfig);
    EXPECT_EQ(run_cli({"correlator", "--state", "n=2", "--approx", "three-term"}).code, kExitConfig);
    EXPECT_EQ(run_cli({"lg", "--no-such-flag"}).code, kExitConfig);
}

TEST(Config, FileThenFlags) {
    const std::string path = testing::TempDir() + "lgbound_cfg.json";
    {
        std::ofstream f(path);
        f << R"({"command": "correlator", "tau_count": 7, "n": 2, "format": "json"})";
    }
    const RunConfig c = parse_args({"correlator", "--config", path, "--tau-count", "9"});
    EXPECT_EQ(c.tau_count, 9u);
    EXPECT_EQ(c.n, 2u);
    EXPECT_EQ(c.format, "json");
    std::remove(path.c_str());
}

TEST(Commands, CorrelatorMatchesLibrary) {
    const CliRun r = run_cli({"correlator", "--state", "n=1", "--tau-count", "33"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    const auto rows = parse_csv(r.out);
    ASSERT_EQ(rows.size(), 34u);
    EXPECT_EQ(rows[0], (std::vector<std::string>{"tau", "C", "C_classical", "q_pp"}));
    EXPECT_EQ(rows[1][1], "1");  // tau = 0
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const double tau = std::stod(rows[i][0]);
        EXPECT_NEAR(std::stod(rows[i][1]), exact_qho_correlator(1, tau), 1e-14);
        EXPECT_NEAR(std::stod(rows[i][2]), classical_correlator(tau), 1e-14);
    }
}

TEST(Commands, ThreeTermColumn) {
    const CliRun r = run_cli({"correlator", "--state", "n=1", "--approx", "three-term", "--tau-count", "9"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    const auto rows = parse_csv(r.out);
    for (std::size_t i = 1; i < rows.size(); ++i)
        EXPECT_NEAR(std::stod(rows[i][1]), 3.0 / kPi * std::cos(std::stod(rows[i][0])), 1e-14);
}

TEST(Commands, CsvFormatting) {
    const CliRun r = run_cli({"correlator", "--state", "n=0", "--tau-count", "3"});
    const auto rows = parse_csv(r.out);
    EXPECT_EQ(rows[2][0], "3.14159265358979");  // 15 significant digits
    EXPECT_EQ(csv_escape("a,b"), "\"a,b\"");
    EXPECT_EQ(csv_escape("say \"hi\""), "\"say \"\"hi\"\"\"");
    EXPECT_EQ(format_number(std::nan("")), "");
}

TEST(Commands, LgGroundStateNoFlags) {
    const CliRun r = run_cli({"lg", "--state", "n=0", "--format", "json"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    ASSERT_TRUE(j.contains("config"));
    ASSERT_TRUE(j.contains("records"));
    ASSERT_TRUE(j.contains("summary"));
    for (const auto& rec : j["records"]) {
        EXPECT_EQ(rec["lg2_violated"], 0.0);
        EXPECT_EQ(rec["lg3_violated"], 0.0);
        EXPECT_EQ(rec["lg4_violated"], 0.0);
    }
    EXPECT_EQ(j["summary"]["regime"], "I");
}

TEST(Commands, LgFirstExcited) {
    const CliRun r = run_cli({"lg", "--state", "n=1", "--format", "json"});
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_NEAR(j["summary"]["lg3_min"].get<double>(), -0.365, 0.01);
    EXPECT_EQ(j["records"][0].size(), 1u + 4u + 12u + 8u + 3u);
}

TEST(Commands, MorseLg) {
    const CliRun r = run_cli({"lg", "--system", "morse", "--lambda", "50", "--state", "n=1", "--format", "json"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_NEAR(j["summary"]["lg3_min"].get<double>(), -0.35, 0.02);
    const CliRun same = run_cli({"morse-lg", "--state", "n=1", "--format", "json"});
    EXPECT_EQ(nlohmann::json::parse(same.out)["summary"], j["summary"]);
}

TEST(Commands, Parity) {
    const CliRun r = run_cli({"parity", "--format", "json", "--state", "q=0.5,sigma=1"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_NEAR(j["summary"]["argmin"].get<double>(), std::sqrt(2.0 / kPi), 1e-6);
    EXPECT_NEAR(j["summary"]["min"].get<double>(), -0.3024, 1e-3);
    EXPECT_NEAR(j["summary"]["state_lg2"].get<double>(), parity_lg2(0.5, 1.0), 1e-15);
}

TEST(Commands, ScanEigenstatesOddAboveEven) {
    const CliRun r = run_cli({"scan-eigenstates", "--max-n", "50", "--format", "json"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["summary"]["odd_above_even"], 1.0);
    EXPECT_EQ(j["records"].size(), 51u);
}

TEST(Commands, ScanRegionMasksAndSummary) {
    const CliRun r = run_cli({"scan-region", "--c-count", "41", "--d-count", "41", "--format", "json"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_LE(j["summary"]["q_min"].get<double>(), -0.02);
    EXPECT_TRUE(j["records"][0]["q"].is_null());  // c = d
}

TEST(Commands, NumericalEscalation) {
    // An unreachable truncation target with an even state exhausts the cap.
    const CliRun r = run_cli({"correlator", "--state", "n=10", "--truncation", "1e-9", "--tau-count", "3"});
    EXPECT_EQ(r.code, kExitNumerical);
    EXPECT_NE(r.err.find("truncation"), std::string::npos);
}

TEST(Commands, ByteIdenticalOutput) {
    const std::vector<std::string> args = {"scan-superposition", "--theta-count", "7", "--phi-count", "5",
                                           "--tau-count", "64"};
    auto a = args, b = args;
    a.insert(a.end(), {"--threads", "1"});
    b.insert(b.end(), {"--threads", "3"});
    const CliRun x = run_cli(a), y = run_cli(b);
    ASSERT_EQ(x.code, kExitOk);
    EXPECT_EQ(x.out, y.out);
    EXPECT_EQ(x.out, run_cli(a).out);
}

TEST(Commands, OutputFile) {
    const std::string path = testing::TempDir() + "lgbound_out.csv";
    ASSERT_EQ(run_cli({"classicalization", "--max-n", "4", "--output", path}).code, kExitOk);
    std::ifstream in(path);
    std::string header;
    std::getline(in, header);
    EXPECT_EQ(header, "n,delta,max_gap");
    std::remove(path.c_str());
}

TEST(Commands, Help) {
    const CliRun r = run_cli({"--help"});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_NE(r.out.find("--truncation"), std::string::npos);
}
