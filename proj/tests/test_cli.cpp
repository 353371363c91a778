#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

#include "nearfield/sweep.hpp"

namespace {

struct CliRun {
    int code = -1;
    std::string out;
};

CliRun run(const std::string& args) {
    const std::string cmd = std::string(NEARFIELD_CLI_PATH) + " " + args + " 2>/dev/null";
    CliRun r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) {
        return r;
    }
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) {
        r.out.append(buf.data(), n);
    }
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string stderr_of(const std::string& args) {
    const std::string cmd = std::string(NEARFIELD_CLI_PATH) + " " + args + " 2>&1 >/dev/null";
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) {
        out.append(buf.data(), n);
    }
    pclose(pipe);
    return out;
}

std::string value_of(const std::string& table, const std::string& key) {
    std::istringstream in(table);
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream fields(line);
        std::string name;
        std::string value;
        fields >> name >> value;
        if (name == key) {
            return value;
        }
    }
    return {};
}

std::filesystem::path temp_path(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("nearfield_cli_" + name);
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST(Cli, GainAtDefaults) {
    const CliRun r = run("gain");
    ASSERT_EQ(r.code, 0);
    const double eva = std::stod(value_of(r.out, "gain_eva"));
    const double rad = std::stod(value_of(r.out, "gain_rad"));
    EXPECT_NEAR(eva, 0.001108998297012652, 1e-15);
    EXPECT_LT(std::abs(eva - rad) / rad, 1e-4);
    EXPECT_EQ(value_of(r.out, "array"), "spd_upa");
}

TEST(Cli, CapGainIsPiTimesSpd) {
    const CliRun spd = run("gain");
    const CliRun cap = run("gain --array cap");
    ASSERT_EQ(cap.code, 0);
    const double ratio = std::stod(value_of(cap.out, "gain_eva")) / std::stod(value_of(spd.out, "gain_eva"));
    EXPECT_NEAR(ratio, 3.14159, 2e-3);
}

TEST(Cli, NoReactiveChangesHeadline) {
    const CliRun r = run("gain --no-reactive");
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(value_of(r.out, "gain"), value_of(r.out, "gain_rad"));
}

TEST(Cli, EvenElementCountIsRejected) {
    EXPECT_EQ(run("gain --mx 24").code, 1);
    EXPECT_NE(stderr_of("gain --mx 24").find("odd"), std::string::npos);
}

TEST(Cli, ParseErrorsAndBadValuesExitOne) {
    EXPECT_EQ(run("gain --bogus").code, 1);
    EXPECT_EQ(run("gain --theta 0").code, 1);
    EXPECT_EQ(run("gain --array upa").code, 1);
    EXPECT_EQ(run("limits --area 1").code, 1);
    EXPECT_EQ(run("verify --perturb-order 4").code, 1);
    EXPECT_EQ(run("sweep --from 0").code, 1);
}

TEST(Cli, UnconvergedQuadratureExitsThree) {
    EXPECT_EQ(run("gain --array cap --r 0.2 --lx 5 --lz 5 --max-panels 1 --tol 1e-12").code, 3);
}

TEST(Cli, VerifyPassesAndPerturbationFails) {
    const CliRun ok = run("verify");
    EXPECT_EQ(ok.code, 0);
    EXPECT_EQ(ok.out.find("FAIL"), std::string::npos);
    const CliRun bad = run("verify --perturb-order 5");
    EXPECT_EQ(bad.code, 2);
    EXPECT_NE(bad.out.find("FAIL"), std::string::npos);
}

TEST(Cli, DefaultsJsonRoundTripsThroughConfig) {
    const CliRun d = run("--defaults");
    ASSERT_EQ(d.code, 0);
    auto j = nlohmann::json::parse(d.out);
    EXPECT_DOUBLE_EQ(j.at("r").get<double>(), 5.0);
    j["r"] = 10.0;
    j["m_x"] = 51;
    j["m_z"] = 51;
    const auto path = temp_path("config.json");
    std::ofstream(path) << j.dump();
    const CliRun from_file = run("gain --config " + path.string());
    const CliRun from_flags = run("gain --r 10 --mx 51 --mz 51");
    ASSERT_EQ(from_file.code, 0);
    EXPECT_EQ(from_file.out, from_flags.out);
    // Flags override the file.
    const CliRun overridden = run("gain --config " + path.string() + " --r 5 --mx 25 --mz 25");
    EXPECT_EQ(overridden.out, run("gain").out);
    std::filesystem::remove(path);
}

TEST(Cli, SweepWritesValidCsv) {
    const auto path = temp_path("sweep.csv");
    const CliRun r = run("sweep --var elements --from 5 --to 201 --steps 6 --out " + path.string());
    ASSERT_EQ(r.code, 0);
    const std::string csv = slurp(path);
    const auto check = nearfield::validate_csv(csv);
    EXPECT_TRUE(check.ok) << check.message;
    EXPECT_GE(check.rows, 5);
    EXPECT_EQ(csv, run("sweep --var elements --from 5 --to 201 --steps 6").out);
    std::filesystem::remove(path);
}

TEST(Cli, RatioCsvBelowZero) {
    const CliRun r = run("ratio --from 0.01 --to 10 --steps 4 --distances 1,5,25");
    ASSERT_EQ(r.code, 0);
    const auto check = nearfield::validate_csv(r.out);
    ASSERT_TRUE(check.ok) << check.message;
    EXPECT_EQ(check.rows, 12);
    std::istringstream in(r.out);
    std::string line;
    std::getline(in, line);
    while (std::getline(in, line)) {
        const double db = std::stod(line.substr(line.rfind(',') + 1));
        EXPECT_LT(db, 0.0);
    }
}

TEST(Cli, LimitsTable) {
    const CliRun r = run("limits");
    ASSERT_EQ(r.code, 0);
    EXPECT_NEAR(std::stod(value_of(r.out, "cap_eva")), 0.499986, 1e-6);
    EXPECT_NEAR(std::stod(value_of(r.out, "upa_rad")), 0.5 / 3.141592653589793, 1e-15);
}
