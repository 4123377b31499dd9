#include <gtest/gtest.h>

#include <cctype>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include <json.hpp>

namespace {

struct Run {
    int status = -1;
    std::string out;
};

/// Runs the CLI through the shell; stderr is discarded.
Run run(const std::string& args, const std::string& env = {}) {
    const std::string cmd = env + (env.empty() ? "" : " ") + std::string(HURWITZ_CLI) + " " + args + " 2>/dev/null";
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return r;
    char buf[4096];
    std::size_t k;
    while ((k = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, k);
    const int raw = pclose(p);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

std::string golden(const std::string& name) {
    std::ifstream f(std::string(HURWITZ_GOLDEN_DIR) + "/" + name, std::ios::binary);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

struct GoldenCase {
    const char* args;
    const char* file;
};

void PrintTo(const GoldenCase& c, std::ostream* os) { *os << c.file; }

class Golden : public ::testing::TestWithParam<GoldenCase> {};

} // namespace

TEST_P(Golden, BytesMatch) {
    auto r = run(GetParam().args);
    EXPECT_EQ(r.status, 0);
    const auto want = golden(GetParam().file);
    ASSERT_FALSE(want.empty()) << GetParam().file;
    EXPECT_EQ(r.out, want) << GetParam().args;
}

INSTANTIATE_TEST_SUITE_P(
    Cli, Golden,
    ::testing::Values(GoldenCase{"catalog --n 6 --format json", "catalog_6.json"},
                      GoldenCase{"certify --n 6 --format json", "certify_6.json"},
                      GoldenCase{"certify --n 6 --format csv", "certify_6.csv"},
                      GoldenCase{"certify --n 7", "certify_7.txt"},
                      GoldenCase{"genus-bound --index 18 --v 9:0,8:0,7:4,6:0 --format json", "genus_bound.json"},
                      GoldenCase{"genus-bound --index 18 --v 9:0,8:0,7:4,6:0", "genus_bound.txt"},
                      GoldenCase{"modular-table --max 30 --format json", "modular_30.json"},
                      GoldenCase{"modular-table --max 30 --format csv", "modular_30.csv"},
                      GoldenCase{"simple-cover --scan 12 3 --format json", "simple_cover_12_3.json"},
                      GoldenCase{"simple-cover --scan 12 3 --format csv", "simple_cover_12_3.csv"},
                      GoldenCase{"laguerre-verify --max-n 6 --format json", "laguerre_verify_6.json"},
                      GoldenCase{"scan --n 4 --height 3 --format json", "scan_4_3.json"}),
    [](const ::testing::TestParamInfo<GoldenCase>& info) {
        std::string name = info.param.file;
        for (auto& c : name)
            if (!std::isalnum(static_cast<unsigned char>(c))) c = '_';
        return name;
    });

TEST(Cli, GenusBoundPrintsFour) {
    auto r = run("genus-bound --index 18 --v 9:0,8:0,7:4,6:0");
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, "4\n");
}

TEST(Cli, VerificationsExitZero) {
    EXPECT_EQ(run("certify --n 7").status, 0);
    EXPECT_EQ(run("laguerre-verify --max-n 12").status, 0);
    EXPECT_EQ(run("monodromy --n 6 --all").status, 0);
    EXPECT_EQ(run("simple-cover").status, 0);
}

TEST(Cli, UsageErrorsExitOne) {
    EXPECT_EQ(run("").status, 1);
    EXPECT_EQ(run("bogus").status, 1);
    EXPECT_EQ(run("certify").status, 1);
    EXPECT_EQ(run("certify --n 5").status, 1);
    EXPECT_EQ(run("catalog --n 6 --format csv").status, 1);
    EXPECT_EQ(run("scan --n 4 --format xml").status, 1);
    EXPECT_EQ(run("genus-bound --index 18 --v 9-0").status, 1);
    EXPECT_EQ(run("monodromy --n 6 --steps 2").status, 1);
    EXPECT_EQ(run("certify --n 6", "HURWITZ_ELEMENT_CAP=10").status, 1);
}

TEST(Cli, DeterministicAcrossJobs) {
    auto a = run("certify --n 7 --format json --jobs 1");
    auto b = run("certify --n 7 --format json --jobs 3");
    EXPECT_EQ(a.status, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(run("scan --n 5 --height 4 --format json --jobs 1").out,
              run("scan --n 5 --height 4 --format json --jobs 2").out);
    EXPECT_EQ(run("monodromy --n 7 --all --format json").out, run("monodromy --n 7 --all --format json --jobs 2").out);
}

TEST(Cli, OutFile) {
    const auto path = std::filesystem::temp_directory_path() / "hurwitz_cli_out.json";
    std::filesystem::remove(path);
    auto r = run("catalog --n 6 --format json --out " + path.string());
    EXPECT_EQ(r.status, 0);
    EXPECT_TRUE(r.out.empty());
    std::ifstream f(path, std::ios::binary);
    std::ostringstream s;
    s << f.rdbuf();
    EXPECT_EQ(s.str(), golden("catalog_6.json"));
    std::filesystem::remove(path);
}

TEST(Cli, MonodromyJsonSummary) {
    auto r = run("monodromy --n 6 --all --format json");
    ASSERT_EQ(r.status, 0);
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["genus"], 4);
    EXPECT_EQ(j["delta_infinity"], 3);
    EXPECT_EQ(j["loops"].size(), 6u);
    EXPECT_TRUE(j["relation_holds"].get<bool>());
}
