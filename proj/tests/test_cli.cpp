#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <string>

#include <nlohmann/json.hpp>

namespace {

struct Run {
    int rc = -1;
    std::string out;
};

Run run(const std::string& args) {
    std::string cmd = std::string(QFL_CLI_PATH) + " " + args + " 2>/dev/null";
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return r;
    char buf[4096];
    std::size_t k;
    while ((k = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, k);
    int status = pclose(p);
    r.rc = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

int lines(const std::string& s) {
    int c = 0;
    for (char ch : s) c += ch == '\n';
    return c;
}

}  // namespace

TEST(Cli, EnumNc) {
    auto r = run("enum nc --n 3");
    EXPECT_EQ(r.rc, 0);
    EXPECT_EQ(lines(r.out), 5);
    auto j = nlohmann::json::parse(run("enum nc --n 4 --format json").out);
    EXPECT_EQ(j.size(), 14u);
}

TEST(Cli, EnumCountsAndFaces) {
    auto c = run("enum counts --n 1 --format csv");
    EXPECT_EQ(c.rc, 0);
    EXPECT_EQ(lines(c.out), 2);
    auto j = nlohmann::json::parse(run("enum faces --n 3 --format json").out);
    ASSERT_EQ(j.size(), 3u);
    std::vector<std::string> counts;
    for (const auto& row : j) counts.push_back(row["count"].get<std::string>());
    EXPECT_EQ(counts, (std::vector<std::string>{"5", "6", "2"}));
}

TEST(Cli, Poly) {
    EXPECT_EQ(run("poly schubert --w 21").out, "x1 - t1\n");
    EXPECT_EQ(run("poly forest --reseq \"r1-\"").out, "1\n");
    auto r = run("poly forest --nc 312");
    EXPECT_EQ(r.rc, 0);
    EXPECT_NE(r.out.find("x1^2"), std::string::npos);
    EXPECT_EQ(run("poly forest --nc 231").rc, 2);
    EXPECT_EQ(run("poly fundamental --forest \"B(3,4)\" --n 3").out, "x1 + x2 + x3 - t1 - t2 - t3\n");
}

TEST(Cli, VerifyExitCodes) {
    EXPECT_EQ(run("verify duality --n 4").rc, 0);
    EXPECT_EQ(run("verify plucker --n 2 --seed 1").rc, 0);
    EXPECT_EQ(run("verify positivity --n 4").rc, 0);
    EXPECT_EQ(run("verify bogus --n 2").rc, 2);
    EXPECT_EQ(run("verify duality --n 40").rc, 2);
    EXPECT_EQ(run("enum nc --n 0").rc, 2);
    EXPECT_EQ(run("frobnicate").rc, 2);
}

TEST(Cli, VerifyWritesReport) {
    std::string path = ::testing::TempDir() + "qfl_cli_report.json";
    auto r = run("verify tamari --n 3 --seed 5 --out " + path);
    EXPECT_EQ(r.rc, 0);
    std::ifstream in(path);
    auto j = nlohmann::json::parse(in);
    EXPECT_EQ(j["suite"], "tamari");
    EXPECT_EQ(j["seed"], 5);
    EXPECT_TRUE(j["passed"].get<bool>());
    std::remove(path.c_str());
}
