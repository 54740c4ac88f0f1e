#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <sys/wait.h>

namespace {

struct CliRun {
    int code;
    std::string out;
};

CliRun run(const std::string& args) {
    std::string cmd = std::string(DSPHERE_CLI) + " " + args + " 2>&1";
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return {-1, ""};
    std::string out;
    std::array<char, 4096> buf;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
    int status = pclose(p);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

bool contains(const std::string& s, const std::string& x) { return s.find(x) != std::string::npos; }

}  // namespace

TEST(Cli, Eval) {
    EXPECT_EQ(run("eval 'a*db'").out, "lam db a + (1/2) lam' lamc dt a b\n");
    EXPECT_EQ(run("eval 'integrate(t^2 * omega)'").out, "(1/5)*(8/3)*pi^2\n");
    EXPECT_EQ(run("eval 'd(d(a*b))'").out, "0\n");
}

TEST(Cli, ParseErrorShowsCaret) {
    CliRun r = run("eval 'a + ?'");
    EXPECT_EQ(r.code, 2);
    EXPECT_TRUE(contains(r.out, "a + ?\n    ^")) << r.out;
}

TEST(Cli, PairingReport) {
    CliRun r = run("verify --suite chern --phi formal");
    EXPECT_TRUE(contains(r.out, "[PASS] chern/pairing")) << r.out;
    EXPECT_TRUE(contains(r.out, "= -1")) << r.out;
}

TEST(Cli, VolumeReport) {
    CliRun r = run("verify --suite volume");
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_TRUE(contains(r.out, "(8/3)*pi^2")) << r.out;
}

TEST(Cli, JsonIsDeterministic) {
    CliRun x = run("verify --suite algebra,trace,hochschild --seed 5 --format json");
    CliRun y = run("verify --suite algebra,trace,hochschild --seed 5 --format json");
    EXPECT_EQ(x.out, y.out);
    EXPECT_TRUE(contains(x.out, "\"schema\": \"dsphere-report/1\"")) << x.out;
    EXPECT_FALSE(contains(x.out, "elapsed"));
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run("verify --suite algebra").code, 0);
    EXPECT_EQ(run("verify --suite matsumoto").code, 1);
    EXPECT_EQ(run("verify --suite nosuch").code, 2);
    EXPECT_EQ(run("verify --truncation 2 --suite algebra").code, 2);
    EXPECT_EQ(run("verify --phi sin --suite algebra").code, 2);
    EXPECT_EQ(run("").code, 2);
}

TEST(Cli, TruncationFromEnvironment) {
    std::string cmd = "env DSPHERE_TRUNCATION=3 " + std::string(DSPHERE_CLI) + " verify --suite volume >/dev/null 2>&1";
    int status = std::system(cmd.c_str());
    ASSERT_TRUE(WIFEXITED(status));
    EXPECT_EQ(WEXITSTATUS(status), 2);
}
