#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <sys/wait.h>

namespace {

struct Invocation {
  int code;
  std::string out;
};

// stdout only; stderr goes to /dev/null unless merged by the caller.
Invocation run(const std::string& args, bool merge_stderr = false) {
  const std::string command = std::string(SUNEXP_CLI_PATH) + " " + args +
                              (merge_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return {-1, ""};
  std::string out;
  std::array<char, 4096> buffer{};
  while (const std::size_t got = fread(buffer.data(), 1, buffer.size(), pipe)) out.append(buffer.data(), got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

TEST(Cli, NuT) {
  EXPECT_EQ(run("nu-t 16 143").out, "24\n");
  EXPECT_EQ(run("nu-t 17 272").code, 0);
}

TEST(Cli, BetaWithWitness) {
  const Invocation r = run("beta 15 16");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "23 (witness j=17, scanned j=16..51)\n");
}

TEST(Cli, BetaUncertifiedExitsThree) {
  EXPECT_EQ(run("beta 15 16 --precision-cap 16").code, 3);
}

TEST(Cli, PrecisionCapFromEnvironment) {
  const std::string command = "SUNEXP_PRECISION_CAP=16 " + std::string(SUNEXP_CLI_PATH) +
                              " beta 15 16 >/dev/null 2>&1";
  const int status = std::system(command.c_str());
  EXPECT_EQ(WEXITSTATUS(status), 3);
}

TEST(Cli, Ebar) {
  const Invocation r = run("ebar 9");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "12, argmax k ≡ 72 mod 128");
  EXPECT_NE(r.out.find("s(n)=11"), std::string::npos);
}

TEST(Cli, S) { EXPECT_EQ(run("s 17").out, "23\n"); }

TEST(Cli, Xin) {
  const Invocation r = run("xin 3 10 10");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("0101010000"), std::string::npos);
  EXPECT_NE(r.out.find("nu = 4"), std::string::npos);
}

TEST(Cli, TableFormats) {
  const Invocation md = run("table 1.5");
  EXPECT_EQ(md.code, 0);
  EXPECT_NE(md.out.find("(computed)"), std::string::npos);
  const Invocation csv = run("table 1.6 --format csv");
  EXPECT_EQ(csv.code, 0);
  EXPECT_EQ(csv.out.rfind("table,", 0), 0u);
  const Invocation js = run("table 1.6 --format json");
  EXPECT_NE(js.out.find("\"pass\":true"), std::string::npos);
}

TEST(Cli, VerifyMismatchExitsOne) {
  const Invocation r = run("verify stirowr");
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("FAIL prop2.2 [b=1 eps=0"), std::string::npos);
}

TEST(Cli, VerifyJsonLines) {
  const Invocation r = run("verify identities --format json");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("{\"computed\":", 0), 0u);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("nu-t 16").code, 2);
  EXPECT_EQ(run("nu-t x 3").code, 2);
  EXPECT_EQ(run("table 2.7").code, 2);
  EXPECT_EQ(run("xin 1 7 4").code, 2);
  EXPECT_EQ(run("verify bogus").code, 2);
}

TEST(Cli, HelpExitsZero) { EXPECT_EQ(run("--help").code, 0); }

}  // namespace
