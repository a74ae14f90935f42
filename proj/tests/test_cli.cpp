// Runs the moyrt executable and checks exit codes and byte-exact goldens.
#include <moyrt/json_io.hpp>
#include <moyrt/links.hpp>
#include <moyrt/samples.hpp>

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

const std::string kData = MOYRT_DATA_DIR;
const std::string kCli = MOYRT_CLI;

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " \"" + kCli + "\" " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string diagram(const std::string& name) { return "\"" + kData + "/" + name + "\""; }
std::string invalid(const std::string& name) { return "\"" + kData + "/../invalid/" + name + "\""; }

std::string line_with(const std::string& text, const std::string& prefix) {
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);)
    if (l.rfind(prefix, 0) == 0) return l.substr(prefix.size());
  return "<missing " + prefix + ">";
}

std::string trim(std::string s) {
  while (!s.empty() && (s.back() == ' ' || s.back() == '\r')) s.pop_back();
  while (!s.empty() && s.front() == ' ') s.erase(s.begin());
  return s;
}

}  // namespace

TEST(Cli, ThetaEval) {
  const auto r = run("eval " + diagram("theta.json"));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(line_with(r.out, "bracket: "), "q^-1 + q");
}

TEST(Cli, CircleEvalBothEngines) {
  const auto r = run("eval " + diagram("circle_m2.json") + " --engine both");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(line_with(r.out, "bracket (dp): "), "q^-4 + q^-2 + 2 + q^2 + q^4");
  EXPECT_EQ(line_with(r.out, "engines: "), "agree");
}

TEST(Cli, NOverridesFile) {
  const auto r = run("eval " + diagram("circle_m2.json") + " --n 2");
  EXPECT_EQ(line_with(r.out, "bracket: "), "1");
}

TEST(Cli, HopfRtMatchesIndependentOracle) {
  const auto r = run("rt " + diagram("hopf_11.json") + " --engine naive");
  EXPECT_EQ(r.code, 0);
  const auto d = moyrt::samples::hopf(1, 1);
  EXPECT_EQ(line_with(r.out, "bracket: "), moyrt::bracket_link_naive(d, 2).to_string());
  EXPECT_EQ(line_with(r.out, "rt: "), "1 + q^2 + q^4 + q^6");
  EXPECT_EQ(line_with(r.out, "parity "), "OK");
}

TEST(Cli, KinkUnknotMatchesUnknot) {
  const auto a = run("rt " + diagram("unknot_m.json")), b = run("rt " + diagram("kink_unknot.json"));
  EXPECT_EQ(line_with(a.out, "rt: "), line_with(b.out, "rt: "));
  EXPECT_EQ(line_with(a.out, "rt: "), moyrt::quantum_binomial(3, 2).to_string());
}

TEST(Cli, InputErrorsExitOne) {
  EXPECT_EQ(run("eval " + invalid("kind_mismatch.json")).code, 1);
  EXPECT_EQ(run("eval " + invalid("not_closed.json")).code, 1);
  EXPECT_EQ(run("eval " + invalid("truncated.json")).code, 1);
  EXPECT_EQ(run("eval " + invalid("bad_flow.json")).code, 1);
  EXPECT_EQ(run("eval " + diagram("no_such.json")).code, 1);
  EXPECT_EQ(run("rt " + diagram("theta.json")).code, 1);
  EXPECT_EQ(run("eval " + diagram("theta.json") + " --engine fast").code, 1);
  EXPECT_EQ(run("verify nonsense").code, 1);
  EXPECT_EQ(run("verify skein --bounds N").code, 1);
  EXPECT_EQ(run("info " + invalid("bad_flow.json")).code, 1);
}

TEST(Cli, VerifySuites) {
  const auto s = run("verify skein --bounds N=3 colors=2");
  EXPECT_EQ(s.code, 0);
  EXPECT_NE(s.out.find("PASS skein: relation 1 N=1 m=0"), std::string::npos);
  EXPECT_NE(s.out.find("0 failed"), std::string::npos);
  EXPECT_EQ(run("verify gdim --bounds N=6").code, 0);
  const auto p = run("verify parity --bounds count=100 --seed 7");
  EXPECT_EQ(p.code, 0);
  EXPECT_NE(p.out.find("suite parity: 130 checked, 0 failed"), std::string::npos);
}

TEST(Cli, VerifyIsDeterministic) {
  const auto a = run("verify parity --seed 3");
  const auto b = run("verify parity --seed 3", "MOYRT_THREADS=1");
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out, run("verify parity --seed 4").out);
}

TEST(Cli, ThreadsDoNotChangeOutput) {
  const auto a = run("rt " + diagram("trefoil_1.json"), "MOYRT_THREADS=1");
  const auto b = run("rt " + diagram("trefoil_1.json"), "MOYRT_THREADS=8");
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, FmtIsIdentityOnCanonicalFiles) {
  for (const char* f : {"theta.json", "hopf_11.json", "unlink_12.json"}) {
    const auto r = run("fmt " + diagram(f));
    EXPECT_EQ(r.out, moyrt::read_text_file(kData + "/" + f)) << f;
  }
}

TEST(Cli, GoldenFiles) {
  std::ifstream manifest(kData + "/../golden/manifest.txt");
  ASSERT_TRUE(manifest);
  int checked = 0;
  for (std::string line; std::getline(manifest, line);) {
    if (line.empty() || line[0] == '#') continue;
    const auto bar = line.find('|');
    ASSERT_NE(bar, std::string::npos) << line;
    const std::string golden = trim(line.substr(0, bar));
    std::istringstream words(trim(line.substr(bar + 1)));
    std::string cmd, file, rest, w;
    words >> cmd >> file;
    while (words >> w) rest += " " + w;
    const auto r = run(cmd + " " + diagram(file) + rest);
    EXPECT_EQ(r.code, 0) << golden;
    EXPECT_EQ(r.out, moyrt::read_text_file(kData + "/../golden/" + golden)) << golden;
    // twice, for stability
    EXPECT_EQ(run(cmd + " " + diagram(file) + rest).out, r.out) << golden;
    ++checked;
  }
  EXPECT_GE(checked, 10);
}
