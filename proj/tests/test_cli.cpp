#include <gtest/gtest.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

std::string bin() {
  const char* b = std::getenv("POLYTILE_BIN");
  return b ? b : POLYTILE_BIN;
}

std::string data(const std::string& name) {
  const char* d = std::getenv("POLYTILE_DATA");
  return (fs::path(d ? d : POLYTILE_DATA) / name).string();
}

Run run(const std::string& args) {
  Run r;
  std::string cmd = bin() + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  int st = pclose(p);
  r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const fs::path& p, const std::string& s) { std::ofstream(p, std::ios::binary) << s; }

class Cli : public ::testing::Test {
 protected:
  fs::path dir;
  void SetUp() override {
    dir = fs::temp_directory_path() /
          ("polytile_cli_" + std::to_string(::getpid()) + "_" +
           ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(dir);
    fs::create_directories(dir);
  }
  void TearDown() override { fs::remove_all(dir); }
  std::string at(const std::string& name) const { return (dir / name).string(); }
};

}  // namespace

TEST_F(Cli, WangSolveThree) {
  auto r = run("wang-solve --input " + data("three.wang") + " --max-period 4");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "period: 3 1\ntile1 tile2 tile3\n");
}

TEST_F(Cli, WangSolveNone) {
  spit(at("bad.wang"), "colors: red blue\ntile x N=red E=red S=blue W=red\n");
  auto r = run("wang-solve --input " + at("bad.wang") + " --max-period 4");
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("none"), std::string::npos);
}

TEST_F(Cli, UsageAndParseErrorsExitTwo) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("wang-solve").code, 2);
  EXPECT_EQ(run("wang-solve --input " + at("missing.wang")).code, 2);
  EXPECT_EQ(run("check-words --n 0").code, 2);
  spit(at("broken.wang"), "colors: a\ntile x N=a E=a S=a W=zzz\n");
  EXPECT_EQ(run("wang-solve --input " + at("broken.wang")).code, 2);
  spit(at("junk.wang"), "colours: a\n");
  EXPECT_EQ(run("reduce --input " + at("junk.wang")).code, 2);
}

TEST_F(Cli, SeedIsAccepted) {
  auto a = run("--seed 17 wang-solve --input " + data("three.wang"));
  auto b = run("wang-solve --input " + data("three.wang"));
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST_F(Cli, CheckWords) {
  auto r = run("check-words --n 3 --t 2");
  EXPECT_EQ(r.code, 0);
  for (const char* s : {"meat: closure=(0,0) closed=yes simple=yes bbox=171x171",
                        "jaw: closure=(0,0) closed=yes simple=yes bbox=261x261",
                        "link: closure=(0,0) closed=yes simple=yes bbox=225x9", "filler: closure=(0,0)",
                        "filler-printed: closure=(18,18) closed=no"}) {
    EXPECT_NE(r.out.find(s), std::string::npos) << s;
  }
  auto p = run("check-words --t 2 --printed-filler");
  EXPECT_EQ(p.out, "filler-printed: closure=(18,18) closed=no\n");
}

TEST_F(Cli, ReduceWritesEightTilesAndManifest) {
  auto r = run("reduce --input " + data("three.wang") + " --out " + at("tiles"));
  ASSERT_EQ(r.code, 0);
  int polys = 0;
  for (const auto& e : fs::directory_iterator(at("tiles"))) polys += e.path().extension() == ".poly";
  EXPECT_EQ(polys, 8);
  EXPECT_EQ(slurp(at("tiles") + "/manifest"), r.out);
  EXPECT_NE(r.out.find("period_blocks: 31"), std::string::npos);
}

TEST_F(Cli, ReduceSingleTileGoesToSolver) {
  spit(at("one.wang"), "colors: a b\ntile x N=a E=b S=a W=b\n");
  auto r = run("reduce --input " + at("one.wang"));
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("period: 1 1"), std::string::npos);
}

TEST_F(Cli, AssembleVerifyExtractRender) {
  ASSERT_EQ(run("reduce --input " + data("three.wang") + " --out " + at("tiles")).code, 0);
  auto a = run("assemble --input " + data("three.wang") + " --tiling " + data("three.wtil") + " --output " +
               at("p.plc") + " --emit-svg " + at("p.svg"));
  ASSERT_EQ(a.code, 0);
  EXPECT_NE(a.out.find("verified: yes"), std::string::npos);
  EXPECT_EQ(slurp(at("p.plc")).rfind("region: torus 837 279\n", 0), 0u);
  EXPECT_NE(slurp(at("p.svg")).find("<svg"), std::string::npos);

  auto v = run("verify --tiles " + at("tiles") + " --placements " + at("p.plc"));
  EXPECT_EQ(v.code, 0);
  EXPECT_EQ(v.out, "ok\n");

  auto e = run("extract --input " + data("three.wang") + " --placements " + at("p.plc"));
  EXPECT_EQ(e.code, 0);
  EXPECT_EQ(e.out, slurp(data("three.wtil")));

  // drop the last placement: the first violation is reported, exit 1
  std::string plc = slurp(at("p.plc"));
  plc.erase(plc.rfind("place"));
  spit(at("bad.plc"), plc);
  auto bad = run("verify --tiles " + at("tiles") + " --placements " + at("bad.plc"));
  EXPECT_EQ(bad.code, 1);
  EXPECT_EQ(bad.out.rfind("violation cell ", 0), 0u);
  EXPECT_NE(bad.out.find("coverage 0"), std::string::npos);

  auto r = run("render --tiles " + at("tiles") + " --placements " + at("p.plc") + " --output " + at("r.svg"));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(slurp(at("r.svg")), slurp(at("p.svg")));
}

TEST_F(Cli, TileSquares) {
  fs::create_directories(at("sq"));
  spit(at("sq/square.poly"), "role: tooth1\nword: r2 u2 l2 d2\n");
  auto ok = run("tile --tiles " + at("sq") + " --region torus --width 4 --height 4");
  EXPECT_EQ(ok.code, 0);
  EXPECT_EQ(ok.out.rfind("region: torus 4 4\n", 0), 0u);
  int places = 0;
  for (std::size_t i = 0; (i = ok.out.find("place ", i)) != std::string::npos; ++i) ++places;
  EXPECT_EQ(places, 4);
  auto no = run("tile --tiles " + at("sq") + " --region torus --width 3 --height 3");
  EXPECT_EQ(no.code, 1);
}

TEST_F(Cli, FeaturesAndDeadEnd) {
  auto f = run("features --out " + at("feat"));
  EXPECT_EQ(f.code, 0);
  int n = 0;
  for (const auto& e : fs::directory_iterator(at("feat"))) n += e.path().extension() == ".poly";
  EXPECT_EQ(n, 24);
  auto d = run("deadend --input " + data("three.wang") + " --radius 30");
  EXPECT_EQ(d.code, 0);
  EXPECT_EQ(d.out.rfind("dead_end: true\n", 0), 0u);
  auto i = run("deadend --input " + data("three.wang") + " --radius 5");
  EXPECT_EQ(i.code, 1);
  EXPECT_EQ(i.out.rfind("dead_end: inconclusive\n", 0), 0u);
}

TEST_F(Cli, RerunsAreByteIdentical) {
  const std::string w = data("three.wang"), t = data("three.wtil");
  for (int k = 0; k < 2; ++k) {
    std::string o = at("o" + std::to_string(k));
    fs::create_directories(o);
    run("reduce --input " + w + " --out " + o + "/tiles");
    run("assemble --input " + w + " --tiling " + t + " --output " + o + "/p.plc --emit-svg " + o + "/p.svg");
    run("render --input " + w + " --output " + o + "/pieces.svg");
    run("features --out " + o + "/feat");
  }
  for (const auto& e : fs::recursive_directory_iterator(at("o0"))) {
    if (!e.is_regular_file()) continue;
    auto rel = fs::relative(e.path(), at("o0"));
    EXPECT_EQ(slurp(e.path()), slurp(fs::path(at("o1")) / rel)) << rel;
  }
  for (const char* args : {"check-words --n 3 --t 2", "deadend --radius 30 --input "}) {
    std::string a = args;
    if (a.back() == ' ') a += w;
    EXPECT_EQ(run(a).out, run(a).out) << a;
  }
}
