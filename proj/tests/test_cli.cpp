#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <sys/wait.h>

#include "cli.hpp"
#include "support/oracles.hpp"

using namespace edgetess;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(EDGETESS_TEST_DATA) + "/" + name; }

class TempDir {
 public:
  TempDir() {
    std::random_device rd;
    path_ = fs::temp_directory_path() / ("edgetess-test-" + std::to_string(rd()));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST(Cli, Solve) {
  auto r = run({"solve", "4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "0 0 0 4\n");
  r = run({"solve", "3"});
  EXPECT_EQ(r.out, "0 0 3 0\n0 2 0 1\n1 0 1 1\n");
  EXPECT_EQ(run({"solve", "5"}).out, "");
  EXPECT_EQ(run({"solve", "9"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"solve", "four"}).code, cli::kExitUsage);
}

TEST(Cli, Enumerate) {
  auto r = run({"enumerate", "6"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "120 120 120 120 120 120\n");
  EXPECT_NE(run({"enumerate", "3"}).out.find("30 30 120\n"), std::string::npos);
}

TEST(Cli, Classify) {
  auto r = run({"classify", data("unit_square.poly")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "Rectangle ratio 1\n");
  EXPECT_EQ(run({"classify", data("square_clockwise.poly")}).out, "Rectangle ratio 1\n");
  EXPECT_EQ(run({"classify", data("rhombus60.poly")}).out, "SixtyRhombus\n");
  r = run({"classify", data("triangle_4_0_1_2.poly")});
  EXPECT_EQ(r.code, cli::kExitRejected);
  EXPECT_EQ(r.out.rfind("rejected angle-set", 0), 0u) << r.out;
  r = run({"classify", data("house_pentagon.poly")});
  EXPECT_EQ(r.code, cli::kExitRejected);
  EXPECT_EQ(r.out.rfind("rejected edge-count", 0), 0u) << r.out;
}

TEST(Cli, InputErrors) {
  auto r = run({"classify", data("does_not_exist.poly")});
  EXPECT_EQ(r.code, cli::kExitNoInput);
  r = run({"classify", data("malformed.poly")});
  EXPECT_EQ(r.code, cli::kExitDataError);
  EXPECT_NE(r.err.find("line 4"), std::string::npos) << r.err;
  EXPECT_EQ(run({"classify", data("collinear.poly")}).code, cli::kExitDataError);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, cli::kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"classify"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"verify", "Equilateral", "--generations", "99"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"verify", "Rectangle", "--ratio", "1 2"}).code, cli::kExitDataError);
  EXPECT_EQ(run({"verify", "Rectangle", "--ratio", "-1"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, Verify) {
  auto r = run({"verify", "Equilateral", "--generations", "4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("verdict: pass"), std::string::npos);
  EXPECT_NE(r.out.find("vertex orders: 6x"), std::string::npos) << r.out;
  r = run({"verify", "rectangle", "--ratio", "0 0 1/3 0", "--generations", "2"});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  r = run({"verify", data("triangle_4_0_1_2.poly"), "--generations", "3", "--defects"});
  EXPECT_EQ(r.code, cli::kExitVerifyFailed);
  EXPECT_NE(r.out.find("verdict: fail"), std::string::npos);
  EXPECT_NE(r.out.find("overlap\t"), std::string::npos);
}

TEST(Cli, TileWritesSvg) {
  TempDir dir;
  const auto out = dir.path() / "kite.svg";
  auto r = run({"tile", "Kite", "--generations", "2", "--out", out.string(), "--labels"});
  ASSERT_EQ(r.code, 0) << r.err;
  const std::string svg = slurp(out);
  EXPECT_TRUE(edgetess::testing::xml_well_formed(svg));
  EXPECT_EQ(edgetess::testing::svg_path_count(svg), expand(canonical_polygon(FamilyTag::Kite609012090), 2).tiles.size());
  EXPECT_EQ(run({"tile", "Kite", "--out", (dir.path() / "no" / "such" / "dir.svg").string()}).code, cli::kExitNoInput);
  EXPECT_EQ(run({"tile", "Kite"}).code, cli::kExitUsage);
}

TEST(Cli, CatalogWritesEightFamilies) {
  TempDir dir;
  auto r = run({"catalog", "--out-dir", dir.path().string(), "--generations", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::size_t count = 0;
  for (const auto& entry : fs::directory_iterator(dir.path())) {
    ++count;
    const std::string svg = slurp(entry.path());
    EXPECT_TRUE(edgetess::testing::xml_well_formed(svg)) << entry.path();
    EXPECT_GT(edgetess::testing::svg_path_count(svg), 1u);
  }
  EXPECT_EQ(count, 8u);
  EXPECT_TRUE(fs::exists(dir.path() / "regularhexagon.svg"));
}

#ifdef EDGETESS_BINARY
TEST(CliBinary, EndToEnd) {
  auto shell = [](const std::string& cmd) {
    std::array<char, 256> buf{};
    std::string out;
    FILE* p = popen(cmd.c_str(), "r");
    while (fgets(buf.data(), buf.size(), p)) out += buf.data();
    const int status = pclose(p);
    return std::pair<int, std::string>{WEXITSTATUS(status), out};
  };
  const std::string bin = EDGETESS_BINARY;
  auto [code, out] = shell(bin + " solve 4");
  EXPECT_EQ(code, 0);
  EXPECT_EQ(out, "0 0 0 4\n");
  std::tie(code, out) = shell(bin + " classify " + data("unit_square.poly"));
  EXPECT_EQ(code, 0);
  EXPECT_EQ(out, "Rectangle ratio 1\n");
  std::tie(code, out) = shell(bin + " verify " + data("triangle_4_0_1_2.poly") + " --generations 3");
  EXPECT_EQ(code, 3);
  std::tie(code, out) = shell(bin + " classify " + data("missing.poly") + " 2>/dev/null");
  EXPECT_EQ(code, 66);
}
#endif
