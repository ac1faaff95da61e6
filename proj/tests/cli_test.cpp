#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli/cli.hpp"

namespace fs = std::filesystem;
using lucastk::cli::dispatch;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

// A scratch golden directory holding the cheap entries of the shipped manifest.
fs::path small_golden() {
  fs::path dir = fs::temp_directory_path() / ("lucastk_golden_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                              "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
  fs::remove_all(dir);
  fs::create_directories(dir);
  std::ifstream in(fs::path(LUCASTK_GOLDEN_DIR) / "manifest.json");
  auto manifest = nlohmann::json::parse(in);
  nlohmann::json keep = {{"entries", nlohmann::json::array()}};
  for (const auto& e : manifest["entries"]) {
    std::string file = e["file"];
    if (file.rfind("c01", 0) == 0 || file.rfind("c03", 0) == 0 || file.rfind("c07", 0) == 0) {
      keep["entries"].push_back(e);
      fs::copy_file(fs::path(LUCASTK_GOLDEN_DIR) / file, dir / file);
    }
  }
  std::ofstream(dir / "manifest.json") << keep.dump(2) << "\n";
  return dir;
}

}  // namespace

TEST(Cli, NoArgumentsIsUsage) {
  auto r = run({});
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(r.out.empty());
  EXPECT_NE(r.err.find("Usage"), std::string::npos);
}

TEST(Cli, Term) {
  auto r = run({"term", "--pair", "pell", "--n", "21"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["value"], "38613965");
  EXPECT_EQ(run({"term", "--pair", "lucas", "--n", "487"}).out.find("\"probable_prime\": false") != std::string::npos, true);
}

TEST(Cli, BadInputIsUsage) {
  EXPECT_EQ(run({"term", "--pair", "tribonacci", "--n", "3"}).code, 2);
  EXPECT_EQ(run({"term", "--pair", "custom:2,2", "--n", "3"}).code, 2);
  EXPECT_EQ(run({"period", "--pair", "pell", "-m", "0"}).code, 2);
  EXPECT_EQ(run({"scan", "repdigit", "--pair", "pell", "--limit", "ten"}).code, 2);
  EXPECT_EQ(run({"scan", "wieferich", "--precision", "32"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
}

TEST(Cli, NumbersAreStrings) {
  auto r = run({"scan", "phi-fixed-point", "--pair", "pell", "--limit", "30"});
  ASSERT_EQ(r.code, 0);
  std::function<void(const nlohmann::json&)> walk = [&](const nlohmann::json& j) {
    EXPECT_FALSE(j.is_number()) << j.dump();
    if (j.is_structured())
      for (const auto& x : j) walk(x);
  };
  walk(nlohmann::json::parse(r.out));
  EXPECT_EQ(r.out.back(), '\n');
}

TEST(Cli, JobsDoNotChangeBytes) {
  auto a = run({"scan", "lehmer", "--pair", "lucas", "--limit", "80", "--jobs", "1"});
  auto b = run({"scan", "lehmer", "--pair", "lucas", "--limit", "80", "--jobs", "3"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, CsvSummary) {
  auto r = run({"scan", "wieferich", "--base", "10", "--limit", "1000", "--format", "csv-summary"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("487"), std::string::npos);
}

TEST(Cli, BudgetExhaustedIsThree) {
  auto r = run({"scan", "q-set", "--q-limit", "60", "--effort", "1000"});
  EXPECT_EQ(r.code, 3);
  EXPECT_FALSE(r.err.empty());
}

TEST(Cli, VerifyPristine) {
  auto dir = small_golden();
  auto r = run({"verify", dir.string()});
  EXPECT_EQ(r.code, 0) << r.err;
  fs::remove_all(dir);
}

TEST(Cli, VerifyTampered) {
  auto dir = small_golden();
  auto file = dir / "c01_phi_fixed_point_pell.json";
  std::ifstream in(file);
  auto j = nlohmann::json::parse(in);
  in.close();
  j["solutions"].push_back({{"m", "5"}, {"n", "7"}, {"phi", "29"}});
  std::ofstream(file) << j.dump(2) << "\n";
  auto r = run({"verify", dir.string()});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("c01_phi_fixed_point_pell.json"), std::string::npos);
  EXPECT_NE(r.err.find("remove"), std::string::npos);
  fs::remove_all(dir);
}

TEST(Cli, VerifyMissing) {
  EXPECT_EQ(run({"verify", "/nonexistent/golden"}).code, 2);
  auto dir = fs::temp_directory_path() / "lucastk_golden_empty";
  fs::create_directories(dir);
  EXPECT_EQ(run({"verify", dir.string()}).code, 2);
  fs::remove_all(dir);
}
