// Drives the built semicat binary; checks exit codes and output shape.

#include <gtest/gtest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <string>

#include <json.hpp>

namespace {

struct Result {
  int code = -1;
  std::string out;
};

Result semicat(const std::string& args) {
  const std::string cmd = "cd '" SEMICAT_SOURCE_DIR "' && '" SEMICAT_CLI "' " + args + " 2>/dev/null";
  Result r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf{};
  while (auto n = fread(buf.data(), 1, buf.size(), p)) r.out.append(buf.data(), n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string tmp(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("semicat_cli_" + name)).string();
}

}  // namespace

TEST(Cli, ConfigFilesExitCodes) {
  EXPECT_EQ(semicat("report data/configs/out_group_gf4.json").code, 0);
  EXPECT_EQ(semicat("report data/configs/ibn_boolean.json").code, 0);
  EXPECT_EQ(semicat("report data/configs/ibn_trivial.json").code, 0);
  EXPECT_EQ(semicat("report data/configs/aut_groups_gf8.json").code, 0);
  EXPECT_EQ(semicat("report data/configs/functor_frobenius_gf4.json").code, 0);
  EXPECT_EQ(semicat("report data/configs/lie_sl2_f5.json").code, 0);
  EXPECT_EQ(semicat("report data/configs/functor_broken_zmod3.json").code, 1);
  EXPECT_EQ(semicat("report data/configs/validate_malformed.json").code, 2);
  EXPECT_EQ(semicat("report data/configs/missing.json").code, 2);
}

TEST(Cli, SubcommandsAndGlobalFlags) {
  auto out = semicat("autmorph outgroup gf:4 --cap 2");
  ASSERT_EQ(out.code, 0);
  auto j = nlohmann::json::parse(out.out);
  EXPECT_EQ(j.at("results").at("classes"), 2);
  EXPECT_EQ(j.at("verdict"), "pass");
  EXPECT_EQ(j.at("experiment").at("cap"), 2);

  auto text = semicat("--format text ibn classify boolean --cap 3");
  EXPECT_EQ(text.code, 0);
  EXPECT_NE(text.out.find("IBNUpTo(3)"), std::string::npos);

  EXPECT_EQ(semicat("semiring validate zmod:4").code, 0);
  EXPECT_EQ(semicat("semiring validate nosuch").code, 2);
  EXPECT_EQ(semicat("semiring autos gf:4").code, 0);
  EXPECT_EQ(semicat("autmorph verify gf:4 --sigma power:2").code, 0);
  EXPECT_EQ(semicat("autmorph verify gf:4 --sigma nope").code, 2);
  EXPECT_EQ(semicat("autmorph extract gf:4 --sigma power:2").code, 0);
  EXPECT_EQ(semicat("autmorph normalize zmod:3").code, 0);
  EXPECT_EQ(semicat("--format xml semiring validate boolean").code, 2);
  EXPECT_EQ(semicat("--cap 0 semiring validate boolean").code, 2);
  EXPECT_EQ(semicat("").code, 2);

  auto timed = nlohmann::json::parse(semicat("--timing semiring validate boolean").out);
  EXPECT_TRUE(timed.at("checks")[0].contains("timing_ms"));
  auto untimed = nlohmann::json::parse(semicat("semiring validate boolean").out);
  EXPECT_FALSE(untimed.at("checks")[0].contains("timing_ms"));
}

TEST(Cli, Lie) {
  auto mul = semicat("lie mul --file sl2:Q --expr 'e*f'");
  ASSERT_EQ(mul.code, 0);
  EXPECT_EQ(nlohmann::json::parse(mul.out).at("normal_form"), "h + f*e");
  auto basis = nlohmann::json::parse(semicat("lie basis --file data/sl2_q.json --degree-cap 2 --generators 2").out);
  EXPECT_EQ(basis.at("count"), 20);  // 2 * (1 + 3 + 6)
  EXPECT_EQ(semicat("lie validate --file data/sl2_f5_restricted.json").code, 0);
  EXPECT_EQ(semicat("lie validate --file data/sl2_bad_jacobi.json").code, 1);
  EXPECT_EQ(semicat("lie lift --file sl2:Q --images 'e,-h,f' --degree-cap 3").code, 0);
  EXPECT_EQ(semicat("lie lift --file sl2:Q --images 'e,h,f'").code, 1);
  EXPECT_EQ(semicat("lie lift --file sl2:Q --images 'e,h'").code, 2);
  EXPECT_EQ(semicat("lie units --file sl2:zmod:5 --degree-cap 2").code, 0);
  EXPECT_EQ(semicat("lie mul --file sl2:Q --expr 'e*'").code, 2);
  EXPECT_EQ(semicat("lie mul --file sl2:Q").code, 2);
}

TEST(Cli, OutFileAndReplay) {
  const auto saved = tmp("broken.json");
  std::filesystem::remove(saved);
  EXPECT_EQ(semicat("--out " + saved + " report data/configs/functor_broken_zmod3.json").code, 1);
  ASSERT_TRUE(std::filesystem::exists(saved));
  auto replay = semicat("report --replay " + saved);
  EXPECT_EQ(replay.code, 1);
  auto j = nlohmann::json::parse(replay.out);
  ASSERT_EQ(j.at("checks").size(), 1u);
  EXPECT_EQ(j.at("checks")[0].at("name"), "replay:additivity");
  EXPECT_EQ(j.at("checks")[0].at("status"), "fail");
  EXPECT_EQ(semicat("report --replay " + saved + " --check composition").code, 0);
  EXPECT_EQ(semicat("--format text report --show " + saved).code, 1);
  EXPECT_EQ(semicat("--out /nonexistent-dir/r.json semiring validate boolean").code, 2);
  std::filesystem::remove(saved);
}

TEST(Cli, Determinism) {
  for (const char* args : {"report data/configs/lie_sl2_f5.json", "autmorph verify gf:4 --sigma power:2 --budget 50 --seed 3",
                           "report data/configs/functor_broken_zmod3.json"}) {
    auto a = semicat(args), b = semicat(args);
    EXPECT_EQ(a.out, b.out) << args;
    EXPECT_FALSE(a.out.empty());
  }
}
