#include <gtest/gtest.h>

#include <sstream>

#include "cli.hpp"

using lcak::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(LCAK_TEST_DATA_DIR) + "/" + name; }

}  // namespace

TEST(Cli, VersionPrintsConventions) {
  const auto r = call({"--version"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("lee_normalization"), std::string::npos);
  EXPECT_NE(r.out.find("curvature"), std::string::npos);
}

TEST(Cli, NoCommandIsAnInputError) { EXPECT_EQ(call({}).code, 2); }

TEST(Cli, CheckPassesOnA41) {
  const auto r = call({"check", data("a4_1.json"), "--require", "pluricanonical"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("pluricanonical"), std::string::npos);
}

TEST(Cli, RequiredFlagThatIsFalseFails) {
  EXPECT_EQ(call({"check", data("a4_1.json"), "--require", "vaisman"}).code, 1);
  EXPECT_EQ(call({"check", data("a4_1.json"), "--require", "no_such_flag"}).code, 2);
}

TEST(Cli, CheckJsonInBothModes) {
  const auto exact = call({"check", data("a4_8.json"), "--json", "--exact"});
  EXPECT_EQ(exact.code, 0);
  EXPECT_NE(exact.out.find("\"mode\": \"exact\""), std::string::npos);
  const auto fl = call({"check", data("a4_8.json"), "--json", "--float", "--tol", "1e-10"});
  EXPECT_EQ(fl.code, 0);
  EXPECT_NE(fl.out.find("\"mode\": \"float\""), std::string::npos);
  EXPECT_EQ(call({"check", data("a4_8.json"), "--exact", "--float"}).code, 2);
}

TEST(Cli, InputErrorsExitWithTwo) {
  auto r = call({"check", data("bad_j.json")});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("J_NOT_ACS"), std::string::npos);
  EXPECT_EQ(call({"check", data("bad_jacobi.json")}).code, 2);
  EXPECT_EQ(call({"check", data("bad_syntax.json")}).code, 2);
  EXPECT_EQ(call({"check", data("nope.json")}).code, 2);
  EXPECT_EQ(call({"check"}).code, 2);
  EXPECT_EQ(call({"frobnicate"}).code, 2);
}

TEST(Cli, BatchReportsEveryFile) {
  const auto r = call({"check", data("a4_1.json"), data("a4_8.json"), "--json"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("A4_1"), std::string::npos);
  EXPECT_NE(r.out.find("A4_8"), std::string::npos);
  EXPECT_EQ(call({"check", data("a4_1.json"), data("bad_j.json")}).code, 2);
}

TEST(Cli, Catalog) {
  const auto list = call({"catalog"});
  EXPECT_EQ(list.code, 0);
  for (const char* name : {"A4_1", "A4_8", "abelian_kahler", "A3_4_plus_A1", "A3_6_plus_A1"})
    EXPECT_NE(list.out.find(name), std::string::npos) << name;
  EXPECT_EQ(call({"catalog", "A4_8", "--json"}).code, 0);
  EXPECT_EQ(call({"catalog", "abelian_kahler", "--float"}).code, 0);
  EXPECT_EQ(call({"catalog", "A4_9"}).code, 2);
}

TEST(Cli, ClassifyAlmostAbelian) {
  auto r = call({"classify-aa", "--a", "0", "--b", "1,0", "--v", "1,0", "--A", "0,0;0,0"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("A_3_4_plus_A1"), std::string::npos);
  r = call({"classify-aa", "--a", "0", "--b", "1,0", "--v", "-1,0", "--A", "0,0;0,0", "--json"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("A_3_6_plus_A1"), std::string::npos);
  EXPECT_EQ(call({"classify-aa", "--a", "1", "--b", "1,0", "--v", "1,0", "--A", "0,0;0,0"}).code, 2);
  EXPECT_EQ(call({"classify-aa", "--a", "0", "--b", "1", "--v", "1,0", "--A", "0,0;0,0"}).code, 2);
  EXPECT_EQ(call({"classify-aa", "--a", "0", "--b", "x,0", "--v", "1,0", "--A", "0,0;0,0"}).code, 2);
}

TEST(Cli, Fuzz) {
  const auto r = call({"fuzz", "--seed", "4", "--count", "6", "--family", "almost_abelian_4d", "--threads", "1"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("\"identity_failures\": []"), std::string::npos) << r.out;
  EXPECT_EQ(call({"fuzz", "--seed", "4", "--count", "6", "--family", "almost_abelian_4d", "--threads", "1"}).out,
            r.out);
  EXPECT_EQ(call({"fuzz", "--family", "bogus"}).code, 2);
}
