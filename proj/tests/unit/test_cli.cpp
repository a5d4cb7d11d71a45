#include <gtest/gtest.h>

#include <nlohmann/json.hpp>
#include <sstream>

#include "sgfact/cli.hpp"

using namespace sgfact;

namespace {

struct Run {
  int code = 0;
  std::string out, err;
  nlohmann::ordered_json json() const { return nlohmann::ordered_json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Run r;
  r.code = cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

const std::string kShift = R"({"numerical":[17,29,37,47]})";
const std::string kApery = R"({"rank":2,"generators":[[0,2],[1,2],[1,1],[3,2],[4,2]]})";
const std::string kApery2 = R"({"rank":1,"torsion":[2],"generators":[[2,0],[3,1],[4,1]]})";

}  // namespace

TEST(Cli, NumericalCommands) {
  auto l = run({"lset", "--input", kShift});
  ASSERT_EQ(l.code, cli::kOk) << l.err;
  EXPECT_EQ(l.json()["generators"], nlohmann::ordered_json::parse("[111]"));
  EXPECT_TRUE(l.json()["principal"].get<bool>());
  auto f = run({"f2l", "--input", kShift});
  ASSERT_EQ(f.code, cli::kOk);
  EXPECT_EQ(f.json()["f2l"], 218);
  EXPECT_EQ(run({"ceq", "--input", kShift}).json()["ceq"], 5);
  auto n2 = run({"f2l", "--input", R"({"numerical":[3,5]})"});
  EXPECT_EQ(n2.code, cli::kInvalidInput);
  EXPECT_NE(n2.err.find("UndefinedForN2"), std::string::npos);
}

TEST(Cli, AperyAndExitCodes) {
  auto a = run({"apery", "--input", kApery2, "--b", "[[12,0]]"});
  ASSERT_EQ(a.code, cli::kOk) << a.err;
  EXPECT_EQ(a.json()["count"], 24);
  EXPECT_EQ(run({"apery", "--input", kApery, "--b", "[[3,6]]"}).code, cli::kInfinite);
  auto lim = run({"apery", "--input", kApery, "--b", "[[3,6],[4,4],[9,6]]", "--limit", "4", "--order",
                  "wgrevlex:2,2,1,2,2"});
  ASSERT_EQ(lim.code, cli::kOk) << lim.err;
  EXPECT_FALSE(lim.json()["finite"].get<bool>());
  EXPECT_EQ(run({"validate", "--input", R"({"rank":1,"generators":[[1],[-1]]})"}).code, cli::kNotReduced);
  EXPECT_EQ(run({"lset", "--input", kShift, "--bogus"}).code, cli::kInvalidInput);
  EXPECT_EQ(run({"lset", "--input", "{not json"}).code, cli::kInvalidInput);
  EXPECT_EQ(run({"lset"}).code, cli::kInvalidInput);
}

TEST(Cli, ClosedFormsAndOracle) {
  auto c = run({"closed-form", "--family", "almost-arithmetic", "--what", "ceq", "--params",
                R"({"m1":17,"e":3,"n":5,"b":7})", "--verified"});
  ASSERT_EQ(c.code, cli::kOk) << c.err;
  EXPECT_EQ(c.json()["case"], "I.2");
  auto o = run({"oracle-check", "--input", kShift, "--what", "f", "--cap", "1000"});
  ASSERT_EQ(o.code, cli::kOk) << o.err;
  EXPECT_TRUE(o.json()["pass"].get<bool>());
  auto t = run({"transform", "--input", R"({"numerical":[17,20,23,26,29]})", "--what", "normalized"});
  EXPECT_EQ(t.code, cli::kOk) << t.err;
}

TEST(Cli, DeterministicJson) {
  const std::vector<std::string> args = {"ideal", "--input", kApery};
  auto a = run(args), b = run(args);
  ASSERT_EQ(a.code, cli::kOk);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.json().dump() + "\n", a.out);
  auto text = run({"lset", "--input", kShift, "--format", "text"});
  EXPECT_NE(text.out.find("principal: true"), std::string::npos);
}
