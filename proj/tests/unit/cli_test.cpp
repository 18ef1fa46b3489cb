#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = colorsampler::cli::dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(COLORSAMPLER_TEST_DATA) + "/" + name; }

}  // namespace

TEST(Cli, SampleEmitsProperColoring) {
  const Outcome r = run({"sample", "--graph", data("p3.txt"), "--colors", "4", "--delta", "0.1", "--steps", "500",
                     "--seed", "7"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["schema"], "colorsampler/1");
  const auto c = doc["coloring"].get<std::vector<int>>();
  ASSERT_EQ(c.size(), 3u);
  EXPECT_NE(c[0], c[1]);
  EXPECT_NE(c[1], c[2]);
  EXPECT_TRUE(doc["is_proper"].get<bool>());
}

TEST(Cli, SampleIsByteIdentical) {
  const std::vector<std::string> args{"sample", "--graph", data("k3.txt"), "--colors", "4", "--steps", "200",
                                      "--seed", "11"};
  EXPECT_EQ(run(args).out, run(args).out);
}

TEST(Cli, SampleExactTau) {
  const Outcome r = run({"sample", "--graph", data("k3.txt"), "--colors", "4", "--exact-tau"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_GT(nlohmann::json::parse(r.out)["steps"].get<int>(), 0);
}

TEST(Cli, SampleWithoutRunLengthIsUsageError) {
  const Outcome r = run({"sample", "--graph", data("p3.txt"), "--colors", "4"});
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(r.out.empty());
  EXPECT_NE(r.err.find("theoretical"), std::string::npos);
}

TEST(Cli, FlowAuditTriangle) {
  const Outcome r = run({"flow-audit", "--graph", data("k3.txt"), "--colors", "4"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_TRUE(doc["quantum_flow_pass"].get<bool>());
  EXPECT_TRUE(doc["pass"].get<bool>());
  EXPECT_EQ(r.out, run({"flow-audit", "--graph", data("k3.txt"), "--colors", "4"}).out);
}

TEST(Cli, VsnCycle) {
  const Outcome r = run({"vsn", "--graph", data("c4.txt")});
  ASSERT_EQ(r.code, 0);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["vsn"], 2);
  EXPECT_EQ(doc["order"].size(), 4u);
}

TEST(Cli, VsnWithExplicitOrder) {
  const Outcome r = run({"vsn", "--graph", data("p3.txt"), "--order", data("p3_bad_order.txt")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["vsn"], 2);
}

TEST(Cli, EnumerateAndMixTime) {
  const auto e = nlohmann::json::parse(run({"enumerate", "--graph", data("c4.txt"), "--colors", "4"}).out);
  EXPECT_EQ(e["num_proper"], 84);
  const Outcome m = run({"mix-time", "--graph", data("p3.txt"), "--colors", "4", "--delta", "0.25"});
  ASSERT_EQ(m.code, 0) << m.err;
  const auto doc = nlohmann::json::parse(m.out);
  EXPECT_LT(doc["exact_t"].get<double>(), doc["theoretical_bound"].get<double>());
  const Outcome g = run({"mix-time", "--graph", data("p3.txt"), "--colors", "4", "--chain", "glauber"});
  ASSERT_EQ(g.code, 0) << g.err;
  EXPECT_TRUE(nlohmann::json::parse(g.out)["theoretical_bound"].is_null());
}

TEST(Cli, Uniformity) {
  const Outcome r = run({"uniformity", "--graph", data("k3.txt"), "--colors", "4", "--exact-tau", "--trials", "50000"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(nlohmann::json::parse(r.out)["pass"].get<bool>());
  const Outcome bad = run({"uniformity", "--graph", data("k3.txt"), "--colors", "4", "--steps", "1", "--trials", "500"});
  EXPECT_EQ(bad.code, 1);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"vsn", "--graph", data("c4.txt"), "--bogus"}).code, 2);
  EXPECT_EQ(run({"enumerate", "--graph", data("c4.txt")}).code, 2);
  EXPECT_EQ(run({"enumerate", "--graph", data("missing.txt"), "--colors", "4"}).code, 2);
  EXPECT_EQ(run({"flow-audit", "--graph", data("k3.txt"), "--colors", "3"}).code, 2);
  EXPECT_EQ(run({"sample", "--graph", data("p3.txt"), "--colors", "4", "--steps", "5", "--exact-tau"}).code, 2);
  EXPECT_EQ(run({"vsn", "--graph", data("malformed.txt")}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}
