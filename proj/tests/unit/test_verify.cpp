#include <gtest/gtest.h>

#include <cstdlib>

#include "brieskorn/verify.hpp"

using namespace brieskorn;
using namespace brieskorn::verify;

namespace {

Json base_doc() {
  return Json::parse(R"({"r": 4, "N": 8, "K": 8, "family": "special", "h": [0, 0, 1, 1],
                         "frame": {"alpha": "1", "beta": "-1/2", "gamma": "2"}, "seed": 42, "samples": 3})");
}

std::string error_path(const Json& doc) {
  try {
    parse_config(doc);
  } catch (const ConfigError& e) {
    return e.path();
  }
  return "<accepted>";
}

}  // namespace

TEST(Config, ParsesTheExampleDocument) {
  RunConfig c = parse_config(base_doc());
  EXPECT_EQ(c.r, 4);
  EXPECT_EQ(c.h, parse_series("s^2 + s^3", 1, 8));
  EXPECT_EQ(c.frame(2, 0), make_rational(-1, 2));
  EXPECT_EQ(c.frame(2, 1), 2);
  EXPECT_TRUE(c.suites.empty());
}

TEST(Config, ErrorsCarryTheirLocation) {
  Json d = base_doc();
  d["h"] = Json::array({0, 1, 1});
  EXPECT_EQ(error_path(d), "h");
  d = base_doc();
  d["frame"] = {{"matrix", Json::array({Json::array({1, 0, 0, 0, 0}), Json::array({1, 1, 0, 0, 0}),
                                        Json::array({0, 0, 1, 7, 0}), Json::array({0, 0, 0, 1, 0}),
                                        Json::array({0, 0, 0, 0, 1})})}};
  EXPECT_EQ(error_path(d), "frame");
  d = base_doc();
  d["frame"] = {{"matrix", Json::array({Json::array({1, 0}), Json::array({1, 1})})}};
  EXPECT_EQ(error_path(d), "frame.matrix");
  d = base_doc();
  d["suites"] = Json::array({"gamma", "bogus"});
  EXPECT_EQ(error_path(d), "suites[1]");
  d = base_doc();
  d["h"] = Json::array({0, 0, 0.5});
  EXPECT_EQ(error_path(d), "h[2]");
  d = base_doc();
  d["colour"] = "red";
  EXPECT_EQ(error_path(d), "colour");
  d = base_doc();
  d["K"] = 5;
  EXPECT_EQ(error_path(d), "K");
  d = base_doc();
  d["family"] = "relative";
  d["h_i"] = Json::array({"s^2", "s^4", "s^4"});
  EXPECT_EQ(error_path(d), "h_i");
}

TEST(Config, EnvironmentOverridesBounds) {
  Json d = base_doc();
  ::setenv("BRIESKORN_N", "10", 1);
  ::setenv("BRIESKORN_K", "9", 1);
  apply_environment(d);
  RunConfig c = parse_config(d);
  EXPECT_EQ(c.N, 10);
  EXPECT_EQ(c.K, 9);
  EXPECT_EQ(c.h.degree_bound(), 10);
  ::setenv("BRIESKORN_K", "nine", 1);
  Json e = base_doc();
  EXPECT_THROW(apply_environment(e), ConfigError);
  ::unsetenv("BRIESKORN_N");
  ::unsetenv("BRIESKORN_K");
}

TEST(Config, RoundTripsThroughCanonicalForm) {
  Json d = base_doc();
  d.erase("h");
  d.erase("frame");
  RunConfig c = parse_config(d);
  RunConfig again = parse_config(config_to_json(c));
  EXPECT_EQ(again.h, c.h);
  EXPECT_EQ(again.frame, c.frame);
  EXPECT_EQ(config_to_json(again), config_to_json(c));
}

TEST(Report, EmptySuiteListGivesAnEmptyValidReport) {
  Report r = run(parse_config(base_doc()));
  EXPECT_TRUE(r.passed());
  Json doc = Json::parse(emit_json(r));
  EXPECT_TRUE(doc["suites"].empty());
  EXPECT_EQ(doc["summary"]["suites"], 0);
  EXPECT_NE(emit_markdown(r).find("# Verification report"), std::string::npos);
}

TEST(Report, ExamplePipelinePasses) {
  Json d = base_doc();
  d["suites"] = Json::array({"theorem2"});
  Report r = run(parse_config(d));
  ASSERT_EQ(r.suites.size(), 1u);
  EXPECT_TRUE(r.suites[0].passed);
  EXPECT_EQ(r.suites[0].cases.size(), 3u * 4u);
}

TEST(Report, GammaSuiteWithSeed42Passes) {
  Json d = base_doc();
  d["suites"] = Json::array({"gamma"});
  Report r = run(parse_config(d));
  ASSERT_EQ(r.suites.size(), 1u);
  EXPECT_TRUE(r.suites[0].passed);
  bool found = false;
  for (const auto& c : r.suites[0].cases)
    if (c.name.find("100") != std::string::npos) found = c.passed;
  EXPECT_TRUE(found);
}

TEST(Report, OutputIsDeterministic) {
  Json d = base_doc();
  d["suites"] = Json::array({"stability", "theorem2", "period"});
  RunConfig c = parse_config(d);
  EXPECT_EQ(emit_json(run(c)), emit_json(run(c)));
  EXPECT_EQ(emit_markdown(run(c)), emit_markdown(run(c)));
}

TEST(Report, PerturbedGeneratorFailsWithResidualAndReproducer) {
  Json d = base_doc();
  d["suites"] = Json::array({"stability"});
  d["debug"] = {{"perturb_generator", 1}};
  Report r = run(parse_config(d));
  ASSERT_FALSE(r.passed());
  const CaseResult* failing = nullptr;
  for (const auto& c : r.suites[0].cases)
    if (!c.passed) {
      failing = &c;
      break;
    }
  ASSERT_NE(failing, nullptr);
  ASSERT_TRUE(failing->residual.has_value());
  EXPECT_NE(failing->residual->find("dt^-"), std::string::npos);
  ASSERT_TRUE(failing->reproducer.has_value());
  EXPECT_FALSE(run(parse_config(*failing->reproducer)).passed());
  std::string json = emit_json(r);
  EXPECT_NE(json.find("\"residual\""), std::string::npos);
}

TEST(Report, EveryFamilyPassesEverySuite) {
  for (const char* family : {"special", "nilpotent", "relative"}) {
    Json d = base_doc();
    d["family"] = family;
    d["samples"] = 2;
    if (std::string(family) != "special") d.erase("h");
    d["suites"] = known_suites();
    Report r = run(parse_config(d));
    for (const auto& s : r.suites) {
      EXPECT_TRUE(s.passed) << family << " / " << s.name << (s.error ? ": " + *s.error : "");
      for (const auto& c : s.cases)
        if (!c.passed) ADD_FAILURE() << family << " / " << s.name << " / " << c.name << ": " << c.detail;
    }
  }
}
