#include <gtest/gtest.h>

#include <chrono>

#include <json.hpp>

#include "ternalg/suite.hpp"

using namespace ternalg;

namespace {

SuiteSpec spec_for(const std::string& suite, int d = 2) {
  SuiteSpec s;
  s.suite = suite;
  s.dimension = d;
  return s;
}

std::string strip_elapsed(const std::string& json) {
  auto doc = nlohmann::ordered_json::parse(json);
  for (auto& c : doc["checks"]) c.erase("elapsed_ms");
  return doc.dump();
}

}  // namespace

TEST(SuiteSpec, Validation) {
  EXPECT_NO_THROW(spec_for("all").validate());
  EXPECT_THROW(spec_for("nope").validate(), std::invalid_argument);
  EXPECT_THROW(run_suite(spec_for("nope")), std::invalid_argument);
  SuiteSpec s = spec_for("para");
  s.dimension = 0;
  EXPECT_THROW(s.validate(), std::invalid_argument);
  s = spec_for("para");
  s.cross_sign = 2;
  EXPECT_THROW(s.validate(), std::invalid_argument);
  const auto& ids = SuiteSpec::suite_ids();
  for (const char* id : {"arith", "engine", "para", "roby", "poincare", "order3", "colour", "superspace", "closure",
                         "oracle", "all"})
    EXPECT_NE(std::find(ids.begin(), ids.end(), id), ids.end()) << id;
}

TEST(RunSuite, ParaSmokeIsFastAndSorted) {
  auto t0 = std::chrono::steady_clock::now();
  auto reports = run_suite(spec_for("para"));
  double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  EXPECT_LT(seconds, 1.0);
  ASSERT_EQ(reports.size(), 10u);
  EXPECT_TRUE(all_passed(reports));
  EXPECT_TRUE(std::is_sorted(reports.begin(), reports.end(),
                             [](const auto& a, const auto& b) { return a.check_id < b.check_id; }));
  for (const auto& r : reports) EXPECT_FALSE(r.paper_ref.empty()) << r.check_id;
}

TEST(RunSuite, EachSmallSuitePasses) {
  for (const char* id : {"arith", "engine", "roby", "poincare", "colour", "superspace", "closure"}) {
    auto reports = run_suite(spec_for(id));
    EXPECT_FALSE(reports.empty()) << id;
    for (const auto& r : reports) EXPECT_TRUE(r.passed()) << id << " " << r.check_id;
  }
}

TEST(RunSuite, KappaOneLeavesThetaResidual) {
  SuiteSpec s = spec_for("para");
  s.kappa = Rational(1);
  auto reports = run_suite(s);
  EXPECT_FALSE(all_passed(reports));
  bool found = false;
  for (const auto& r : reports)
    if (r.check_id == "para.dcomm.tdt")
      for (const auto& res : r.residuals) found |= res.element == "theta^0" || res.element == "theta^1";
  EXPECT_TRUE(found);
}

TEST(Report, JsonSchemaAndRoundTrip) {
  SuiteSpec s = spec_for("colour");
  auto reports = run_suite(s);
  std::string json = emit_report(reports, s, ReportFormat::kJson);
  auto doc = nlohmann::ordered_json::parse(json);
  EXPECT_EQ(doc["version"], "1.0");
  EXPECT_EQ(doc["config"]["dimension"], 2);
  EXPECT_EQ(doc["config"]["metric"], nlohmann::json::array({1, -1}));
  EXPECT_EQ(doc["config"]["kappa"], "1/2");
  for (const auto& c : doc["checks"]) {
    EXPECT_EQ(c["status"], "pass");
    for (const char* key : {"check_id", "paper_ref", "residuals", "elapsed_ms"}) EXPECT_TRUE(c.contains(key)) << key;
  }
  ReportDocument back = parse_report(json);
  EXPECT_EQ(back.version, "1.0");
  EXPECT_EQ(back.dimension, 2);
  EXPECT_EQ(back.kappa, "1/2");
  EXPECT_EQ(back.seed, s.seed);
  EXPECT_EQ(back.checks, reports);
}

TEST(Report, FailingRunRoundTripsResiduals) {
  SuiteSpec s = spec_for("para");
  s.kappa = Rational(1);
  auto reports = run_suite(s);
  std::string json = emit_report(reports, s, ReportFormat::kJson);
  EXPECT_NE(json.find("\"fail\""), std::string::npos);
  EXPECT_EQ(parse_report(json).checks, reports);
  std::string text = emit_report(reports, s, ReportFormat::kText);
  EXPECT_NE(text.find("para.dcomm.tdt"), std::string::npos);
  EXPECT_NE(text.find("theta^0"), std::string::npos);
}

TEST(Report, RejectsInconsistentStatus) {
  std::string bad = R"({"version":"1.0","config":{"dimension":2,"metric":[1,-1],"kappa":"1/2","cross_sign":1,"seed":1},
    "checks":[{"check_id":"x","paper_ref":"","status":"pass","residuals":[{"indices":"i","element":"1"}],
    "residual_total":1,"instances":1,"notes":[],"elapsed_ms":0}]})";
  EXPECT_THROW(parse_report(bad), std::invalid_argument);
  EXPECT_THROW(parse_report("{"), std::invalid_argument);
}

TEST(Report, DeterministicApartFromTiming) {
  SuiteSpec s = spec_for("engine");
  s.seed = 5;
  std::string a = emit_report(run_suite(s), s, ReportFormat::kJson);
  std::string b = emit_report(run_suite(s), s, ReportFormat::kJson);
  EXPECT_EQ(strip_elapsed(a), strip_elapsed(b));
}
