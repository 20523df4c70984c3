#include <gtest/gtest.h>

#include "hn/verify.hpp"

namespace {

TEST(Report, SchemaAndOverall) {
  hn::VerificationReport r;
  r.n = 2;
  r.suite = "core";
  r.checks.push_back({"a", hn::CheckStatus::kPass, 1, 1, 5});
  r.checks.push_back({"b", hn::CheckStatus::kSkip, nullptr, "cap", 7});
  EXPECT_TRUE(r.passed());
  const auto j = r.to_json();
  EXPECT_EQ(j.dump(), R"({"n":2,"suite":"core","checks":[{"name":"a","status":"pass","expected":1,"actual":1,)"
                      R"("runtime_ms":0},{"name":"b","status":"skip","expected":null,"actual":"cap","runtime_ms":0}],)"
                      R"("overall":"pass"})");
  EXPECT_EQ(r.to_json(true)["checks"][1]["runtime_ms"], 7);
  r.checks.push_back({"c", hn::CheckStatus::kFail, 1, 2, 0});
  EXPECT_FALSE(r.passed());
  EXPECT_EQ(r.to_json()["overall"], "fail");
}

TEST(Report, InconclusiveDoesNotFail) {
  hn::VerificationReport r;
  r.checks.push_back({"x", hn::CheckStatus::kInconclusive, nullptr, nullptr, 0});
  EXPECT_TRUE(r.passed());
}

TEST(Runner, ExceptionsBecomeStatuses) {
  hn::VerificationReport r;
  hn::CheckRunner run(r);
  run("cap", []() -> hn::Outcome { throw hn::CapExceeded("too big"); });
  run("boom", []() -> hn::Outcome { throw hn::ConsistencyError("bad"); });
  run("ok", [] { return hn::compare(3, 3); });
  run("mismatch", [] { return hn::compare(3, 4); });
  ASSERT_EQ(r.checks.size(), 4u);
  EXPECT_EQ(r.checks[0].status, hn::CheckStatus::kSkip);
  EXPECT_EQ(r.checks[1].status, hn::CheckStatus::kFail);
  EXPECT_EQ(r.checks[2].status, hn::CheckStatus::kPass);
  EXPECT_EQ(r.checks[3].status, hn::CheckStatus::kFail);
}

TEST(Suites, AllPassAtTwoAndAreDeterministic) {
  hn::VerifyOptions opt;
  opt.samples = 2000;
  opt.seed = 7;
  const auto a = hn::run_verification(2, hn::Suite::kAll, opt);
  for (const auto& c : a.checks)
    EXPECT_NE(c.status, hn::CheckStatus::kFail) << c.name << " " << c.actual.dump();
  const auto b = hn::run_verification(2, hn::Suite::kAll, opt);
  EXPECT_EQ(a.to_json().dump(), b.to_json().dump());
}

TEST(Suites, SkipsInsteadOfFailingOverCap) {
  hn::VerifyOptions opt;
  opt.samples = 100;
  opt.vertex_cap = 100;
  const auto r = hn::run_verification(2, hn::Suite::kGraphs, opt);
  EXPECT_TRUE(r.passed());
  for (const auto& c : r.checks) EXPECT_EQ(c.status, hn::CheckStatus::kSkip) << c.name;
}

TEST(Suites, CoreAtThree) {
  hn::VerifyOptions opt;
  opt.samples = 1000;
  const auto r = hn::run_verification(3, hn::Suite::kCore, opt);
  EXPECT_TRUE(r.passed());
  for (const auto& c : r.checks) EXPECT_NE(c.status, hn::CheckStatus::kFail) << c.name;
}

}  // namespace
