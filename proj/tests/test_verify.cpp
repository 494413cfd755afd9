#include <doctest.h>

#include "whittaker/verify.hpp"

using namespace whit;

TEST_CASE("sweep instances are ordered and bounded") {
  auto inst = sweep_instances(3, 2);
  REQUIRE(inst.size() == 9);
  CHECK(inst.front().n == 2);
  CHECK(inst.front().lambda.empty());
  for (const auto& i : inst) {
    CHECK(static_cast<int>(i.lambda.size()) <= i.n - 1);
    for (int v : i.lambda) CHECK(v <= 2);
  }
}

TEST_CASE("convention is detected once at n = 2") { CHECK(detect_convention() == "identity"); }

TEST_CASE("small sweep passes") {
  VerifyOptions o;
  o.max_n = 3;
  o.max_lambda1 = 2;
  o.length_samples = 500;
  VerifyReport r = run_verify(o);
  CHECK(r.ok());
  CHECK(r.first_counterexample().is_null());
  CHECK(r.summary().find("all checks passed") != std::string::npos);
}

TEST_CASE("a corrupted statistic is caught with a counterexample") {
  VerifyOptions o;
  o.max_n = 3;
  o.max_lambda1 = 1;
  o.length_samples = 10;
  o.inject_fault = true;
  VerifyReport r = run_verify(o);
  CHECK_FALSE(r.ok());
  auto ce = r.first_counterexample();
  CHECK(ce.contains("check"));
  CHECK(ce["detail"].get<std::string>().find("n=2") != std::string::npos);
  CHECK(r.audit.entries().at("weak compression").failed > 0);
}

TEST_CASE("results do not depend on the thread count") {
  VerifyOptions o;
  o.max_n = 3;
  o.max_lambda1 = 2;
  o.length_samples = 200;
  o.threads = 1;
  std::string one = run_verify(o).summary();
  o.threads = 4;
  CHECK(run_verify(o).summary() == one);
}
