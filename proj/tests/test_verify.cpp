#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rootstrata/verify.hpp"

using namespace rootstrata;

TEST_CASE("systems list") {
  auto s2 = systems_up_to(2);
  REQUIRE(s2.size() == 4);  // A1, A2, B2, G2
  CHECK(s2[0].name() == "A1");
  CHECK(s2[3].name() == "G2");
  // A1..A8, B2..B8, C3..C8, D4..D8, E6..E8, F4, G2
  CHECK(systems_up_to(8).size() == 31);
}

TEST_CASE("serial and parallel runners agree") {
  VerifyOptions opt;
  opt.max_rank = 3;
  opt.deep = true;
  auto tasks = build_verify_tasks(opt);
  VerifyReport serial = run_tasks_serial(tasks);
  VerifyReport parallel = run_tasks_parallel(tasks);
  REQUIRE(serial.checks.size() == parallel.checks.size());
  for (size_t i = 0; i < serial.checks.size(); ++i) {
    CHECK(serial.checks[i].name == parallel.checks[i].name);
    CHECK(serial.checks[i].pass == parallel.checks[i].pass);
    CHECK(serial.checks[i].detail == parallel.checks[i].detail);
  }
  CHECK(serial.failed == 0);
}

TEST_CASE("report json is deterministic") {
  VerifyOptions opt;
  opt.max_rank = 3;
  VerifyReport a = run_verify(opt);
  VerifyReport b = run_verify(opt);
  CHECK(verify_report_json(opt, a).dump() == verify_report_json(opt, b).dump());
}

TEST_CASE("rank bound is enforced") {
  VerifyOptions opt;
  opt.max_rank = 9;
  CHECK_THROWS_AS(build_verify_tasks(opt), std::invalid_argument);
  opt.max_rank = 0;
  CHECK_THROWS_AS(build_verify_tasks(opt), std::invalid_argument);
}
