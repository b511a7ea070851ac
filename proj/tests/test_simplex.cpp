#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rootstrata/simplex.hpp"

using namespace rootstrata;

TEST_CASE("basic programs") {
  // min x + y  s.t.  x + y = 1
  LPResult r = solve_lp({{1, 1}}, {Rational(1)}, {Rational(1), Rational(1)});
  CHECK(r.status == LPStatus::Optimal);
  CHECK(r.value == 1);

  // min x  s.t.  x - y = 2, x + y = 4  ->  x = 3, y = 1
  r = solve_lp({{1, -1}, {1, 1}}, {Rational(2), Rational(4)}, {Rational(1), Rational(0)});
  CHECK(r.status == LPStatus::Optimal);
  CHECK(r.value == 3);
  CHECK(r.x[1] == 1);

  // infeasible: x = -1 with x >= 0
  r = solve_lp({{1}}, {Rational(-1)}, {Rational(1)});
  CHECK(r.status == LPStatus::Infeasible);

  // unbounded: min -x s.t. x - y = 0
  r = solve_lp({{1, -1}}, {Rational(0)}, {Rational(-1), Rational(0)});
  CHECK(r.status == LPStatus::Unbounded);

  // redundant rows are dropped
  r = solve_lp({{1, 1}, {2, 2}}, {Rational(1), Rational(2)}, {Rational(1), Rational(1)});
  CHECK(r.status == LPStatus::Optimal);
  CHECK(r.value == 1);
}

TEST_CASE("exact rational answers") {
  // min 3x + 5y  s.t.  x + 2y = 1  ->  y = 1/2
  LPResult r = solve_lp({{1, 2}}, {Rational(1)}, {Rational(3), Rational(5)});
  CHECK(r.status == LPStatus::Optimal);
  CHECK(r.value == Rational(5) / 2);
}

TEST_CASE("convex hull membership") {
  std::vector<RationalVec> square{{Rational(1), Rational(1)},
                                  {Rational(1), Rational(-1)},
                                  {Rational(-1), Rational(1)},
                                  {Rational(-1), Rational(-1)}};
  CHECK(in_convex_hull(square, {Rational(0), Rational(0)}));
  CHECK(in_convex_hull(square, {Rational(1), Rational(1)}));
  CHECK(in_convex_hull(square, {Rational(1, 2), Rational(-1, 2)}));
  CHECK_FALSE(in_convex_hull(square, {Rational(2), Rational(0)}));
  CHECK_FALSE(in_convex_hull(square, {Rational(1), Rational(2)}));
}

TEST_CASE("minimal dilation") {
  std::vector<RationalVec> segment{{Rational(1)}, {Rational(-1)}};
  CHECK(min_dilation_lp(segment, {Rational(1, 2)}) == Rational(1) / 2);
  CHECK(min_dilation_lp(segment, {Rational(0)}) == 0);
  CHECK(min_dilation_lp(segment, {Rational(-3)}) == 3);

  std::vector<RationalVec> square{{Rational(1), Rational(1)},
                                  {Rational(1), Rational(-1)},
                                  {Rational(-1), Rational(1)},
                                  {Rational(-1), Rational(-1)}};
  CHECK(min_dilation_lp(square, {Rational(3), Rational(1)}) == 3);
}
