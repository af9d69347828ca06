#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sldisk/errors.hpp"
#include "sldisk/lp.hpp"

using namespace sldisk;

namespace {

Rational Q(const char* t) { return parse_rational(t); }

AffineForm form(std::vector<Rational> coeffs, Rational constant) {
  AffineForm f;
  f.coeffs = std::move(coeffs);
  f.constant = std::move(constant);
  return f;
}

// 0 <= x <= 1, 0 <= y <= 2
std::vector<AffineForm> box() {
  return {form({1, 0}, 0), form({-1, 0}, 1), form({0, 1}, 0), form({0, -1}, 2)};
}

}  // namespace

TEST_CASE("affine form evaluation") {
  AffineForm f = form({2, -1}, Q("1/2"));
  CHECK(f.eval({Q("1/4"), 1}) == 0);
  CHECK(f.eval({1, 0}) == Q("5/2"));
}

TEST_CASE("bounded maxima and minima are exact") {
  auto r = lp_maximize(box(), {1, 1});
  REQUIRE(r.status == LpStatus::Optimal);
  CHECK(r.value == 3);
  CHECK(r.point == std::vector<Rational>{1, 2});

  r = lp_minimize(box(), {1, 1});
  REQUIRE(r.status == LpStatus::Optimal);
  CHECK(r.value == 0);
  CHECK(r.point == std::vector<Rational>{0, 0});

  // fractional optimum: max x + y subject to 2x + y <= 2, x + 3y <= 3, x,y >= 0
  std::vector<AffineForm> tri = {form({1, 0}, 0), form({0, 1}, 0), form({-2, -1}, 2),
                                 form({-1, -3}, 3)};
  r = lp_maximize(tri, {1, 1});
  REQUIRE(r.status == LpStatus::Optimal);
  CHECK(r.value == Q("7/5"));
  CHECK(r.point == std::vector<Rational>{Q("3/5"), Q("4/5")});

  // objective along a face still reports the exact optimum value
  r = lp_maximize(box(), {0, 1});
  REQUIRE(r.status == LpStatus::Optimal);
  CHECK(r.value == 2);
}

TEST_CASE("free variables may go negative") {
  // y >= -3, y <= -1, x pinned by x >= 2, -x >= -2
  std::vector<AffineForm> forms = {form({0, 1}, 3), form({0, -1}, -1), form({1, 0}, -2),
                                   form({-1, 0}, 2)};
  auto r = lp_minimize(forms, {0, 1});
  REQUIRE(r.status == LpStatus::Optimal);
  CHECK(r.value == -3);
  CHECK(r.point[0] == 2);
}

TEST_CASE("unbounded and infeasible programs are classified") {
  std::vector<AffineForm> half = {form({1, 0}, 0), form({0, 1}, 0)};  // x, y >= 0
  CHECK(lp_maximize(half, {1, 1}).status == LpStatus::Unbounded);
  CHECK(lp_minimize(half, {1, 0}).status == LpStatus::Optimal);

  std::vector<AffineForm> empty = {form({1, 0}, 0), form({-1, 0}, -1)};  // x >= 0, x <= -1
  CHECK(lp_maximize(empty, {1, 0}).status == LpStatus::Infeasible);
}

TEST_CASE("degenerate vertices terminate under Bland") {
  // many redundant constraints through the same optimum
  std::vector<AffineForm> forms = box();
  forms.push_back(form({-1, -1}, 3));   // tight at (1,2)
  forms.push_back(form({-2, -1}, 4));   // tight at (1,2)
  forms.push_back(form({-1, -2}, 5));   // tight at (1,2)
  auto r = lp_maximize(forms, {1, 1});
  REQUIRE(r.status == LpStatus::Optimal);
  CHECK(r.value == 3);
}

TEST_CASE("strict interior points") {
  auto in = feasible_interior(box());
  REQUIRE(in.kind == InteriorResult::Kind::StrictPoint);
  for (const AffineForm& f : box()) CHECK(f.eval(in.point) > 0);

  // a line segment has no strict interior in the inequality sense
  std::vector<AffineForm> seg = {form({1, 0}, 0), form({-1, 0}, 0), form({0, 1}, 0),
                                 form({0, -1}, 1)};
  CHECK(feasible_interior(seg).kind == InteriorResult::Kind::NoInterior);

  std::vector<AffineForm> none = {form({1, 0}, 0), form({-1, 0}, -1)};
  CHECK(feasible_interior(none).kind == InteriorResult::Kind::Empty);

  // selective strictness: weak on the pinning pair, strict elsewhere
  std::vector<char> strict = {0, 0, 1, 1};
  auto sel = feasible_interior(seg, strict);
  REQUIRE(sel.kind == InteriorResult::Kind::StrictPoint);
  CHECK(sel.point[0] == 0);
  CHECK(sel.point[1] > 0);
  CHECK(sel.point[1] < 1);
}
