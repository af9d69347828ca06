#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sldisk/errors.hpp"
#include "sldisk/geometry.hpp"

using namespace sldisk;

namespace {
Point P(int x, int y) { return {Rational(x), Rational(y)}; }
Point P(const char* x, const char* y) { return {parse_rational(x), parse_rational(y)}; }
}  // namespace

TEST_CASE("rational parse and format are canonical") {
  CHECK(format_rational(parse_rational("2/4")) == "1/2");
  CHECK(format_rational(parse_rational("-6/4")) == "-3/2");
  CHECK(format_rational(parse_rational("7/1")) == "7");
  CHECK(format_rational(parse_rational("0")) == "0");
  CHECK(format_rational(parse_rational("-0")) == "0");
  CHECK(parse_rational("1/3") + parse_rational("1/6") == parse_rational("1/2"));
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("1/-2"), Error);
  CHECK_THROWS_AS(parse_rational("a"), Error);
  CHECK_THROWS_AS(parse_rational(""), Error);
  CHECK_THROWS_AS(parse_rational("1.5"), Error);
}

TEST_CASE("orientation and signed volume") {
  CHECK(signed_vol(P(0, 0), P(1, 0), P(0, 1)) == 1);
  CHECK(signed_vol(P(0, 0), P(0, 1), P(1, 0)) == -1);
  CHECK(signed_vol(P(0, 0), P(2, 2), P(4, 4)) == 0);
  CHECK(orientation(P(0, 0), P(1, 0), P("1/2", "1/1000000")) == 1);
  CHECK(orientation(P(0, 0), P(1, 0), P("1/2", "-1/1000000")) == -1);
  CHECK(orientation(P(0, 0), P(3, 1), P(6, 2)) == 0);
  // doubled area, no 1/2 factor
  CHECK(signed_vol(P(0, 0), P(2, 0), P(0, 2)) == 4);
}

TEST_CASE("lines and intersections") {
  Line l = Line::through(P(0, 0), P(2, 2));
  CHECK(l.eval(P(1, 1)) == 0);
  CHECK(l.eval(P(5, 5)) == 0);
  CHECK(l.eval(P(0, 1)) != 0);

  // x + y = 0 and x - y - 1 = 0 meet at (1/2, -1/2)
  Line l1{Rational(1), Rational(1), Rational(0)};
  Line l2{Rational(1), Rational(-1), Rational(-1)};
  auto meet = line_intersection(l1, l2);
  REQUIRE(std::holds_alternative<Point>(meet));
  CHECK(std::get<Point>(meet) == P("1/2", "-1/2"));

  auto par = line_intersection(Line::through(P(0, 0), P(1, 0)), Line::through(P(0, 1), P(1, 1)));
  REQUIRE(std::holds_alternative<AtInfinity>(par));
  CHECK(std::get<AtInfinity>(par).direction == P(1, 0));

  auto coin = line_intersection(Line::through(P(0, 0), P(1, 1)), Line::through(P(2, 2), P(3, 3)));
  CHECK(std::holds_alternative<Coincident>(coin));

  CHECK(Line::through(P(0, 0), P(0, 5)).direction() == P(0, 1));
  CHECK(Line::through(P(0, 5), P(0, 0)).direction() == P(0, 1));
}

TEST_CASE("segment predicates") {
  CHECK(point_on_segment(P(1, 1), P(0, 0), P(2, 2)));
  CHECK(point_on_segment(P(0, 0), P(0, 0), P(2, 2)));
  CHECK(!point_on_segment(P(3, 3), P(0, 0), P(2, 2)));
  CHECK(!point_on_segment(P(1, 2), P(0, 0), P(2, 2)));

  CHECK(segments_intersect(P(0, 0), P(2, 2), P(0, 2), P(2, 0)));
  CHECK(segments_intersect(P(0, 0), P(2, 0), P(1, 0), P(3, 0)));  // overlapping collinear
  CHECK(segments_intersect(P(0, 0), P(1, 0), P(1, 0), P(2, 1)));  // shared endpoint
  CHECK(!segments_intersect(P(0, 0), P(1, 0), P(0, 1), P(1, 1)));
  CHECK(!segments_intersect(P(0, 0), P(1, 1), P(2, 2), P(3, 3)));  // collinear, disjoint

  CHECK(point_in_closed_triangle(P("1/3", "1/3"), P(0, 0), P(1, 0), P(0, 1)));
  CHECK(point_in_closed_triangle(P("1/2", "0"), P(0, 0), P(1, 0), P(0, 1)));
  CHECK(!point_in_closed_triangle(P(1, 1), P(0, 0), P(1, 0), P(0, 1)));
}

TEST_CASE("projective maps compose, invert and apply") {
  // affine rows ((1,0,0),(tx,m00,m01),(ty,m10,m11))
  ProjectiveMap a = ProjectiveMap::affine(2, 0, 0, 3, Rational(1), Rational(-1));
  CHECK(a.m[0][0] == 1);
  CHECK(a.m[1][0] == 1);
  CHECK(a.m[1][1] == 2);
  CHECK(a.m[2][2] == 3);
  CHECK(apply_projective(a, P(1, 1)) == P(3, 2));
  CHECK(a.det() == 6);
  CHECK(!a.vanishing_line().has_value());

  ProjectiveMap b = ProjectiveMap::affine(1, 1, 0, 1, Rational(0), Rational(0));
  Point p = P(2, 5);
  CHECK(apply_projective(b.after(a), p) == apply_projective(b, apply_projective(a, p)));

  // adjugate inverse is exact under apply despite the projective scale
  ProjectiveMap ai = a.inverse();
  CHECK(apply_projective(ai, apply_projective(a, p)) == p);
  CHECK(apply_projective(a, apply_projective(ai, p)) == p);

  CHECK(apply_projective(ProjectiveMap::identity(), p) == p);
}

TEST_CASE("maps sending a line to infinity") {
  for (const Line& l : {Line{Rational(1), Rational(2), Rational(3)},
                        Line{Rational(0), Rational(1), Rational(1)},
                        Line{Rational(1), Rational(0), Rational(0)},
                        Line{Rational(2), Rational(-3), Rational(0)}}) {
    ProjectiveMap g = projective_sending_to_infinity(l);
    CHECK(g.det() != 0);
    auto vl = g.vanishing_line();
    REQUIRE(vl.has_value());
    // same line up to scale
    CHECK(vl->a * l.b == vl->b * l.a);
    CHECK(vl->a * l.c == vl->c * l.a);
    CHECK(vl->b * l.c == vl->c * l.b);
  }

  // points on the vanishing line are rejected
  Line l{Rational(0), Rational(1), Rational(1)};  // y = -1
  ProjectiveMap g = projective_sending_to_infinity(l);
  CHECK_THROWS_AS(apply_projective(g, P(0, -1)), Error);
  try {
    apply_projective(g, P(7, -1));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::VanishingLine);
  }
  CHECK_NOTHROW(apply_projective(g, P(0, 0)));
}

TEST_CASE("projective round trips preserve cross ratios of collinear points") {
  ProjectiveMap g = projective_sending_to_infinity(Line{Rational(1), Rational(1), Rational(5)});
  // collinear triples stay collinear
  Point a = P(0, 0), b = P(1, 1), c = P(2, 2);
  Point ga = apply_projective(g, a), gb = apply_projective(g, b), gc = apply_projective(g, c);
  CHECK(orientation(ga, gb, gc) == 0);
  // non-collinear triples stay non-collinear (injectivity off the line)
  Point d = P(1, 0);
  CHECK(orientation(ga, gb, apply_projective(g, d)) != 0);
}
