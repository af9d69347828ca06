#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <optional>
#include <set>
#include <string>

#include "sldisk/disk.hpp"
#include "sldisk/errors.hpp"
#include "sldisk/reduce.hpp"

using namespace sldisk;

namespace {

Point P(int x, int y) { return {Rational(x), Rational(y)}; }
Point P(const char* x, const char* y) { return {parse_rational(x), parse_rational(y)}; }

SLDisk fan() {
  SLDisk d;
  d.vertices = {{0, 0}, {1, 0}, {1, 1}, {0, 1}, {parse_rational("1/2"), parse_rational("1/2")}};
  d.triangles = {{0, 1, 4}, {1, 2, 4}, {2, 3, 4}, {3, 0, 4}};
  return d;
}

SLCircle circle(std::vector<Point> pts) {
  SLCircle c;
  c.pts = std::move(pts);
  for (int i = 0; i < static_cast<int>(c.pts.size()); ++i) c.ids.push_back(i);
  return c;
}

std::vector<Point> square_hull() { return {P(0, 0), P(1, 0), P(1, 1), P(0, 1)}; }

template <typename F>
std::optional<ErrorCode> code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("vanishing line through a finite frame point") {
  Line l = choose_vanishing_line(LineMeet{P("1/2", "-1/2")}, P(0, 0), P(1, 0), square_hull());
  // midline y = -1/4, normalized positive on the hull
  CHECK(l.a == 0);
  CHECK(l.b == parse_rational("1/2"));
  CHECK(l.c == parse_rational("1/8"));
  CHECK(l.eval(P("0", "-1/4")) == 0);
  CHECK(l.eval(P("1", "-1/4")) == 0);
  for (const Point& p : square_hull()) CHECK(l.eval(p) > 0);

  // frame point on the hull side is rejected
  CHECK(code_of([&] {
          choose_vanishing_line(LineMeet{P("1/2", "1/2")}, P(0, 0), P(1, 0), square_hull());
        }) == ErrorCode::InternalError);
}

TEST_CASE("vanishing line for parallel support lines") {
  Line l = choose_vanishing_line(LineMeet{AtInfinity{P(0, 1)}}, P(0, 0), P(1, 0), square_hull());
  // y = -1: one unit below the base, away from the hull
  CHECK(l.a == 0);
  CHECK(l.b == 1);
  CHECK(l.c == 1);
  for (const Point& p : square_hull()) CHECK(l.eval(p) > 0);

  // direction parallel to the base cannot separate
  CHECK(code_of([&] {
          choose_vanishing_line(LineMeet{AtInfinity{P(1, 0)}}, P(0, 0), P(1, 0), square_hull());
        }) == ErrorCode::InternalError);

  CHECK(code_of([&] {
          choose_vanishing_line(LineMeet{Coincident{}}, P(0, 0), P(1, 0), square_hull());
        }) == ErrorCode::InternalError);
}

TEST_CASE("reducing a triangle at its base is the identity") {
  SLDisk d;
  d.vertices = {{0, 0}, {1, 0}, {parse_rational("1/2"), 1}};
  d.triangles = {{0, 1, 2}};
  ReducedForm r = reduce(d, 0);
  CHECK(r.base_run == std::vector<int>{0, 1});
  for (size_t i = 0; i < d.vertices.size(); ++i) CHECK(r.disk.vertices[i] == d.vertices[i]);
  CHECK(apply_projective(r.map, P("1/4", "1/7")) == P("1/4", "1/7"));
}

TEST_CASE("reducing the square fan at its base") {
  SLDisk d = fan();
  ReducedForm r = reduce(d, 0);
  CHECK(r.base_run == std::vector<int>{0, 1});
  CHECK(r.disk.vertices[0] == P(0, 0));
  CHECK(r.disk.vertices[1] == P(1, 0));
  CHECK(r.disk.vertices[2] == P("3/4", "1/2"));
  CHECK(r.disk.vertices[3] == P("1/4", "1/2"));
  CHECK(r.disk.vertices[4] == P("1/2", "1/3"));
  CHECK(r.disk.triangles == d.triangles);
  CHECK(validate(r.disk).ok());

  // the map is exactly the change of coordinates, invertible over the disk
  ProjectiveMap back = r.map.inverse();
  for (size_t i = 0; i < d.vertices.size(); ++i) {
    CHECK(apply_projective(r.map, d.vertices[i]) == r.disk.vertices[i]);
    CHECK(apply_projective(back, r.disk.vertices[i]) == d.vertices[i]);
  }
}

TEST_CASE("reduction gates") {
  SLCircle bowtie = circle({P(0, 0), P(1, 1), P(1, 0), P(0, 1)});
  CHECK(code_of([&] { reduce_circle(bowtie, 0); }) == ErrorCode::NotConvex);
  try {
    reduce_circle(bowtie, 0);
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("not simple") != std::string::npos);
  }

  SLCircle reflex = circle({P(0, 0), P(2, 0), P(2, 1), P(1, 1), P(1, 2), P(0, 2)});
  CHECK(code_of([&] { reduce_circle(reflex, 0); }) == ErrorCode::NotConvex);

  SLCircle square = circle(square_hull());
  CHECK(code_of([&] { reduce_circle(square, 4); }) == ErrorCode::NotNaturalEdge);
  CHECK(code_of([&] { reduce_circle(square, -1); }) == ErrorCode::NotNaturalEdge);
  CHECK_NOTHROW(reduce_circle(square, 3));
}

TEST_CASE("reduction round trips over generated convex disks") {
  for (unsigned long long seed = 1; seed <= 12; ++seed) {
    for (ShapeClass shape : {ShapeClass::Convex, ShapeClass::StrictlyConvex}) {
      SLDisk d = generate_disk(seed, static_cast<int>(seed % 3), 5 + static_cast<int>(seed % 4),
                               shape);
      SLCircle c = boundary_circle(d);
      auto runs = natural_edges(c);
      for (int mu = 0; mu < static_cast<int>(runs.size()); ++mu) {
        ReducedForm r = reduce(d, mu);
        CHECK(r.disk.triangles == d.triangles);
        CHECK(validate(r.disk).ok());

        // normal position: base on [0,1] x {0}, the rest strictly inside the band
        REQUIRE(!r.base_run.empty());
        CHECK(r.disk.vertices[r.base_run.front()] == P(0, 0));
        CHECK(r.disk.vertices[r.base_run.back()] == P(1, 0));
        for (size_t k = 0; k < r.base_run.size(); ++k) {
          const Point& p = r.disk.vertices[r.base_run[k]];
          CHECK(p.y == 0);
          CHECK(p.x >= 0);
          CHECK(p.x <= 1);
          if (k > 0) CHECK(r.disk.vertices[r.base_run[k - 1]].x < p.x);
        }
        std::set<int> base(r.base_run.begin(), r.base_run.end());
        for (int id : boundary_vertices(r.disk)) {
          if (base.count(id)) continue;
          const Point& p = r.disk.vertices[id];
          CHECK(p.y > 0);
          CHECK(p.x > 0);
          CHECK(p.x < 1);
        }
        CHECK(convexity(boundary_circle(r.disk)) != Convexity::NotConvex);

        ProjectiveMap back = r.map.inverse();
        for (size_t i = 0; i < d.vertices.size(); ++i) {
          CHECK(apply_projective(r.map, d.vertices[i]) == r.disk.vertices[i]);
          CHECK(apply_projective(back, r.disk.vertices[i]) == d.vertices[i]);
        }
      }
    }
  }
}

TEST_CASE("plateau collapse drops base interiors onto the parabola") {
  SLCircle c = circle({P(0, 0), P("1/3", "0"), P("2/3", "0"), P(1, 0), P("1/2", "1")});
  VertexMap v = plateau_collapse(c, parse_rational("1/4"));
  CHECK(v.at(0) == P(0, 0));
  CHECK(v.at(1) == P("1/3", "-1/18"));
  CHECK(v.at(2) == P("2/3", "-1/18"));
  CHECK(v.at(3) == P(1, 0));
  CHECK(v.at(4) == P("1/2", "1"));

  // depth scales linearly and the deepest point sits under the midpoint
  SLCircle mid = circle({P(0, 0), P("1/2", "0"), P(1, 0), P("1/2", "1")});
  VertexMap w = plateau_collapse(mid, 1);
  CHECK(w.at(1) == P("1/2", "-1/4"));

  CHECK(code_of([&] { plateau_collapse(circle({P(0, 0), P(1, 0), P("1/2", "1")}), 1); }) ==
        ErrorCode::NoPlateau);
  // base from (0,0) to (2,0) is not normal position
  CHECK(code_of([&] {
          plateau_collapse(circle({P(0, 0), P(1, 0), P(2, 0), P(1, 1)}), 1);
        }) == ErrorCode::InternalError);
}

TEST_CASE("plateau count sees every flat run") {
  CHECK(plateau_count(circle(square_hull())) == 0);
  CHECK(plateau_count(circle({P(0, 0), P(1, 0), P(2, 0), P(3, 0), P(3, 1), P(0, 1)})) == 1);
  CHECK(plateau_count(circle({P(0, 0), P(1, 0), P(2, 0), P(2, 1), P(1, 1), P(0, 1)})) == 2);
}
