#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <optional>
#include <set>
#include <string>

#include "sldisk/disk.hpp"
#include "sldisk/errors.hpp"
#include "sldisk/extend.hpp"
#include "sldisk/lp.hpp"
#include "sldisk/polytope.hpp"

using namespace sldisk;

namespace {

Point P(int x, int y) { return {Rational(x), Rational(y)}; }
Point P(const char* x, const char* y) { return {parse_rational(x), parse_rational(y)}; }
Rational Q(const char* t) { return parse_rational(t); }

SLDisk fan() {
  SLDisk d;
  d.vertices = {{0, 0}, {1, 0}, {1, 1}, {0, 1}, {Q("1/2"), Q("1/2")}};
  d.triangles = {{0, 1, 4}, {1, 2, 4}, {2, 3, 4}, {3, 0, 4}};
  return d;
}

// five boundary vertices around an interior one, flat upper chain
SLDisk crown() {
  SLDisk d;
  d.vertices = {{0, 0}, {3, 0}, {2, 1}, {1, 1}, {0, 1}, {Q("3/2"), Q("1/2")}};
  d.triangles = {{0, 1, 5}, {1, 2, 5}, {2, 3, 5}, {3, 4, 5}, {4, 0, 5}};
  return d;
}

// two roof faces over a single low vertex
SLDisk tent() {
  SLDisk d;
  d.vertices = {{0, 0}, {Q("1/2"), Q("-1/2")}, {1, 0}, {Q("1/2"), Q("1/2")}};
  d.triangles = {{0, 1, 3}, {1, 2, 3}};
  return d;
}

SLDisk c_shape() {
  SLDisk d;
  d.vertices = {{0, 0}, {4, 0}, {4, 1}, {1, 1}, {1, 2}, {4, 2}, {4, 3}, {0, 3}};
  d.triangles = {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 7}, {4, 5, 6}, {4, 6, 7}};
  return d;
}

template <typename F>
std::optional<ErrorCode> code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

template <typename F>
std::string message_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

void check_agrees_on(const VertexMap& big, const VertexMap& part) {
  for (const auto& [id, pt] : part) {
    REQUIRE(big.count(id) == 1);
    CHECK(big.at(id) == pt);
  }
}

}  // namespace

TEST_CASE("vertical extension of an embedded disk is the identity") {
  SLDisk d = fan();
  VertexMap v = vertical_extend(d, identity_map(d));
  REQUIRE(v.size() == 5);
  check_agrees_on(v, identity_map(d));
  CHECK(is_embedding(d, v));
}

TEST_CASE("vertical extension follows a lifted roof") {
  SLDisk d = fan();
  VertexMap v = identity_map(d);
  v.erase(4);
  v[2] = P(1, 3);
  v[3] = P(0, 2);
  VertexMap out = vertical_extend(d, v);
  CHECK(out.at(4) == P("1/2", "5/4"));
  CHECK(is_embedding(d, out));
  check_agrees_on(out, v);
}

TEST_CASE("vertical extension re-embeds the crown exactly") {
  // the first spanning split leaves the interior vertex keyed under a flat roof;
  // the dip threshold must land it back on its original slot
  SLDisk d = crown();
  VertexMap v = restrict_to_boundary(d, identity_map(d));
  VertexMap out = vertical_extend(d, v);
  CHECK(out.at(5) == P("3/2", "1/2"));
  CHECK(is_embedding(d, out));
}

TEST_CASE("vertical extension gates fire in order") {
  SLDisk d = fan();

  SLDisk broken = d;
  broken.triangles[0] = {1, 0, 4};  // negative orientation
  CHECK(code_of([&] { vertical_extend(broken, identity_map(d)); }) == ErrorCode::InvalidDisk);

  SLDisk c = c_shape();
  REQUIRE(validate(c).ok());
  REQUIRE(!is_TrV(c));
  CHECK(code_of([&] { vertical_extend(c, identity_map(c)); }) == ErrorCode::NotTrV);

  VertexMap partial = restrict_to_boundary(d, identity_map(d));
  partial.erase(0);
  CHECK(code_of([&] { vertical_extend(d, partial); }) == ErrorCode::NotVertical);

  VertexMap tilted = restrict_to_boundary(d, identity_map(d));
  tilted[0] = P(-1, 0);  // x moved
  CHECK(code_of([&] { vertical_extend(d, tilted); }) == ErrorCode::NotVertical);

  VertexMap crossed = restrict_to_boundary(d, identity_map(d));
  crossed[1] = P(1, 2);  // lifted corner folds the image over the top edge
  CHECK(code_of([&] { vertical_extend(d, crossed); }) == ErrorCode::NotBoundaryEmbedding);

  SLDisk w = crown();
  VertexMap dented = restrict_to_boundary(w, identity_map(w));
  dented[3] = P("1", "1/4");  // reflex image corner
  CHECK(code_of([&] { vertical_extend(w, dented); }) == ErrorCode::NotConvexImage);
}

TEST_CASE("vertical extension rejects obstructive spanning simplices") {
  SLDisk d;
  d.vertices = {{0, 0}, {2, 0}, {2, 2}, {1, 2}};
  d.triangles = {{0, 1, 2}, {0, 2, 3}};
  VertexMap v = identity_map(d);
  v[3] = P(1, 1);  // upper arc 2 -> 3 -> 0 lands on the image of the diagonal 0-2
  auto caught = code_of([&] { vertical_extend(d, v); });
  CHECK(caught == ErrorCode::Obstructive);
}

TEST_CASE("evaluation bound of the tent") {
  SLDisk d = tent();
  CHECK(evaluation_bound(d, 1) == Q("1/2"));

  // cross-check: the bound is the optimum of the pinned height program
  VolumeSystem sys;
  sys.disk = &d;
  for (int i = 0; i < 4; ++i) sys.pinned_x[i] = d.vertices[i].x;
  for (int id : {0, 2, 3}) sys.pinned_y[id] = d.vertices[id].y;
  HPolytope p = build_system(sys);
  LpResult r = lp_extremum(p, {1}, true);
  REQUIRE(r.status == LpStatus::Optimal);
  CHECK(r.value == Q("1/2"));

  // strictly above the chord joining the roof endpoints (y = 0 at x = 1/2)
  CHECK(evaluation_bound(d, 1) > 0);
}

TEST_CASE("evaluation bound preconditions name their clause") {
  SLDisk base = tent();

  CHECK(message_of([&] { evaluation_bound(base, 9); }).find("query vertex out of range") !=
        std::string::npos);
  CHECK(code_of([&] { evaluation_bound(base, 9); }) == ErrorCode::PreconditionViolated);

  SLDisk invalid = base;
  invalid.triangles[0] = {1, 0, 3};
  CHECK(message_of([&] { evaluation_bound(invalid, 1); }).find("disk is not valid") !=
        std::string::npos);

  SLDisk c = c_shape();
  CHECK(message_of([&] { evaluation_bound(c, 0); }).find("disk is not TrV") != std::string::npos);

  // two vertices below the roof
  SLDisk wide;
  wide.vertices = {{0, 1}, {1, 0}, {2, 0}, {3, 1}, {Q("3/2"), 2}};
  wide.triangles = {{0, 1, 4}, {1, 2, 4}, {2, 3, 4}};
  REQUIRE(validate(wide).ok());
  CHECK(message_of([&] { evaluation_bound(wide, 1); })
            .find("boundary off the roof is not exactly the query vertex") != std::string::npos);

  // roof with an upward turn in its interior
  SLDisk dip;
  dip.vertices = {{0, 1}, {1, -1}, {2, 1}, {1, Q("1/2")}};
  dip.triangles = {{0, 1, 3}, {1, 2, 3}};
  REQUIRE(validate(dip).ok());
  CHECK(message_of([&] { evaluation_bound(dip, 1); }).find("roof is not concave") !=
        std::string::npos);

  // single triangle joins the roof endpoints directly
  SLDisk tri;
  tri.vertices = {{0, 1}, {1, 0}, {2, 1}};
  tri.triangles = {{0, 1, 2}};
  CHECK(message_of([&] { evaluation_bound(tri, 1); })
            .find("roof endpoints joined by a 1-simplex") != std::string::npos);
}

TEST_CASE("evaluation bound is the feasibility threshold") {
  SLDisk d = tent();
  const Rational bound = evaluation_bound(d, 1);
  REQUIRE(bound == Q("1/2"));

  for (const Rational& y : {Rational(0), Q("1/4"), Q("49/100"), Q("1/2"), Q("3/4")}) {
    VolumeSystem sys;
    sys.disk = &d;
    for (int i = 0; i < 4; ++i) sys.pinned_x[i] = d.vertices[i].x;
    for (int id : {0, 2, 3}) sys.pinned_y[id] = d.vertices[id].y;
    sys.pinned_y[1] = y;
    HPolytope p = build_system(sys);
    bool feasible = feasible_interior(p).kind == InteriorResult::Kind::StrictPoint;
    CHECK(feasible == (y < bound));
  }
}

TEST_CASE("extending the fan boundary drops the center to the exact optimum") {
  SLDisk d = fan();
  VertexMap f = restrict_to_boundary(d, identity_map(d));
  VertexMap out = extend(d, f);
  CHECK(out.at(4) == P("1/2", "1/3"));
  CHECK(is_embedding(d, out));
  check_agrees_on(out, f);
}

TEST_CASE("extending a boundary with a flat vertex goes through the plateau") {
  SLDisk d;
  d.vertices = {{0, 0}, {Q("1/2"), 0}, {1, 0}, {1, 1}, {0, 1}, {Q("1/2"), Q("1/2")}};
  d.triangles = {{0, 1, 5}, {1, 2, 5}, {2, 3, 5}, {3, 4, 5}, {4, 0, 5}};
  VertexMap f = restrict_to_boundary(d, identity_map(d));
  VertexMap out = extend(d, f);
  CHECK(out.at(5) == P("673/2176", "1/3"));
  CHECK(is_embedding(d, out));
  check_agrees_on(out, f);
}

TEST_CASE("extension gates fire in order") {
  SLDisk d = fan();
  VertexMap f = restrict_to_boundary(d, identity_map(d));

  SLDisk broken = d;
  broken.triangles[0] = {1, 0, 4};
  CHECK(code_of([&] { extend(broken, f); }) == ErrorCode::InvalidDisk);

  VertexMap partial = f;
  partial.erase(0);
  CHECK(code_of([&] { extend(d, partial); }) == ErrorCode::NotBoundaryEmbedding);

  VertexMap crossed = f;
  crossed[0] = P(1, 0);
  crossed[1] = P(0, 0);  // adjacent corners swapped: the image polygon crosses itself
  CHECK(code_of([&] { extend(d, crossed); }) == ErrorCode::NotBoundaryEmbedding);

  VertexMap mirrored = f;
  mirrored[1] = P(0, 1);
  mirrored[3] = P(1, 0);  // reflected square
  CHECK(code_of([&] { extend(d, mirrored); }) == ErrorCode::NotConvexImage);
  CHECK(message_of([&] { extend(d, mirrored); }).find("clockwise") != std::string::npos);

  VertexMap dented = f;
  dented[2] = P("1/2", "1/4");
  CHECK(code_of([&] { extend(d, dented); }) == ErrorCode::NotConvexImage);

  SLDisk sq;
  sq.vertices = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  sq.triangles = {{0, 1, 2}, {0, 2, 3}};
  VertexMap g = identity_map(sq);
  g[3] = P("1/2", "1/2");  // image of the diagonal 0-2 lies along the boundary arc
  CHECK(code_of([&] { extend(sq, g); }) == ErrorCode::Obstructive);
}

TEST_CASE("extension of generated convex disks passes the oracle") {
  int done = 0;
  for (unsigned long long seed = 1; seed <= 25; ++seed) {
    SLDisk d = generate_disk(seed, 1 + static_cast<int>(seed % 3),
                             5 + static_cast<int>(seed % 3), ShapeClass::StrictlyConvex);
    VertexMap f = restrict_to_boundary(d, identity_map(d));
    VertexMap out = extend(d, f);
    CHECK(is_embedding(d, out));
    check_agrees_on(out, f);
    ++done;
  }
  CHECK(done == 25);
}

TEST_CASE("vertical extension onto mirrored parabolas passes the oracle") {
  int attempted = 0, extended = 0;
  for (unsigned long long seed = 1; seed <= 60; ++seed) {
    SLDisk d = generate_disk(seed, static_cast<int>(seed % 2), 6, ShapeClass::TrV);
    auto path = roof(d);
    std::set<int> on_roof(path.begin(), path.end());
    Rational xmin = d.vertices[path.front()].x;
    Rational xmax = d.vertices[path.back()].x;

    VertexMap v;
    for (int id : boundary_vertices(d)) {
      const Point& p = d.vertices[id];
      Rational bump = (p.x - xmin) * (xmax - p.x) / (1 + (xmax - xmin) * (xmax - xmin));
      v[id] = Point{p.x, on_roof.count(id) ? bump : -bump};
    }
    ++attempted;
    try {
      VertexMap out = vertical_extend(d, v);
      CHECK(is_embedding(d, out));
      check_agrees_on(out, v);
      ++extended;
    } catch (const Error& e) {
      // only the documented image gates may refuse a generated instance
      bool gate = e.code() == ErrorCode::NotBoundaryEmbedding ||
                  e.code() == ErrorCode::NotConvexImage || e.code() == ErrorCode::Obstructive;
      CHECK(gate);
    }
  }
  CHECK(attempted == 60);
  CHECK(extended >= 10);
}
