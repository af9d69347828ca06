#include <cstddef>
#include <variant>
#include <vector>

#include "sldisk/errors.hpp"
#include "sldisk/reduce.hpp"

namespace sldisk {

namespace {

Point midpoint(const Point& a, const Point& b) { return (a + b) * Rational(1, 2); }

int circle_orientation(const std::vector<Point>& pts) {
  Rational twice_area(0);
  for (size_t i = 0; i < pts.size(); ++i)
    twice_area += cross(pts[i], pts[(i + 1) % pts.size()]);
  return sign_of(twice_area);
}

// Exact normal-position invariant over the transformed circle points.
bool reduced_invariant(const std::vector<Point>& pts, const std::vector<int>& base,
                       int size) {
  if (circle_orientation(pts) <= 0) return false;
  std::vector<char> on_base(pts.size(), 0);
  for (int pos : base) on_base[((pos % size) + size) % size] = 1;
  const Point zero{Rational(0), Rational(0)};
  const Point one{Rational(1), Rational(0)};
  if (pts[((base.front() % size) + size) % size] != zero) return false;
  if (pts[((base.back() % size) + size) % size] != one) return false;
  for (size_t k = 1; k + 1 < base.size(); ++k) {
    const Point& p = pts[((base[k] % size) + size) % size];
    if (p.y != 0 || p.x <= 0 || p.x >= 1) return false;
  }
  for (size_t i = 0; i < pts.size(); ++i) {
    if (on_base[i]) continue;
    if (pts[i].y <= 0 || pts[i].x <= 0 || pts[i].x >= 1) return false;
  }
  return true;
}

}  // namespace

Line choose_vanishing_line(const LineMeet& t, const Point& s1, const Point& s2,
                           const std::vector<Point>& hull) {
  Line out;
  if (const Point* tp = std::get_if<Point>(&t)) {
    require_internal(orientation(s1, s2, *tp) < 0,
                     "frame point is not on the far side of the base");
    out = Line::through(midpoint(*tp, s1), midpoint(*tp, s2));
  } else if (const AtInfinity* ai = std::get_if<AtInfinity>(&t)) {
    Point w = ai->direction;
    int side = orientation(s1, s2, s1 + w);
    require_internal(side != 0, "support direction is parallel to the base");
    if (side > 0) w = Point{-w.x, -w.y};
    Point anchor = s1 + w;
    out = Line::through(anchor, anchor + (s2 - s1));
  } else {
    fail(ErrorCode::InternalError, "adjacent support lines coincide");
  }
  int side = 0;
  for (const Point& p : hull) {
    int e = sign_of(out.eval(p));
    require_internal(e != 0, "vanishing line meets the hull");
    if (side == 0) side = e;
    require_internal(e == side, "vanishing line separates the hull");
  }
  require_internal(side != 0, "empty hull");
  if (side < 0) {
    out.a = -out.a;
    out.b = -out.b;
    out.c = -out.c;
  }
  return out;
}

ProjectiveMap reduce_circle(const SLCircle& c, int mu_index) {
  if (!is_simple_polygon(c)) fail(ErrorCode::NotConvex, "boundary polygon is not simple");
  if (convexity(c) == Convexity::NotConvex)
    fail(ErrorCode::NotConvex, "boundary polygon is not convex");
  auto runs = natural_edges(c);
  if (mu_index < 0 || mu_index >= static_cast<int>(runs.size()))
    fail(ErrorCode::NotNaturalEdge,
         "natural edge index " + std::to_string(mu_index) + " out of range");

  const int k = static_cast<int>(runs.size());
  const int n = c.size();
  const int pos_s1 = runs[mu_index].front();
  const int pos_s2 = runs[mu_index].back();
  const int pos_s0 = runs[(mu_index + k - 1) % k].front();
  const int pos_s3 = runs[(mu_index + 1) % k].back();
  auto norm = [n](int pos) { return ((pos % n) + n) % n; };

  std::vector<Point> pts;
  pts.reserve(n);
  for (int i = 0; i < n; ++i) pts.push_back(c.at(i));

  auto frame_point = [&]() {
    return line_intersection(Line::through(pts[norm(pos_s0)], pts[norm(pos_s1)]),
                             Line::through(pts[norm(pos_s2)], pts[norm(pos_s3)]));
  };

  ProjectiveMap g_pre = ProjectiveMap::identity();
  LineMeet t = frame_point();
  const Point* tp = std::get_if<Point>(&t);
  bool good = tp && orientation(pts[norm(pos_s1)], pts[norm(pos_s2)], *tp) > 0;
  if (!good) {
    Line vanish =
        choose_vanishing_line(t, pts[norm(pos_s1)], pts[norm(pos_s2)], pts);
    g_pre = projective_sending_to_infinity(vanish);
    for (Point& p : pts) p = apply_projective(g_pre, p);
    t = frame_point();
    tp = std::get_if<Point>(&t);
    int ccw = circle_orientation(pts);
    require_internal(tp && ccw != 0 &&
                         orientation(pts[norm(pos_s1)], pts[norm(pos_s2)], *tp) == ccw,
                     "projective step left the frame point at infinity");
  }

  const Point S1 = pts[norm(pos_s1)];
  const Point S2 = pts[norm(pos_s2)];
  const Point T = *tp;
  const Point U = midpoint(S1, S2);
  const Point c1 = S2 - S1;
  const Point c2 = T - U;
  const Rational det = c1.x * c2.y - c2.x * c1.y;
  require_internal(det != 0, "degenerate affine frame");
  const Rational m00 = c2.y / det;
  const Rational m01 = -c2.x / det;
  const Rational m10 = -c1.y / det;
  const Rational m11 = c1.x / det;
  ProjectiveMap aff = ProjectiveMap::affine(m00, m01, m10, m11,
                                            -(m00 * S1.x + m01 * S1.y),
                                            -(m10 * S1.x + m11 * S1.y));
  for (Point& p : pts) p = apply_projective(aff, p);

  const ProjectiveMap patterns[4] = {
      ProjectiveMap::identity(),
      ProjectiveMap::affine(Rational(-1), Rational(0), Rational(0), Rational(1),
                            Rational(1), Rational(0)),
      ProjectiveMap::affine(Rational(1), Rational(0), Rational(0), Rational(-1),
                            Rational(0), Rational(0)),
      ProjectiveMap::affine(Rational(-1), Rational(0), Rational(0), Rational(-1),
                            Rational(1), Rational(0))};
  int chosen = -1;
  std::vector<Point> fixed;
  for (int pat = 0; pat < 4; ++pat) {
    std::vector<Point> trial = pts;
    for (Point& p : trial) p = apply_projective(patterns[pat], p);
    if (reduced_invariant(trial, runs[mu_index], n)) {
      require_internal(chosen < 0, "normal position is not unique");
      chosen = pat;
      fixed = std::move(trial);
    }
  }
  require_internal(chosen >= 0, "no reflection reaches normal position");
  return patterns[chosen].after(aff.after(g_pre));
}

ReducedForm reduce(const SLDisk& d, int mu_index) {
  require_valid(d);
  SLCircle c = boundary_circle(d);
  ReducedForm out;
  out.map = reduce_circle(c, mu_index);
  out.disk = d;
  for (Point& p : out.disk.vertices) p = apply_projective(out.map, p);
  for (const auto& tri : out.disk.triangles)
    require_internal(orientation(out.disk.vertices[tri[0]], out.disk.vertices[tri[1]],
                                 out.disk.vertices[tri[2]]) > 0,
                     "reduction flipped a triangle");
  require_valid(out.disk);

  auto runs = natural_edges(c);
  for (int pos : runs[mu_index]) out.base_run.push_back(c.id_at(pos));
  std::vector<Point> pts;
  for (int i = 0; i < c.size(); ++i) pts.push_back(out.disk.vertices[c.id_at(i)]);
  require_internal(reduced_invariant(pts, runs[mu_index], c.size()),
                   "reduced disk violates the normal-position invariant");
  return out;
}

VertexMap plateau_collapse(const SLCircle& c, const Rational& h) {
  require_internal(h > 0, "collapse depth must be positive");
  auto runs = natural_edges(c);
  int base = -1;
  for (size_t i = 0; i < runs.size(); ++i) {
    bool flat = true;
    for (int pos : runs[i])
      if (c.at(pos).y != 0) {
        flat = false;
        break;
      }
    if (flat) {
      require_internal(base < 0, "several natural edges lie on y = 0");
      base = static_cast<int>(i);
    }
  }
  require_internal(base >= 0, "no natural edge on y = 0");
  const auto& run = runs[base];
  require_internal(c.at(run.front()) == Point(Rational(0), Rational(0)) &&
                       c.at(run.back()) == Point(Rational(1), Rational(0)),
                   "boundary is not in normal position");
  if (run.size() < 3)
    fail(ErrorCode::NoPlateau, "base natural edge has no interior vertex");
  VertexMap v;
  for (int pos = 0; pos < c.size(); ++pos) v[c.id_at(pos)] = c.at(pos);
  for (size_t k = 1; k + 1 < run.size(); ++k) {
    const Point& p = c.at(run[k]);
    v[c.id_at(run[k])] = Point{p.x, -h * p.x * (Rational(1) - p.x)};
  }
  return v;
}

int plateau_count(const SLCircle& c) {
  int count = 0;
  for (const auto& run : natural_edges(c))
    if (run.size() >= 3) ++count;
  return count;
}

}  // namespace sldisk
