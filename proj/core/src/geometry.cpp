#include "sldisk/geometry.hpp"

#include "sldisk/errors.hpp"

namespace sldisk {

Rational signed_vol(const Point& p, const Point& q, const Point& r) {
  return cross(q - p, r - p);
}

int orientation(const Point& p, const Point& q, const Point& r) {
  return sign_of(signed_vol(p, q, r));
}

Line Line::through(const Point& p, const Point& q) {
  require_internal(p != q, "line through coincident points");
  Line l;
  l.a = q.y - p.y;
  l.b = p.x - q.x;
  l.c = -(l.a * p.x + l.b * p.y);
  return l;
}

Point Line::direction() const {
  Point d{b, -a};
  const Integer den = boost::multiprecision::lcm(denominator(d.x), denominator(d.y));
  Integer nx = numerator(d.x * Rational(den));
  Integer ny = numerator(d.y * Rational(den));
  const Integer g = boost::multiprecision::gcd(nx, ny);
  nx /= g;
  ny /= g;
  if (nx < 0 || (nx == 0 && ny < 0)) {
    nx = -nx;
    ny = -ny;
  }
  return {Rational(nx), Rational(ny)};
}

LineMeet line_intersection(const Line& l1, const Line& l2) {
  Rational det = l1.a * l2.b - l2.a * l1.b;
  if (det != 0) {
    return Point{(l1.b * l2.c - l2.b * l1.c) / det, (l2.a * l1.c - l1.a * l2.c) / det};
  }
  bool coincident = (l1.a * l2.c - l2.a * l1.c == 0) && (l1.b * l2.c - l2.b * l1.c == 0);
  if (coincident) return Coincident{};
  return AtInfinity{l1.direction()};
}

bool point_on_segment(const Point& p, const Point& a, const Point& b) {
  if (orientation(a, b, p) != 0) return false;
  return rational_min(a.x, b.x) <= p.x && p.x <= rational_max(a.x, b.x) &&
         rational_min(a.y, b.y) <= p.y && p.y <= rational_max(a.y, b.y);
}

bool segments_intersect(const Point& a, const Point& b, const Point& c, const Point& d) {
  int o1 = orientation(a, b, c);
  int o2 = orientation(a, b, d);
  int o3 = orientation(c, d, a);
  int o4 = orientation(c, d, b);
  if (o1 != o2 && o3 != o4) return true;
  if (o1 == 0 && point_on_segment(c, a, b)) return true;
  if (o2 == 0 && point_on_segment(d, a, b)) return true;
  if (o3 == 0 && point_on_segment(a, c, d)) return true;
  if (o4 == 0 && point_on_segment(b, c, d)) return true;
  return false;
}

bool point_in_closed_triangle(const Point& p, const Point& a, const Point& b, const Point& c) {
  int o1 = orientation(a, b, p);
  int o2 = orientation(b, c, p);
  int o3 = orientation(c, a, p);
  return o1 >= 0 && o2 >= 0 && o3 >= 0;
}

ProjectiveMap ProjectiveMap::identity() {
  ProjectiveMap g;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) g.m[i][j] = (i == j) ? 1 : 0;
  return g;
}

ProjectiveMap ProjectiveMap::affine(const Rational& m00, const Rational& m01, const Rational& m10,
                                    const Rational& m11, const Rational& tx, const Rational& ty) {
  ProjectiveMap g = identity();
  g.m[1][0] = tx;
  g.m[1][1] = m00;
  g.m[1][2] = m01;
  g.m[2][0] = ty;
  g.m[2][1] = m10;
  g.m[2][2] = m11;
  return g;
}

Rational ProjectiveMap::det() const {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

ProjectiveMap ProjectiveMap::inverse() const {
  require_internal(det() != 0, "inverse of singular projective map");
  ProjectiveMap adj;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      int r0 = (i + 1) % 3, r1 = (i + 2) % 3;
      int c0 = (j + 1) % 3, c1 = (j + 2) % 3;
      // adjugate: transposed cofactors; cyclic index choice absorbs the sign
      adj.m[j][i] = m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0];
    }
  }
  return adj;
}

ProjectiveMap ProjectiveMap::after(const ProjectiveMap& first) const {
  ProjectiveMap out;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      Rational s = 0;
      for (int k = 0; k < 3; ++k) s += m[i][k] * first.m[k][j];
      out.m[i][j] = s;
    }
  }
  require_internal(out.det() != 0, "composition became singular");
  return out;
}

std::optional<Line> ProjectiveMap::vanishing_line() const {
  if (m[0][1] == 0 && m[0][2] == 0) return std::nullopt;
  return Line{m[0][1], m[0][2], m[0][0]};
}

Point apply_projective(const ProjectiveMap& g, const Point& p) {
  Rational h0 = g.m[0][0] + g.m[0][1] * p.x + g.m[0][2] * p.y;
  if (h0 == 0) {
    fail(ErrorCode::VanishingLine,
         "point (" + format_rational(p.x) + ", " + format_rational(p.y) +
             ") lies on the vanishing line");
  }
  Rational h1 = g.m[1][0] + g.m[1][1] * p.x + g.m[1][2] * p.y;
  Rational h2 = g.m[2][0] + g.m[2][1] * p.x + g.m[2][2] * p.y;
  return {h1 / h0, h2 / h0};
}

ProjectiveMap projective_sending_to_infinity(const Line& l) {
  require_internal(l.a != 0 || l.b != 0, "degenerate line");
  ProjectiveMap g;
  g.m[0][0] = l.c;
  g.m[0][1] = l.a;
  g.m[0][2] = l.b;
  // Complete to an invertible matrix; the lower rows only fix coordinates on the
  // affine patch, any nonsingular completion works.
  if (l.c != 0) {
    g.m[1] = {Rational(0), Rational(1), Rational(0)};
    g.m[2] = {Rational(0), Rational(0), Rational(1)};
  } else if (l.a != 0) {
    g.m[1] = {Rational(1), Rational(0), Rational(0)};
    g.m[2] = {Rational(0), Rational(0), Rational(1)};
  } else {
    g.m[1] = {Rational(1), Rational(0), Rational(0)};
    g.m[2] = {Rational(0), Rational(1), Rational(0)};
  }
  require_internal(g.det() != 0, "completion is singular");
  return g;
}

}  // namespace sldisk
