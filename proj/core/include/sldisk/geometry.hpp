#pragma once

#include <array>
#include <optional>
#include <variant>
#include <vector>

#include "sldisk/rational.hpp"

namespace sldisk {

struct Point {
  Rational x;
  Rational y;

  Point() = default;
  Point(Rational px, Rational py) : x(std::move(px)), y(std::move(py)) {}

  bool operator==(const Point& o) const { return x == o.x && y == o.y; }
  bool operator!=(const Point& o) const { return !(*this == o); }

  Point operator+(const Point& o) const { return {x + o.x, y + o.y}; }
  Point operator-(const Point& o) const { return {x - o.x, y - o.y}; }
  Point operator*(const Rational& s) const { return {x * s, y * s}; }
};

inline Rational cross(const Point& a, const Point& b) { return a.x * b.y - a.y * b.x; }

// Twice the signed area of triangle (p, q, r): det [[1 px py] [1 qx qy] [1 rx ry]].
Rational signed_vol(const Point& p, const Point& q, const Point& r);

// Sign of signed_vol: +1 counterclockwise, 0 collinear, -1 clockwise.
int orientation(const Point& p, const Point& q, const Point& r);

// Oriented line a*x + b*y + c = 0 with (a, b) != (0, 0).
struct Line {
  Rational a;
  Rational b;
  Rational c;

  static Line through(const Point& p, const Point& q);

  Rational eval(const Point& p) const { return a * p.x + b * p.y + c; }
  // Direction vector of the line, canonical: coprime integer coordinates, the
  // first nonzero one positive.
  Point direction() const;
};

struct AtInfinity {
  Point direction;  // canonical common direction of the parallel lines
};
struct Coincident {};
using LineMeet = std::variant<Point, AtInfinity, Coincident>;

LineMeet line_intersection(const Line& l1, const Line& l2);

// Closed-segment predicates used by the embedding oracle.
bool point_on_segment(const Point& p, const Point& a, const Point& b);
bool segments_intersect(const Point& a, const Point& b, const Point& c, const Point& d);
bool point_in_closed_triangle(const Point& p, const Point& a, const Point& b, const Point& c);

// Projective transformation acting on the column (1, x, y): with h = m * (1, x, y),
// the image is (h1/h0, h2/h0). Invariant: det(m) != 0.
struct ProjectiveMap {
  std::array<std::array<Rational, 3>, 3> m;

  static ProjectiveMap identity();
  // Affine map p -> M p + t stored projectively; rows ((1,0,0),(tx,m00,m01),(ty,m10,m11)).
  static ProjectiveMap affine(const Rational& m00, const Rational& m01, const Rational& m10,
                              const Rational& m11, const Rational& tx, const Rational& ty);

  Rational det() const;
  // Adjugate; equals the inverse up to the (irrelevant) projective scale.
  ProjectiveMap inverse() const;
  // Composition this after first: apply(compose, p) == apply(this, apply(first, p)).
  ProjectiveMap after(const ProjectiveMap& first) const;
  // Points where the denominator h0 vanishes; nullopt when the map is affine.
  std::optional<Line> vanishing_line() const;

  bool operator==(const ProjectiveMap& o) const { return m == o.m; }
};

// Throws Error(VanishingLine) when p lies on the map's vanishing line.
Point apply_projective(const ProjectiveMap& g, const Point& p);

// An invertible map whose vanishing line is exactly l.
ProjectiveMap projective_sending_to_infinity(const Line& l);

}  // namespace sldisk
