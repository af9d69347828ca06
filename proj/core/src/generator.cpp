#include <random>
#include <utility>
#include <vector>

#include "sldisk/disk.hpp"
#include "sldisk/errors.hpp"

namespace sldisk {

namespace {

int rnd(std::mt19937_64& rng, int n) {
  return static_cast<int>(rng() % static_cast<unsigned long long>(n));
}

Point midpoint(const Point& a, const Point& b) { return (a + b) * Rational(1, 2); }

// Structural validity plus the per-class boundary requirement. Vertical boundary
// 1-simplices are rejected for every class so convex results are also TrV.
bool shape_ok(const SLDisk& d, ShapeClass shape) {
  if (!validate(d).ok()) return false;
  SLCircle c = boundary_circle(d);
  for (int i = 0; i < c.size(); ++i)
    if (c.at(i).x == c.at(i + 1).x) return false;
  switch (shape) {
    case ShapeClass::StrictlyConvex:
      return convexity(c) == Convexity::StrictlyConvex;
    case ShapeClass::Convex:
      return convexity(c) != Convexity::NotConvex;
    case ShapeClass::TrV:
      return is_TrV(d);
  }
  return false;
}

// Grows a triangle outward over boundary edge (pos, pos+1). A dent skips the
// convexity requirement and stays shallow, so reflex boundary vertices appear.
bool try_ear(SLDisk& d, std::mt19937_64& rng, ShapeClass shape, bool dent) {
  SLCircle c = boundary_circle(d);
  int pos = rnd(rng, c.size());
  const Point u = c.at(pos);
  const Point v = c.at(pos + 1);
  const Point e = v - u;
  const Point outward{e.y, -e.x};
  Rational depth = dent ? Rational(1, 32) : Rational(1 + rnd(rng, 8), 8);
  const Rational jitter(rnd(rng, 9) - 4, 32);
  const Point base = midpoint(u, v) + e * jitter;
  for (int attempt = 0; attempt < 40; ++attempt, depth /= 2) {
    Point z = base + outward * depth;
    if (z.x == u.x || z.x == v.x) continue;
    SLDisk trial = d;
    int zi = static_cast<int>(trial.vertices.size());
    trial.vertices.push_back(z);
    trial.triangles.push_back({c.id_at(pos + 1), c.id_at(pos), zi});
    if (shape_ok(trial, shape)) {
      d = std::move(trial);
      return true;
    }
  }
  return false;
}

// Splits a boundary edge at its midpoint, introducing a flat boundary vertex.
bool try_flat_split(SLDisk& d, std::mt19937_64& rng, ShapeClass shape) {
  SLCircle c = boundary_circle(d);
  int pos = rnd(rng, c.size());
  int ui = c.id_at(pos);
  int vi = c.id_at(pos + 1);
  int ti = -1;
  int w = -1;
  for (size_t t = 0; t < d.triangles.size() && ti < 0; ++t) {
    const auto& tri = d.triangles[t];
    for (int k = 0; k < 3; ++k)
      if (tri[k] == ui && tri[(k + 1) % 3] == vi) {
        ti = static_cast<int>(t);
        w = tri[(k + 2) % 3];
        break;
      }
  }
  require_internal(ti >= 0, "boundary edge has no named triangle");
  SLDisk trial = d;
  int mi = static_cast<int>(trial.vertices.size());
  trial.vertices.push_back(midpoint(c.at(pos), c.at(pos + 1)));
  trial.triangles[ti] = {ui, mi, w};
  trial.triangles.push_back({mi, vi, w});
  if (!shape_ok(trial, shape)) return false;
  d = std::move(trial);
  return true;
}

// Replaces a triangle by the fan from an interior point with random barycentric
// weights in 1..4.
bool try_interior_split(SLDisk& d, std::mt19937_64& rng, ShapeClass shape) {
  int ti = rnd(rng, static_cast<int>(d.triangles.size()));
  const auto tri = d.triangles[ti];
  Rational wa(1 + rnd(rng, 4));
  Rational wb(1 + rnd(rng, 4));
  Rational wc(1 + rnd(rng, 4));
  Point z = (d.vertices[tri[0]] * wa + d.vertices[tri[1]] * wb + d.vertices[tri[2]] * wc) *
            (Rational(1) / (wa + wb + wc));
  SLDisk trial = d;
  int zi = static_cast<int>(trial.vertices.size());
  trial.vertices.push_back(z);
  trial.triangles[ti] = {tri[0], tri[1], zi};
  trial.triangles.push_back({tri[1], tri[2], zi});
  trial.triangles.push_back({tri[2], tri[0], zi});
  if (!shape_ok(trial, shape)) return false;
  d = std::move(trial);
  return true;
}

// Subdivides an interior edge at its midpoint (four triangles replace two).
// Spanning edges are preferred so the generated disks are not dominated by them.
bool try_edge_subdivision(SLDisk& d, std::mt19937_64& rng, ShapeClass shape) {
  std::map<Edge, std::vector<int>> owners;
  for (size_t t = 0; t < d.triangles.size(); ++t)
    for (int k = 0; k < 3; ++k)
      owners[make_edge(d.triangles[t][k], d.triangles[t][(k + 1) % 3])].push_back(
          static_cast<int>(t));
  std::vector<Edge> spanning = spanning_simplices(d);
  std::vector<Edge> interior;
  for (const auto& [e, ts] : owners)
    if (ts.size() == 2) interior.push_back(e);
  const std::vector<Edge>& pool =
      (!spanning.empty() && rnd(rng, 2) == 0) ? spanning : interior;
  if (pool.empty()) return false;
  Edge e = pool[rnd(rng, static_cast<int>(pool.size()))];
  int t1 = -1, t2 = -1, p = -1, q = -1;
  for (int t : owners[e]) {
    const auto& tri = d.triangles[t];
    for (int k = 0; k < 3; ++k)
      if (tri[k] == e.first && tri[(k + 1) % 3] == e.second) {
        t1 = t;
        p = tri[(k + 2) % 3];
      } else if (tri[k] == e.second && tri[(k + 1) % 3] == e.first) {
        t2 = t;
        q = tri[(k + 2) % 3];
      }
  }
  require_internal(t1 >= 0 && t2 >= 0, "interior edge without both orientations");
  SLDisk trial = d;
  int mi = static_cast<int>(trial.vertices.size());
  trial.vertices.push_back(midpoint(d.vertices[e.first], d.vertices[e.second]));
  trial.triangles[t1] = {e.first, mi, p};
  trial.triangles[t2] = {mi, e.first, q};
  trial.triangles.push_back({mi, e.second, p});
  trial.triangles.push_back({e.second, mi, q});
  if (!shape_ok(trial, shape)) return false;
  d = std::move(trial);
  return true;
}

}  // namespace

SLDisk generate_disk(unsigned long long seed, int n_interior, int n_boundary,
                     ShapeClass shape) {
  if (n_boundary < 3 || n_interior < 0)
    fail(ErrorCode::GenerationFailed, "need n_boundary >= 3 and n_interior >= 0");
  std::mt19937_64 rng(seed);
  SLDisk d;
  d.vertices = {Point{Rational(0), Rational(0)}, Point{Rational(1), Rational(0)},
                Point{Rational(4 + rnd(rng, 3), 8), Rational(1)}};
  d.triangles = {{0, 1, 2}};
  int misses = 0;
  while (true) {
    int nb = static_cast<int>(boundary_vertices(d).size());
    int ni = static_cast<int>(interior_vertices(d).size());
    if (nb >= n_boundary && ni >= n_interior) break;
    bool grow_boundary = nb < n_boundary && (ni >= n_interior || rnd(rng, 2) == 0);
    bool ok = false;
    if (grow_boundary) {
      switch (shape) {
        case ShapeClass::StrictlyConvex:
          ok = try_ear(d, rng, shape, false);
          break;
        case ShapeClass::Convex:
          ok = rnd(rng, 2) == 0 ? try_flat_split(d, rng, shape)
                                : try_ear(d, rng, shape, false);
          break;
        case ShapeClass::TrV:
          switch (rnd(rng, 4)) {
            case 0:
            case 1:
              ok = try_ear(d, rng, shape, false);
              break;
            case 2:
              ok = try_flat_split(d, rng, shape);
              break;
            default:
              ok = try_ear(d, rng, shape, true);
              break;
          }
          break;
      }
    } else {
      ok = rnd(rng, 2) == 0 ? try_interior_split(d, rng, shape)
                            : try_edge_subdivision(d, rng, shape);
      if (!ok) ok = try_interior_split(d, rng, shape);
    }
    if (ok) {
      misses = 0;
    } else if (++misses > 300) {
      fail(ErrorCode::GenerationFailed, "exhausted growth attempts");
    }
  }
  require_internal(shape_ok(d, shape), "generated disk lost its shape class");
  return d;
}

}  // namespace sldisk
