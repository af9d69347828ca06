#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sldisk/geometry.hpp"

namespace sldisk {

using Edge = std::pair<int, int>;  // normalized: first < second

inline Edge make_edge(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }

// Simplexwise-linear triangulated disk. Triangles are vertex-index triples in
// positive (counterclockwise) order; the boundary is derived, never stored.
struct SLDisk {
  std::vector<Point> vertices;
  std::vector<std::array<int, 3>> triangles;
};

// Boundary of a disk (or any closed SL polygon), counterclockwise.
// ids[k] indexes into the owning disk; pts[k] is its coordinate.
struct SLCircle {
  std::vector<int> ids;
  std::vector<Point> pts;

  int size() const { return static_cast<int>(pts.size()); }
  const Point& at(int pos) const { return pts[((pos % size()) + size()) % size()]; }
  int id_at(int pos) const { return ids[((pos % size()) + size()) % size()]; }
};

struct ValidationReport {
  std::vector<std::string> problems;
  bool ok() const { return problems.empty(); }
};

// Full structural + geometric validation: positive triangles, interior edges in
// exactly two triangles with opposite induced orientations, boundary edges in one,
// single boundary cycle, Euler characteristic 1, connected vertex links, and the
// identity map passing the brute-force embedding oracle.
ValidationReport validate(const SLDisk& d);

// Throws Error(InvalidDisk) listing the first problems when validation fails.
void require_valid(const SLDisk& d);

// Counterclockwise boundary cycle. Requires valid topology.
SLCircle boundary_circle(const SLDisk& d);

std::vector<int> boundary_vertices(const SLDisk& d);
std::vector<int> interior_vertices(const SLDisk& d);

// Maximal collinear runs of the boundary, each a list of circle positions from one
// corner to the next (inclusive, so a run with k simplices lists k+1 positions).
// Runs are in cyclic order starting at the first corner at or after position 0.
std::vector<std::vector<int>> natural_edges(const SLCircle& c);

enum class Convexity { NotConvex, Convex, StrictlyConvex };

// Local-turn classification of a simple counterclockwise polygon.
Convexity convexity(const SLCircle& c);

// Interior 1-simplices with both endpoints on the boundary.
std::vector<Edge> spanning_simplices(const SLDisk& d);

// True when the boundary splits into one weakly x-ascending and one weakly
// x-descending arc, i.e. every vertical line meets the disk in a connected set.
bool is_TrV(const SLDisk& d);

// Upper boundary of a TrV disk: every 1-simplex no ascending vertical ray from
// which meets the interior. Returned as the left-to-right vertex path.
// Throws Error(NotTrV) when the disk is not TrV.
std::vector<int> roof(const SLDisk& d);

inline std::vector<Edge> roof_edges(const SLDisk& d) {
  std::vector<Edge> out;
  auto path = roof(d);
  for (size_t i = 0; i + 1 < path.size(); ++i) out.emplace_back(path[i], path[i + 1]);
  return out;
}

struct KeyFinding {
  enum class Kind { Key, TwinKey } kind = Kind::Key;
  std::vector<int> triangle_ids;               // one triangle for a key, two for a twin
  std::vector<Edge> roof_faces;                // matching roof 1-simplices, left to right
  int apex = -1;                               // interior link vertex
  Point foot;                                  // target the apex maps onto when removed
  int shared_roof_vertex = -1;                 // twin only: the roof vertex that disappears
};

// Left-to-right scan over roof faces, returning the first key or twin-key (key
// preferred when both apply at a step). Requires a valid, simple TrV disk with
// more than one triangle; a completed scan without a hit is an internal error
// (Error(NoKeyFound)).
KeyFinding find_key_or_twinkey(const SLDisk& d);

struct SubDisk {
  SLDisk disk;
  std::vector<int> to_parent;    // local vertex id -> parent vertex id
  std::map<int, int> from_parent;
  std::vector<int> triangle_to_parent;
};

// Sub-disk spanned by the given parent triangle indices (must itself be a disk).
SubDisk subcomplex(const SLDisk& d, const std::vector<int>& triangle_ids);

// Cuts the disk along a spanning 1-simplex into two disks. The first piece is the
// one containing the lower-indexed adjacent triangle. Throws Error(NotSpanning)
// when e is not a spanning simplex (boundary edges included).
std::pair<SubDisk, SubDisk> split_at(const SLDisk& d, const Edge& e);

enum class ShapeClass { Convex, StrictlyConvex, TrV };

// Deterministic in seed. Grows a start triangle by boundary ears, flat boundary
// splits, interior triangle splits and spanning-edge subdivisions until the vertex
// budget is met, re-validating the shape class at every step. Generated boundaries
// avoid vertical 1-simplices. Throws Error(GenerationFailed) after bounded retries.
SLDisk generate_disk(unsigned long long seed, int n_interior, int n_boundary, ShapeClass shape);

}  // namespace sldisk
