#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sldisk/lp.hpp"
#include "sldisk/maps.hpp"

namespace sldisk {

// H-polytope {x : form(x) >= 0 for every form} in a fixed number of variables.
struct HPolytope {
  int dimension = 0;  // number of variables, not the affine dimension
  std::vector<AffineForm> forms;
};

// Which coordinates of which vertices are pinned; the remaining ones are the
// system variables, ordered all free x's by vertex id then all free y's.
struct VolumeSystem {
  const SLDisk* disk = nullptr;
  std::map<int, Rational> pinned_x;
  std::map<int, Rational> pinned_y;
  std::optional<std::vector<int>> triangle_subset;  // default: all triangles
};

struct SystemVariables {
  std::vector<int> x_vertices;  // vertex ids whose x is a variable, ascending
  std::vector<int> y_vertices;  // vertex ids whose y is a variable, ascending
  int count() const { return static_cast<int>(x_vertices.size() + y_vertices.size()); }
};

SystemVariables system_variables(const VolumeSystem& sys);

// One volume form per triangle, affine in the free coordinates. Throws
// Error(NonAffineSystem) when a triangle multiplies two free coordinates.
HPolytope build_system(const VolumeSystem& sys);

// Assembles a full VertexMap from pinned values plus a variable assignment.
VertexMap realize(const VolumeSystem& sys, const std::vector<Rational>& values);

InteriorResult feasible_interior(const HPolytope& p, const std::vector<char>& strict = {});
LpResult lp_extremum(const HPolytope& p, const std::vector<Rational>& objective, bool maximize);

// All vertices (0-faces), exact and deduplicated. Requires dimension <= 4
// (Error(DimensionTooHigh)) and boundedness (Error(UnboundedPolytope)).
std::vector<std::vector<Rational>> vertices(const HPolytope& p);

// Exact centroid (center of mass) of a full-dimensional bounded polytope, via
// simplicial decomposition fanned from a vertex. Error(DegeneratePolytope) when
// the strict interior is empty.
std::vector<Rational> centroid(const HPolytope& p);

struct BoundaryHit {
  std::vector<Rational> point;
  std::vector<int> active;  // indices of all forms tight at the hit
  Rational t;               // ray parameter of the hit
};

// First boundary point of the ray c + t*dir, t > 0, from an interior point c.
// Error(RayUnbounded) when no form ever becomes tight.
BoundaryHit radial_to_boundary(const HPolytope& p, const std::vector<Rational>& c,
                               const std::vector<Rational>& dir);

// Canonical primitive integer direction: coprime entries, first nonzero positive
// numerator convention (all-integer output).
std::vector<Rational> canonical_direction(const std::vector<Rational>& v);

struct RadialPoint {
  std::vector<Rational> direction;  // coprime integers, oriented along the ray;
                                    // empty when t == 0
  Rational t;                       // 0 at the center, 1 on the boundary
};

// Radial chart around an interior center: forward evaluates c + t*(hit - c) for
// the boundary hit in the given direction; inverse recovers (direction, t).
std::vector<Rational> radial_forward(const HPolytope& p, const std::vector<Rational>& c,
                                     const std::vector<Rational>& direction, const Rational& t);
RadialPoint radial_inverse(const HPolytope& p, const std::vector<Rational>& c,
                           const std::vector<Rational>& point);

struct FiberReport {
  HPolytope free_poly;   // volume forms only, y of the moving vertices free
  HPolytope above_poly;  // plus y_apex >= y_level
  HPolytope at_poly;     // y_apex substituted by y_level (one fewer variable)
  std::vector<int> y_order;      // vertex ids of the y variables of free_poly
  int apex = -1;
  bool free_full_dim = false;
  bool above_full_dim = false;
  bool at_full_dim = false;
  std::vector<int> free_unbounded_dirs;   // +v / -(v+1) encoding per variable v
  std::vector<int> above_unbounded_dirs;
  std::vector<int> at_unbounded_dirs;
};

// Fiber polytopes of the placement space over a pinned x-assignment X: the moving
// vertices are `movers` (the apex plus any interior vertices), everything else is
// pinned at its disk coordinate. Throws Error(XNotInProjection) when X admits no
// strictly positive placement.
FiberReport fiber_polytopes(const SLDisk& L, const std::vector<int>& movers, int apex,
                            const std::map<int, Rational>& X, const Rational& y_level);

struct ProjectionAgreement {
  int samples = 0;
  int members = 0;  // X's inside the projection (all four predicates true)
  std::vector<std::string> disagreements;
  bool ok() const { return disagreements.empty(); }
};

// Membership in the x-projection must not depend on constraining y_apex: for each
// sampled X the four predicates (free, = y, >= y, > y) are evaluated at y1 and y2
// and any disagreement is reported.
ProjectionAgreement projection_equality_check(const SLDisk& L, const std::vector<int>& movers,
                                              int apex, const Rational& y1, const Rational& y2,
                                              const std::vector<std::map<int, Rational>>& samples);

// Feasible region for vertex v alone, all other vertices pinned at m: one form per
// incident triangle, variables (x_v, y_v).
HPolytope star_kernel(const SLDisk& d, const VertexMap& m, int v);

// Deterministic random walk through the space of extensions of f: starting from
// extend(d, f), repeatedly moves one interior vertex a bounded fraction
// (lambda = k/16, k in [4, 12]) toward its star-kernel boundary, emitting each
// step. Every emitted map passes the embedding oracle.
std::vector<VertexMap> sample_embeddings(const SLDisk& d, const VertexMap& f, int n,
                                         unsigned long long seed);

}  // namespace sldisk
