#pragma once

#include "sldisk/maps.hpp"

namespace sldisk {

// Normal position for a convex boundary: the chosen natural edge maps exactly onto
// [0,1] x {0} and every other boundary point has x in (0,1) and y > 0.
struct ReducedForm {
  ProjectiveMap map;
  SLDisk disk;                // every vertex transformed by map
  std::vector<int> base_run;  // vertex ids on the base from (0,0) to (1,0), in order
};

// Projective normalization of a convex circle: the natural edge at mu_index goes to
// [0,1] x {0}, the rest of the circle into the open band above it. Throws
// Error(NotConvex) / Error(NotNaturalEdge) on bad input.
ProjectiveMap reduce_circle(const SLCircle& c, int mu_index);

// Applies reduce_circle to the disk's own boundary and transforms every vertex.
// Postcondition is checked exactly before returning.
ReducedForm reduce(const SLDisk& d, int mu_index);

// Line crossing the open segments (t, s1) and (t, s2) while avoiding the convex
// hull; t is either a finite point (on the far side of line(s1, s2) from the hull)
// or a direction at infinity.
Line choose_vanishing_line(const LineMeet& t, const Point& s1, const Point& s2,
                           const std::vector<Point>& hull);

// Vertical map dropping the interior vertices of the base plateau of a reduced
// boundary onto the arc y = -h*x*(1-x); every other boundary vertex is fixed.
// Throws Error(NoPlateau) when the base natural edge has no interior vertex.
VertexMap plateau_collapse(const SLCircle& reduced_boundary, const Rational& h);

// Number of natural edges with more than one 1-simplex (flat runs).
int plateau_count(const SLCircle& c);

}  // namespace sldisk
