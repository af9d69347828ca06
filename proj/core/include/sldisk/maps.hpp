#pragma once

#include <map>

#include "sldisk/disk.hpp"

namespace sldisk {

// Vertex-indexed placement. A boundary map carries exactly the boundary vertices;
// a full map carries every vertex of the disk.
using VertexMap = std::map<int, Point>;

VertexMap identity_map(const SLDisk& d);
VertexMap restrict_to_boundary(const SLDisk& d, const VertexMap& m);

// True when every assigned vertex keeps its x-coordinate.
bool is_vertical(const SLDisk& d, const VertexMap& m);

// Brute-force embedding oracle for a total map: all triangle images positively
// oriented, every pair of triangle images meets exactly in the image of the shared
// face, and the boundary image is a simple polygon. O(p^2) pair checks by design;
// this is the ground truth other routines are verified against.
bool is_embedding(const SLDisk& d, const VertexMap& m);

// Spanning 1-simplices one of whose boundary arcs is flattened by f (the arc's
// image lies in a line). Requires f defined on all boundary vertices and the image
// polygon convex; arcs always have at least two 1-simplices in a valid disk.
std::vector<Edge> obstructive_simplices(const SLDisk& d, const VertexMap& f);

// Swaps the two coordinate axes; reorders each triangle to restore positive
// orientation. transpose(transpose(d)) == d.
SLDisk transpose(const SLDisk& d);
VertexMap transpose(const VertexMap& m);

// Image polygon of the boundary under f (f must cover the boundary vertices).
SLCircle image_circle(const SLCircle& c, const VertexMap& f);

// True when the circle is a simple closed polygon (consecutive points distinct,
// non-adjacent edges disjoint, adjacent edges meeting only at the shared vertex).
bool is_simple_polygon(const SLCircle& c);

}  // namespace sldisk
