#pragma once

#include "sldisk/maps.hpp"
#include "sldisk/reduce.hpp"

namespace sldisk {

// Extends a vertical boundary embedding with convex image over a TrV disk, by
// spanning-simplex splits and key / twin-key removal with an exact dip threshold.
// Preconditions (checked): d valid and TrV, v vertical on the boundary, image a
// simple convex polygon, no obstructive spanning simplices. The result agrees with
// v on the boundary, is vertical, and passes the embedding oracle.
VertexMap vertical_extend(const SLDisk& d, const VertexMap& v);

// Supremum of y(u) over vertical embeddings fixing the roof, for a TrV disk whose
// roof is concave, whose boundary off the roof is the single vertex u, and whose
// roof endpoints are not joined by a 1-simplex. Throws Error(PreconditionViolated)
// naming the violated clause. The bound is strictly above the chord joining the
// roof endpoints (checked).
Rational evaluation_bound(const SLDisk& d, int u);

// Extends a boundary embedding with convex image and no obstructive spanning
// simplices over an arbitrary valid disk. Strictly convex images recurse through a
// projective normalization; images with flat vertices go through plateau collapse
// and a vertical extension of the inverse collapse.
VertexMap extend(const SLDisk& d, const VertexMap& f);

}  // namespace sldisk
