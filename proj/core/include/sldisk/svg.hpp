#pragma once

#include <string>

#include "sldisk/maps.hpp"

namespace sldisk {

struct SvgOptions {
  bool annotate_roof = false;
  bool annotate_key = false;
  bool annotate_spanning = false;
  bool annotate_obstructive = false;
  const VertexMap* boundary_for_obstructive = nullptr;
};

// Deterministic standalone SVG of the disk (or of its image under m when given).
// Coordinates are exact until print time, then rounded to 6 decimals; the viewBox
// is the exact bounding box plus a 5% margin.
std::string render_svg(const SLDisk& d, const VertexMap* m, const SvgOptions& opt);

}  // namespace sldisk
