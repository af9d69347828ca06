#include <sstream>
#include <vector>

#include "sldisk/disk.hpp"
#include "sldisk/errors.hpp"
#include "sldisk/svg.hpp"

namespace sldisk {

namespace {

// Fixed six-decimal rendering of an exact rational (round half away from zero).
std::string fixed6(const Rational& v) {
  const Integer scale(1000000);
  const Integer num = numerator(v) * scale;
  const Integer den = denominator(v);
  Integer q = num / den;  // truncates toward zero
  const Integer r = num - q * den;
  if (2 * abs(r) >= den) q += num < 0 ? -1 : 1;
  const bool neg = q < 0;
  const Integer a = abs(q);
  std::ostringstream out;
  if (neg && a != 0) out << '-';
  const Integer whole = a / scale;
  const Integer rem = a % scale;
  out << whole << '.';
  std::string frac = rem.str();
  out << std::string(6 - frac.size(), '0') << frac;
  return out.str();
}

struct Canvas {
  std::vector<Point> pts;  // y already flipped for screen coordinates
  Rational stroke;

  std::string at(int id) const { return fixed6(pts[id].x) + "," + fixed6(pts[id].y); }
};

void segment(std::ostringstream& out, const Canvas& cv, int a, int b, const std::string& color,
             const Rational& width, bool dashed) {
  out << "  <line x1=\"" << fixed6(cv.pts[a].x) << "\" y1=\"" << fixed6(cv.pts[a].y)
      << "\" x2=\"" << fixed6(cv.pts[b].x) << "\" y2=\"" << fixed6(cv.pts[b].y) << "\" stroke=\""
      << color << "\" stroke-width=\"" << fixed6(width) << "\"";
  if (dashed) out << " stroke-dasharray=\"" << fixed6(width * 3) << "\"";
  out << " stroke-linecap=\"round\"/>\n";
}

}  // namespace

std::string render_svg(const SLDisk& d, const VertexMap* m, const SvgOptions& opt) {
  require_internal(!d.vertices.empty(), "nothing to render");
  Canvas cv;
  cv.pts.reserve(d.vertices.size());
  for (int id = 0; id < static_cast<int>(d.vertices.size()); ++id) {
    Point p = d.vertices[id];
    if (m) {
      auto it = m->find(id);
      require_internal(it != m->end(), "render map must cover every vertex");
      p = it->second;
    }
    cv.pts.push_back(Point{p.x, -p.y});
  }

  Rational minx = cv.pts[0].x, maxx = minx, miny = cv.pts[0].y, maxy = miny;
  for (const Point& p : cv.pts) {
    minx = rational_min(minx, p.x);
    maxx = rational_max(maxx, p.x);
    miny = rational_min(miny, p.y);
    maxy = rational_max(maxy, p.y);
  }
  Rational w = maxx - minx, h = maxy - miny;
  if (w == 0) w = 1;
  if (h == 0) h = 1;
  const Rational mx = w / 20, my = h / 20;
  cv.stroke = rational_max(w, h) / 200;
  const Rational dot = cv.stroke * 2;

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << fixed6(minx - mx) << " "
      << fixed6(miny - my) << " " << fixed6(w + mx * 2) << " " << fixed6(h + my * 2) << "\">\n";

  for (const auto& tri : d.triangles) {
    out << "  <polygon points=\"" << cv.at(tri[0]) << " " << cv.at(tri[1]) << " " << cv.at(tri[2])
        << "\" fill=\"#eef2fa\" stroke=\"#5b7fa6\" stroke-width=\"" << fixed6(cv.stroke)
        << "\" stroke-linejoin=\"round\"/>\n";
  }

  SLCircle c = boundary_circle(d);
  out << "  <polygon points=\"";
  for (int i = 0; i < c.size(); ++i) out << (i ? " " : "") << cv.at(c.ids[i]);
  out << "\" fill=\"none\" stroke=\"#1f2d3d\" stroke-width=\"" << fixed6(cv.stroke * 2)
      << "\" stroke-linejoin=\"round\"/>\n";

  if (opt.annotate_spanning) {
    for (const Edge& e : spanning_simplices(d))
      segment(out, cv, e.first, e.second, "#8e5b2f", cv.stroke * 2, true);
  }

  if (opt.annotate_roof) {
    try {
      const std::vector<int> path = roof(d);
      out << "  <polyline points=\"";
      for (size_t i = 0; i < path.size(); ++i) out << (i ? " " : "") << cv.at(path[i]);
      out << "\" fill=\"none\" stroke=\"#d64541\" stroke-width=\"" << fixed6(cv.stroke * 2)
          << "\" stroke-linejoin=\"round\"/>\n";
    } catch (const Error&) {
      // no roof to draw on a non-TrV disk
    }
  }

  if (opt.annotate_key && d.triangles.size() >= 2) {
    try {
      const KeyFinding key = find_key_or_twinkey(d);
      for (int t : key.triangle_ids) {
        const auto& tri = d.triangles[t];
        out << "  <polygon points=\"" << cv.at(tri[0]) << " " << cv.at(tri[1]) << " "
            << cv.at(tri[2]) << "\" fill=\"#f5b041\" fill-opacity=\"0.7\" stroke=\"none\"/>\n";
      }
      out << "  <circle cx=\"" << fixed6(cv.pts[key.apex].x) << "\" cy=\""
          << fixed6(cv.pts[key.apex].y) << "\" r=\"" << fixed6(dot * 2)
          << "\" fill=\"none\" stroke=\"#b9770e\" stroke-width=\"" << fixed6(cv.stroke) << "\"/>\n";
    } catch (const Error&) {
      // no key to draw
    }
  }

  if (opt.annotate_obstructive && opt.boundary_for_obstructive) {
    try {
      for (const Edge& e : obstructive_simplices(d, *opt.boundary_for_obstructive))
        segment(out, cv, e.first, e.second, "#c0392b", cv.stroke * 3, true);
    } catch (const Error&) {
      // map not eligible for the obstruction test
    }
  }

  for (int id = 0; id < static_cast<int>(cv.pts.size()); ++id) {
    out << "  <circle cx=\"" << fixed6(cv.pts[id].x) << "\" cy=\"" << fixed6(cv.pts[id].y)
        << "\" r=\"" << fixed6(dot) << "\" fill=\"#1f2d3d\"/>\n";
    out << "  <text x=\"" << fixed6(cv.pts[id].x + dot * 2) << "\" y=\""
        << fixed6(cv.pts[id].y - dot) << "\" font-family=\"monospace\" font-size=\""
        << fixed6(cv.stroke * 8) << "\" fill=\"#566573\">" << id << "</text>\n";
  }

  out << "</svg>\n";
  return out.str();
}

}  // namespace sldisk
