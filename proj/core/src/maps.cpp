#include "sldisk/maps.hpp"

#include <set>

#include "sldisk/errors.hpp"

namespace sldisk {

VertexMap identity_map(const SLDisk& d) {
  VertexMap m;
  for (size_t i = 0; i < d.vertices.size(); ++i) m[static_cast<int>(i)] = d.vertices[i];
  return m;
}

VertexMap restrict_to_boundary(const SLDisk& d, const VertexMap& m) {
  VertexMap out;
  for (int id : boundary_vertices(d)) {
    auto it = m.find(id);
    if (it != m.end()) out[id] = it->second;
  }
  return out;
}

bool is_vertical(const SLDisk& d, const VertexMap& m) {
  for (const auto& [id, p] : m) {
    if (id < 0 || id >= static_cast<int>(d.vertices.size())) return false;
    if (p.x != d.vertices[id].x) return false;
  }
  return true;
}

SLCircle image_circle(const SLCircle& c, const VertexMap& f) {
  SLCircle out;
  out.ids = c.ids;
  for (int id : c.ids) {
    auto it = f.find(id);
    require_internal(it != f.end(), "map undefined on a boundary vertex");
    out.pts.push_back(it->second);
  }
  return out;
}

bool is_simple_polygon(const SLCircle& c) {
  int n = c.size();
  if (n < 3) return false;
  for (int i = 0; i < n; ++i) {
    if (c.at(i) == c.at(i + 1)) return false;
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
      if (adjacent) {
        // Consecutive edges may meet only at the shared endpoint; a tip lying
        // on the other edge means they overlap along a segment.
        Point tip1 = (j == i + 1) ? c.at(i) : c.at(i + 1);
        Point tip2 = (j == i + 1) ? c.at(j + 1) : c.at(j);
        Point mid = (j == i + 1) ? c.at(i + 1) : c.at(0);
        if (point_on_segment(tip1, mid, tip2) || point_on_segment(tip2, mid, tip1)) return false;
      } else {
        if (segments_intersect(c.at(i), c.at(i + 1), c.at(j), c.at(j + 1))) return false;
      }
    }
  }
  return true;
}

namespace {

// dir lies in the closed angular sector swept ccw from u to w (sector < pi).
bool dir_in_sector(const Point& dir, const Point& u, const Point& w) {
  return sign_of(cross(u, dir)) >= 0 && sign_of(cross(dir, w)) >= 0;
}

}  // namespace

bool is_embedding(const SLDisk& d, const VertexMap& m) {
  std::set<int> used;
  for (const auto& tri : d.triangles) used.insert(tri.begin(), tri.end());
  for (int v : used) {
    if (!m.count(v)) return false;
  }
  auto img = [&m](int v) { return m.at(v); };

  int T = static_cast<int>(d.triangles.size());
  for (const auto& tri : d.triangles) {
    if (orientation(img(tri[0]), img(tri[1]), img(tri[2])) <= 0) return false;
  }

  for (int s = 0; s < T; ++s) {
    for (int t = s + 1; t < T; ++t) {
      const auto& a = d.triangles[s];
      const auto& b = d.triangles[t];
      std::vector<int> shared;
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          if (a[i] == b[j]) shared.push_back(a[i]);
      if (shared.size() >= 2) continue;  // edge-sharing pairs separate themselves
      if (shared.size() == 1) {
        int v = shared[0];
        auto sector = [&](const std::array<int, 3>& tri) {
          int k = 0;
          while (tri[k] != v) ++k;
          Point u = img(tri[(k + 1) % 3]) - img(v);
          Point w = img(tri[(k + 2) % 3]) - img(v);
          return std::pair<Point, Point>{u, w};
        };
        auto [u1, w1] = sector(a);
        auto [u2, w2] = sector(b);
        // Positive volumes make each sector strictly less than pi, so the two
        // closed sectors overlap iff an endpoint of one lies in the other.
        if (dir_in_sector(u2, u1, w1) || dir_in_sector(w2, u1, w1) ||
            dir_in_sector(u1, u2, w2)) {
          return false;
        }
      } else {
        for (int i = 0; i < 3; ++i) {
          for (int j = 0; j < 3; ++j) {
            if (segments_intersect(img(a[i]), img(a[(i + 1) % 3]), img(b[j]),
                                   img(b[(j + 1) % 3]))) {
              return false;
            }
          }
        }
        for (int i = 0; i < 3; ++i) {
          if (point_in_closed_triangle(img(a[i]), img(b[0]), img(b[1]), img(b[2]))) return false;
          if (point_in_closed_triangle(img(b[i]), img(a[0]), img(a[1]), img(a[2]))) return false;
        }
      }
    }
  }

  return is_simple_polygon(image_circle(boundary_circle(d), m));
}

namespace {

bool all_collinear(const std::vector<Point>& pts) {
  size_t first_distinct = 1;
  while (first_distinct < pts.size() && pts[first_distinct] == pts[0]) ++first_distinct;
  if (first_distinct >= pts.size()) return true;
  for (size_t i = first_distinct + 1; i < pts.size(); ++i) {
    if (orientation(pts[0], pts[first_distinct], pts[i]) != 0) return false;
  }
  return true;
}

}  // namespace

std::vector<Edge> obstructive_simplices(const SLDisk& d, const VertexMap& v) {
  auto c = boundary_circle(d);
  int n = c.size();
  auto pos_of = [&c, n](int id) {
    for (int i = 0; i < n; ++i)
      if (c.ids[i] == id) return i;
    require_internal(false, "spanning endpoint not on the boundary");
    return -1;
  };
  std::vector<Edge> out;
  for (const Edge& e : spanning_simplices(d)) {
    int pa = pos_of(e.first);
    int pb = pos_of(e.second);
    auto arc_images = [&](int from, int to) {
      std::vector<Point> pts;
      int steps = 0;
      for (int p = from;; p = (p + 1) % n) {
        auto it = v.find(c.ids[p]);
        require_internal(it != v.end(), "map undefined on a boundary vertex");
        pts.push_back(it->second);
        if (p == to) break;
        require_internal(++steps <= n, "arc walk overran the circle");
      }
      return pts;
    };
    auto arc1 = arc_images(pa, pb);
    auto arc2 = arc_images(pb, pa);
    require_internal(arc1.size() >= 3 && arc2.size() >= 3,
                     "spanning simplex with a single-edge arc");
    if (all_collinear(arc1) || all_collinear(arc2)) out.push_back(e);
  }
  return out;
}

SLDisk transpose(const SLDisk& d) {
  SLDisk out;
  out.vertices.reserve(d.vertices.size());
  for (const auto& p : d.vertices) out.vertices.push_back({p.y, p.x});
  out.triangles.reserve(d.triangles.size());
  for (const auto& t : d.triangles) out.triangles.push_back({t[0], t[2], t[1]});
  return out;
}

VertexMap transpose(const VertexMap& m) {
  VertexMap out;
  for (const auto& [id, p] : m) out[id] = {p.y, p.x};
  return out;
}

}  // namespace sldisk
