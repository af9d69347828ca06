#include "sldisk/disk.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "sldisk/errors.hpp"
#include "sldisk/maps.hpp"

namespace sldisk {

namespace {

std::map<Edge, std::vector<int>> edge_triangles(const SLDisk& d) {
  std::map<Edge, std::vector<int>> out;
  for (size_t t = 0; t < d.triangles.size(); ++t) {
    const auto& tri = d.triangles[t];
    for (int k = 0; k < 3; ++k) {
      out[make_edge(tri[k], tri[(k + 1) % 3])].push_back(static_cast<int>(t));
    }
  }
  return out;
}

std::map<std::pair<int, int>, int> directed_edge_counts(const SLDisk& d) {
  std::map<std::pair<int, int>, int> out;
  for (const auto& tri : d.triangles) {
    for (int k = 0; k < 3; ++k) ++out[{tri[k], tri[(k + 1) % 3]}];
  }
  return out;
}

}  // namespace

ValidationReport validate(const SLDisk& d) {
  ValidationReport rep;
  auto flag = [&rep](const std::string& p) { rep.problems.push_back(p); };

  int n = static_cast<int>(d.vertices.size());
  if (d.triangles.empty()) {
    flag("no triangles");
    return rep;
  }
  std::set<std::set<int>> seen;
  for (size_t t = 0; t < d.triangles.size(); ++t) {
    const auto& tri = d.triangles[t];
    bool in_range = true;
    for (int k = 0; k < 3; ++k) {
      if (tri[k] < 0 || tri[k] >= n) {
        flag("triangle " + std::to_string(t) + " has out-of-range vertex");
        in_range = false;
      }
    }
    if (!in_range) return rep;
    if (tri[0] == tri[1] || tri[1] == tri[2] || tri[0] == tri[2]) {
      flag("triangle " + std::to_string(t) + " repeats a vertex");
      return rep;
    }
    if (!seen.insert(std::set<int>{tri[0], tri[1], tri[2]}).second) {
      flag("duplicate triangle " + std::to_string(t));
    }
  }
  if (!rep.ok()) return rep;

  for (size_t t = 0; t < d.triangles.size(); ++t) {
    const auto& tri = d.triangles[t];
    if (orientation(d.vertices[tri[0]], d.vertices[tri[1]], d.vertices[tri[2]]) <= 0) {
      flag("triangle " + std::to_string(t) + " is not positively oriented");
    }
  }

  auto directed = directed_edge_counts(d);
  for (const auto& [de, count] : directed) {
    if (count > 1) {
      flag("directed edge (" + std::to_string(de.first) + "," + std::to_string(de.second) +
           ") used " + std::to_string(count) + " times");
    }
  }
  auto by_edge = edge_triangles(d);
  int boundary_edge_count = 0;
  for (const auto& [e, tris] : by_edge) {
    if (tris.size() > 2) {
      flag("edge (" + std::to_string(e.first) + "," + std::to_string(e.second) +
           ") in more than two triangles");
    } else if (tris.size() == 1) {
      ++boundary_edge_count;
    }
  }
  if (!rep.ok()) return rep;

  std::set<int> used;
  for (const auto& tri : d.triangles) used.insert(tri.begin(), tri.end());
  if (static_cast<int>(used.size()) != n) flag("unused vertices present");

  // Boundary trace: boundary edges keep the direction induced by their unique
  // triangle; for a disk they form a single simple cycle.
  std::map<int, int> next;
  bool trace_ok = true;
  for (const auto& [de, count] : directed) {
    (void)count;
    if (directed.find({de.second, de.first}) == directed.end()) {
      if (next.count(de.first)) {
        flag("boundary branches at vertex " + std::to_string(de.first));
        trace_ok = false;
      } else {
        next[de.first] = de.second;
      }
    }
  }
  if (trace_ok) {
    if (next.empty()) {
      flag("no boundary edges");
      trace_ok = false;
    } else {
      int start = next.begin()->first;
      int cur = start;
      int steps = 0;
      std::set<int> visited;
      do {
        if (!next.count(cur) || visited.count(cur)) {
          trace_ok = false;
          break;
        }
        visited.insert(cur);
        cur = next[cur];
        ++steps;
      } while (cur != start && steps <= boundary_edge_count + 1);
      if (!trace_ok || cur != start || steps != boundary_edge_count) {
        flag("boundary is not a single cycle");
        trace_ok = false;
      }
    }
  }

  int V = static_cast<int>(used.size());
  int E = static_cast<int>(by_edge.size());
  int F = static_cast<int>(d.triangles.size());
  if (V - E + F != 1) {
    flag("Euler characteristic " + std::to_string(V - E + F) + ", expected 1");
  }

  // Pinched vertices: the triangles around each vertex must form one fan.
  for (int v : used) {
    std::vector<int> star;
    for (size_t t = 0; t < d.triangles.size(); ++t) {
      const auto& tri = d.triangles[t];
      if (tri[0] == v || tri[1] == v || tri[2] == v) star.push_back(static_cast<int>(t));
    }
    std::set<int> reached{star[0]};
    bool grew = true;
    while (grew) {
      grew = false;
      for (int t : star) {
        if (reached.count(t)) continue;
        for (int r : reached) {
          std::set<int> shared;
          for (int k = 0; k < 3; ++k)
            for (int j = 0; j < 3; ++j)
              if (d.triangles[t][k] == d.triangles[r][j]) shared.insert(d.triangles[t][k]);
          if (shared.size() >= 2 && shared.count(v)) {
            reached.insert(t);
            grew = true;
            break;
          }
        }
      }
    }
    if (reached.size() != star.size()) {
      flag("vertex " + std::to_string(v) + " has a disconnected star");
    }
  }
  if (!rep.ok()) return rep;

  if (!is_embedding(d, identity_map(d))) {
    flag("identity placement is not an embedding");
  }
  return rep;
}

void require_valid(const SLDisk& d) {
  auto rep = validate(d);
  if (!rep.ok()) fail(ErrorCode::InvalidDisk, rep.problems.front());
}

SLCircle boundary_circle(const SLDisk& d) {
  auto directed = directed_edge_counts(d);
  std::map<int, int> next;
  for (const auto& [de, count] : directed) {
    (void)count;
    if (directed.find({de.second, de.first}) == directed.end()) next[de.first] = de.second;
  }
  require_internal(!next.empty(), "disk without boundary");
  SLCircle c;
  int start = next.begin()->first;
  int cur = start;
  do {
    c.ids.push_back(cur);
    c.pts.push_back(d.vertices[cur]);
    auto it = next.find(cur);
    require_internal(it != next.end(), "broken boundary cycle");
    cur = it->second;
  } while (cur != start && c.ids.size() <= next.size());
  require_internal(cur == start && c.ids.size() == next.size(), "boundary is not one cycle");
  return c;
}

std::vector<int> boundary_vertices(const SLDisk& d) { return boundary_circle(d).ids; }

std::vector<int> interior_vertices(const SLDisk& d) {
  auto bnd = boundary_vertices(d);
  std::set<int> on_bnd(bnd.begin(), bnd.end());
  std::set<int> used;
  for (const auto& tri : d.triangles) used.insert(tri.begin(), tri.end());
  std::vector<int> out;
  for (int v : used)
    if (!on_bnd.count(v)) out.push_back(v);
  return out;
}

std::vector<std::vector<int>> natural_edges(const SLCircle& c) {
  int n = c.size();
  require_internal(n >= 3, "degenerate circle");
  std::vector<int> corners;
  for (int i = 0; i < n; ++i) {
    if (orientation(c.at(i - 1), c.at(i), c.at(i + 1)) != 0) corners.push_back(i);
  }
  require_internal(!corners.empty(), "flat circle has no corners");
  std::vector<std::vector<int>> runs;
  int k = static_cast<int>(corners.size());
  for (int ci = 0; ci < k; ++ci) {
    int from = corners[ci];
    int to = corners[(ci + 1) % k];
    std::vector<int> run{from};
    int pos = from;
    do {
      pos = (pos + 1) % n;
      run.push_back(pos);
    } while (pos != to);
    runs.push_back(std::move(run));
  }
  return runs;
}

Convexity convexity(const SLCircle& c) {
  int n = c.size();
  bool any_flat = false;
  for (int i = 0; i < n; ++i) {
    int o = orientation(c.at(i - 1), c.at(i), c.at(i + 1));
    if (o < 0) return Convexity::NotConvex;
    if (o == 0) any_flat = true;
  }
  return any_flat ? Convexity::Convex : Convexity::StrictlyConvex;
}

std::vector<Edge> spanning_simplices(const SLDisk& d) {
  auto bnd = boundary_vertices(d);
  std::set<int> on_bnd(bnd.begin(), bnd.end());
  std::vector<Edge> out;
  for (const auto& [e, tris] : edge_triangles(d)) {
    if (tris.size() == 2 && on_bnd.count(e.first) && on_bnd.count(e.second)) out.push_back(e);
  }
  return out;
}

namespace {

// Signs of x-steps along the cycle with zeros dropped; TrV means at most two
// cyclic sign changes remain.
std::vector<int> nonzero_x_signs(const SLCircle& c) {
  std::vector<int> signs;
  int n = c.size();
  for (int i = 0; i < n; ++i) {
    int s = sign_of(c.at(i + 1).x - c.at(i).x);
    if (s != 0) signs.push_back(s);
  }
  return signs;
}

}  // namespace

bool is_TrV(const SLDisk& d) {
  auto c = boundary_circle(d);
  auto signs = nonzero_x_signs(c);
  if (signs.empty()) return false;
  int changes = 0;
  int k = static_cast<int>(signs.size());
  for (int i = 0; i < k; ++i) {
    if (signs[i] != signs[(i + 1) % k]) ++changes;
  }
  return changes <= 2;
}

std::vector<int> roof(const SLDisk& d) {
  if (!is_TrV(d)) fail(ErrorCode::NotTrV, "roof of a non-TrV disk");
  auto c = boundary_circle(d);
  int n = c.size();
  auto sgn = [&c](int i) { return sign_of(c.at(i + 1).x - c.at(i).x); };
  // The roof is everything cyclically after the last ascending edge and before
  // the first one, so vertical walls land on the roof while vertical edges
  // interleaved with the ascent stay on the bottom. "Last" and "first" are
  // read through the zero-dropped sign sequence, which alternates exactly
  // twice here, making both unique.
  int last_plus = -1, first_plus = -1;
  for (int i = 0; i < n; ++i) {
    if (sgn(i) != 1) continue;
    int j = (i + 1) % n;
    while (sgn(j) == 0) j = (j + 1) % n;
    if (sgn(j) == -1) {
      require_internal(last_plus == -1, "ascending block not unique");
      last_plus = i;
    }
    int k = (i - 1 + n) % n;
    while (sgn(k) == 0) k = (k - 1 + n) % n;
    if (sgn(k) == -1) {
      require_internal(first_plus == -1, "descending block not unique");
      first_plus = i;
    }
  }
  require_internal(last_plus != -1 && first_plus != -1, "no ascent/descent junction");
  std::vector<int> out;  // boundary order: right end of the bottom over the top
  int pos = (last_plus + 1) % n;
  out.push_back(c.id_at(pos));
  while (pos != first_plus) {
    pos = (pos + 1) % n;
    out.push_back(c.id_at(pos));
  }
  std::reverse(out.begin(), out.end());
  return out;
}

namespace {

// True when tri (a positively oriented triangle with roof face [l, r], l left of
// r) is a key: the face is non-vertical and the link projects strictly inside it.
bool key_face_holds(const SLDisk& d, int l, int r, int link) {
  const Point& pl = d.vertices[l];
  const Point& pr = d.vertices[r];
  const Point& pa = d.vertices[link];
  if (pl.x == pr.x) return false;  // vertical roof faces are never key faces
  return pl.x < pa.x && pa.x < pr.x;
}

Point foot_on_face(const SLDisk& d, int l, int r, int apex) {
  const Point& pl = d.vertices[l];
  const Point& pr = d.vertices[r];
  const Point& pa = d.vertices[apex];
  Rational t = (pa.x - pl.x) / (pr.x - pl.x);
  return {pa.x, pl.y + (pr.y - pl.y) * t};
}

}  // namespace

KeyFinding find_key_or_twinkey(const SLDisk& d) {
  require_internal(d.triangles.size() > 1, "key scan on a single triangle");
  require_internal(spanning_simplices(d).empty(), "key scan on a non-simple disk");
  auto path = roof(d);
  int q = static_cast<int>(path.size());
  require_internal(q >= 2, "roof too short");

  auto by_edge = edge_triangles(d);
  std::set<int> interior;
  {
    auto iv = interior_vertices(d);
    interior.insert(iv.begin(), iv.end());
  }
  auto face_triangle = [&](int i) {
    auto it = by_edge.find(make_edge(path[i], path[i + 1]));
    require_internal(it != by_edge.end() && it->second.size() == 1, "roof face not on boundary");
    return it->second[0];
  };
  auto link_of = [&](int tri_id, int a, int b) {
    for (int v : d.triangles[tri_id])
      if (v != a && v != b) return v;
    require_internal(false, "triangle without a link vertex");
    return -1;
  };

  int prev_tri = -1, prev_link = -1;
  for (int i = 0; i + 1 < q; ++i) {
    int tri = face_triangle(i);
    int link = link_of(tri, path[i], path[i + 1]);
    // In a simple disk with more than one triangle every roof link is interior.
    require_internal(interior.count(link) > 0, "roof link on the boundary");
    if (key_face_holds(d, path[i], path[i + 1], link)) {
      KeyFinding out;
      out.kind = KeyFinding::Kind::Key;
      out.triangle_ids = {tri};
      out.roof_faces = {make_edge(path[i], path[i + 1])};
      out.apex = link;
      out.foot = foot_on_face(d, path[i], path[i + 1], link);
      return out;
    }
    if (i >= 1 && link == prev_link &&
        d.vertices[path[i]].x == d.vertices[link].x) {
      KeyFinding out;
      out.kind = KeyFinding::Kind::TwinKey;
      out.triangle_ids = {prev_tri, tri};
      out.roof_faces = {make_edge(path[i - 1], path[i]), make_edge(path[i], path[i + 1])};
      out.apex = link;
      out.shared_roof_vertex = path[i];
      out.foot = d.vertices[path[i]];
      return out;
    }
    prev_tri = tri;
    prev_link = link;
  }
  fail(ErrorCode::NoKeyFound, "roof scan found neither key nor twin-key");
}

SubDisk subcomplex(const SLDisk& d, const std::vector<int>& triangle_ids) {
  SubDisk out;
  std::set<int> verts;
  for (int t : triangle_ids) {
    for (int v : d.triangles[t]) verts.insert(v);
  }
  for (int v : verts) {
    out.from_parent[v] = static_cast<int>(out.to_parent.size());
    out.to_parent.push_back(v);
    out.disk.vertices.push_back(d.vertices[v]);
  }
  for (int t : triangle_ids) {
    const auto& tri = d.triangles[t];
    out.disk.triangles.push_back(
        {out.from_parent[tri[0]], out.from_parent[tri[1]], out.from_parent[tri[2]]});
    out.triangle_to_parent.push_back(t);
  }
  return out;
}

std::pair<SubDisk, SubDisk> split_at(const SLDisk& d, const Edge& e) {
  auto by_edge = edge_triangles(d);
  auto it = by_edge.find(make_edge(e.first, e.second));
  if (it == by_edge.end() || it->second.size() != 2) {
    fail(ErrorCode::NotSpanning, "edge is not interior");
  }
  auto bnd = boundary_vertices(d);
  std::set<int> on_bnd(bnd.begin(), bnd.end());
  if (!on_bnd.count(e.first) || !on_bnd.count(e.second)) {
    fail(ErrorCode::NotSpanning, "edge endpoints are not both on the boundary");
  }
  Edge cut = make_edge(e.first, e.second);
  // Flood fill triangle adjacency without crossing the cut edge.
  int T = static_cast<int>(d.triangles.size());
  std::vector<int> comp(T, -1);
  for (int side = 0, seeded = 0; seeded < 2; ++seeded) {
    int seed = it->second[seeded];
    if (comp[seed] != -1) continue;
    std::vector<int> stack{seed};
    comp[seed] = side;
    while (!stack.empty()) {
      int t = stack.back();
      stack.pop_back();
      const auto& tri = d.triangles[t];
      for (int k = 0; k < 3; ++k) {
        Edge te = make_edge(tri[k], tri[(k + 1) % 3]);
        if (te == cut) continue;
        for (int o : by_edge[te]) {
          if (comp[o] == -1) {
            comp[o] = side;
            stack.push_back(o);
          }
        }
      }
    }
    ++side;
  }
  std::vector<int> first_ids, second_ids;
  for (int t = 0; t < T; ++t) {
    require_internal(comp[t] != -1, "triangle unreachable from the cut edge");
    (comp[t] == 0 ? first_ids : second_ids).push_back(t);
  }
  require_internal(!first_ids.empty() && !second_ids.empty(), "cut did not separate");
  return {subcomplex(d, first_ids), subcomplex(d, second_ids)};
}

}  // namespace sldisk
