#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "sldisk/errors.hpp"
#include "sldisk/extend.hpp"
#include "sldisk/polytope.hpp"

namespace sldisk {

namespace {

int circle_ccw(const std::vector<Point>& pts) {
  Rational twice_area(0);
  for (size_t i = 0; i < pts.size(); ++i)
    twice_area += cross(pts[i], pts[(i + 1) % pts.size()]);
  return sign_of(twice_area);
}

Rational placed_vol(const VertexMap& m, const std::array<int, 3>& t) {
  return signed_vol(m.at(t[0]), m.at(t[1]), m.at(t[2]));
}

void place(VertexMap& m, int id, const Point& p) {
  auto it = m.find(id);
  if (it == m.end())
    m.emplace(id, p);
  else
    require_internal(it->second == p, "glued placements disagree");
}

// Boundary values of a sub-disk in local ids, read off the parent map.
VertexMap pull_boundary(const SubDisk& sub, const VertexMap& parent_values) {
  VertexMap v;
  for (int lid : boundary_vertices(sub.disk))
    v[lid] = parent_values.at(sub.to_parent[lid]);
  return v;
}

void merge_values(VertexMap& into, const SubDisk& sub, const VertexMap& local_values) {
  for (const auto& [lid, pt] : local_values) place(into, sub.to_parent[lid], pt);
}

int circle_pos(const SLCircle& c, int id) {
  for (int i = 0; i < c.size(); ++i)
    if (c.ids[i] == id) return i;
  fail(ErrorCode::InternalError, "vertex is not on the boundary circle");
}

// Boundary arc from one circle position to another, inclusive, as vertex ids.
std::vector<int> boundary_arc(const SLCircle& c, int from, int to) {
  std::vector<int> out{c.id_at(from)};
  int p = from;
  while (((p - to) % c.size()) != 0) {
    ++p;
    out.push_back(c.id_at(p));
  }
  return out;
}

bool arc_is_flat(const SLCircle& c, const VertexMap& m, const std::vector<int>& arc) {
  for (size_t k = 2; k < arc.size(); ++k)
    if (orientation(m.at(arc[0]), m.at(arc[1]), m.at(arc[k])) != 0) return false;
  return true;
}

// The boundary arc of the obstruction e whose image is collinear (exactly one is).
std::vector<int> flat_arc(const SLDisk& d, const VertexMap& m, const Edge& e) {
  SLCircle c = boundary_circle(d);
  int pa = circle_pos(c, e.first);
  int pb = circle_pos(c, e.second);
  std::vector<int> one = boundary_arc(c, pa, pb);
  std::vector<int> two = boundary_arc(c, pb, pa);
  require_internal(one.size() >= 3 && two.size() >= 3, "obstruction arcs too short");
  bool f1 = arc_is_flat(c, m, one);
  bool f2 = arc_is_flat(c, m, two);
  require_internal(f1 != f2, "expected exactly one flat side");
  return f1 ? one : two;
}

// Triangle indices (in d) of the split piece bounded by the flat arc of e.
std::vector<int> flap_triangles(const SLDisk& d, const VertexMap& m, const Edge& e) {
  auto pieces = split_at(d, e);
  std::vector<int> arc = flat_arc(d, m, e);
  int witness = arc[1];  // strictly inside the arc, so in exactly one piece
  bool in_first = pieces.first.from_parent.count(witness) > 0;
  bool in_second = pieces.second.from_parent.count(witness) > 0;
  require_internal(in_first != in_second, "flat arc witness is on the cut");
  return in_first ? pieces.first.triangle_to_parent : pieces.second.triangle_to_parent;
}

// ---------------------------------------------------------------------------
// Vertical extension

VertexMap ve_worker(const SLDisk& K, const VertexMap& v);

VertexMap ve_split(const SLDisk& K, const VertexMap& v, const Edge& e) {
  auto pieces = split_at(K, e);
  VertexMap out;
  merge_values(out, pieces.first, ve_worker(pieces.first.disk, pull_boundary(pieces.first, v)));
  merge_values(out, pieces.second,
               ve_worker(pieces.second.disk, pull_boundary(pieces.second, v)));
  return out;
}

VertexMap ve_worker(const SLDisk& K, const VertexMap& v) {
  require_internal(validate(K).ok(), "vertical piece is not a valid disk");
  require_internal(is_TrV(K), "vertical piece is not TrV");
  SLCircle c = boundary_circle(K);
  for (int id : c.ids) require_internal(v.count(id) > 0, "vertical piece map not total");
  require_internal(is_vertical(K, v), "vertical piece map moves a vertical line");
  SLCircle img = image_circle(c, v);
  require_internal(is_simple_polygon(img), "vertical piece image is not simple");
  require_internal(convexity(img) != Convexity::NotConvex,
                   "vertical piece image is not convex");
  require_internal(obstructive_simplices(K, v).empty(), "vertical piece map is obstructive");

  VertexMap out;
  if (K.triangles.size() == 1) {
    out = v;
  } else {
    auto spanning = spanning_simplices(K);
    if (!spanning.empty()) {
      out = ve_split(K, v, spanning.front());
    } else {
      const KeyFinding key = find_key_or_twinkey(K);
      const Rational sx = K.vertices[key.apex].x;

      // image target of the apex once its triangles are removed
      Point foot_img;
      if (key.kind == KeyFinding::Kind::Key) {
        Edge face = key.roof_faces.front();
        int l = face.first, r = face.second;
        if (K.vertices[l].x > K.vertices[r].x) std::swap(l, r);
        const Rational span = K.vertices[r].x - K.vertices[l].x;
        require_internal(span > 0, "key face is vertical");
        const Rational lam = (sx - K.vertices[l].x) / span;
        foot_img = v.at(l) + (v.at(r) - v.at(l)) * lam;
      } else {
        foot_img = v.at(key.shared_roof_vertex);
      }
      require_internal(foot_img.x == sx, "apex target is off its vertical line");

      std::vector<int> kept;
      for (int t = 0; t < static_cast<int>(K.triangles.size()); ++t)
        if (std::find(key.triangle_ids.begin(), key.triangle_ids.end(), t) ==
            key.triangle_ids.end())
          kept.push_back(t);
      SubDisk rest = subcomplex(K, kept);
      const int s_local = rest.from_parent.at(key.apex);

      VertexMap vp;
      for (int lid : boundary_vertices(rest.disk)) {
        int pid = rest.to_parent[lid];
        vp[lid] = pid == key.apex ? foot_img : v.at(pid);
      }
      SLCircle cp = boundary_circle(rest.disk);
      SLCircle imgp = image_circle(cp, vp);
      require_internal(is_simple_polygon(imgp) && convexity(imgp) != Convexity::NotConvex,
                       "exposed image is not convex");

      // obstructions all hang off the apex; extremal ones bound the flaps
      std::optional<Edge> sigma_l, sigma_r;
      Rational best_l, best_r;
      for (const Edge& e : obstructive_simplices(rest.disk, vp)) {
        require_internal(e.first == s_local || e.second == s_local,
                         "obstruction avoids the apex");
        const int w = e.first == s_local ? e.second : e.first;
        const Rational& wx = rest.disk.vertices[w].x;
        require_internal(wx != sx, "obstruction endpoint over the apex");
        if (wx < sx) {
          if (!sigma_l || wx < best_l) {
            sigma_l = e;
            best_l = wx;
          }
        } else if (!sigma_r || wx > best_r) {
          sigma_r = e;
          best_r = wx;
        }
      }

      std::vector<char> in_flap(rest.disk.triangles.size(), 0);
      if (sigma_l)
        for (int t : flap_triangles(rest.disk, vp, *sigma_l)) in_flap[t] = 1;
      if (sigma_r)
        for (int t : flap_triangles(rest.disk, vp, *sigma_r)) in_flap[t] = 1;
      std::vector<int> middle;
      for (int t = 0; t < static_cast<int>(rest.disk.triangles.size()); ++t)
        if (!in_flap[t]) middle.push_back(t);
      require_internal(!middle.empty(), "flaps swallowed the apex");

      SubDisk mid = subcomplex(rest.disk, middle);
      VertexMap vmid = pull_boundary(mid, vp);
      VertexMap Vmid = ve_worker(mid.disk, vmid);

      // largest safe dip of the apex below its target, from the placed triangles
      const int s_mid = mid.from_parent.at(s_local);
      Rational eps(1, 2);
      bool constrained = false;
      for (const auto& tri : mid.disk.triangles) {
        if (tri[0] != s_mid && tri[1] != s_mid && tri[2] != s_mid) continue;
        Point a = Vmid.at(tri[0]), b = Vmid.at(tri[1]), cc = Vmid.at(tri[2]);
        const Rational vol0 = signed_vol(a, b, cc);
        Point a1 = a, b1 = b, c1 = cc;
        if (tri[0] == s_mid) a1.y -= 1;
        if (tri[1] == s_mid) b1.y -= 1;
        if (tri[2] == s_mid) c1.y -= 1;
        const Rational vol1 = signed_vol(a1, b1, c1);
        if (vol1 < vol0) {
          const Rational threshold = vol0 / (vol0 - vol1);
          if (!constrained || threshold < eps) {
            eps = threshold;
            constrained = true;
          }
        }
      }
      if (constrained) eps /= 2;
      require_internal(eps > 0, "dip threshold is not positive");
      const Point s_eps{sx, foot_img.y - eps};

      place(out, key.apex, s_eps);
      for (const auto& [lid, pt] : Vmid) {
        int kid = rest.to_parent[mid.to_parent[lid]];
        if (kid == key.apex) continue;
        place(out, kid, pt);
      }

      for (const std::optional<Edge>& sigma : {sigma_l, sigma_r}) {
        if (!sigma) continue;
        SubDisk flap = subcomplex(rest.disk, flap_triangles(rest.disk, vp, *sigma));
        VertexMap vf;
        for (int lid : boundary_vertices(flap.disk)) {
          int rid = flap.to_parent[lid];
          vf[lid] = rid == s_local ? s_eps : vp.at(rid);
        }
        VertexMap Vf = ve_worker(flap.disk, vf);
        for (const auto& [lid, pt] : Vf)
          place(out, rest.to_parent[flap.to_parent[lid]], pt);
      }

      for (int t : key.triangle_ids)
        for (int vid : K.triangles[t])
          if (vid != key.apex) place(out, vid, v.at(vid));
    }
  }

  for (const auto& [id, pt] : v) require_internal(out.at(id) == pt, "boundary moved");
  for (const auto& tri : K.triangles)
    require_internal(placed_vol(out, tri) > 0, "placed triangle is not positive");
  return out;
}

}  // namespace

VertexMap vertical_extend(const SLDisk& d, const VertexMap& v) {
  require_valid(d);
  if (!is_TrV(d)) fail(ErrorCode::NotTrV, "disk is not TrV");
  SLCircle c = boundary_circle(d);
  VertexMap vb = restrict_to_boundary(d, v);
  for (int id : c.ids)
    if (!vb.count(id))
      fail(ErrorCode::NotVertical, "map undefined on boundary vertex " + std::to_string(id));
  if (!is_vertical(d, vb))
    fail(ErrorCode::NotVertical, "map moves a vertex off its vertical line");
  SLCircle img = image_circle(c, vb);
  if (!is_simple_polygon(img))
    fail(ErrorCode::NotBoundaryEmbedding, "boundary image is not a simple polygon");
  if (convexity(img) == Convexity::NotConvex)
    fail(ErrorCode::NotConvexImage, "boundary image is not convex");
  auto obs = obstructive_simplices(d, vb);
  if (!obs.empty())
    fail(ErrorCode::Obstructive,
         "obstructive spanning 1-simplex [" + std::to_string(obs.front().first) + ", " +
             std::to_string(obs.front().second) + "]");

  VertexMap out = ve_worker(d, vb);
  for (int id = 0; id < static_cast<int>(d.vertices.size()); ++id)
    require_internal(out.count(id) > 0, "extension misses a vertex");
  require_internal(is_vertical(d, out), "extension is not vertical");
  for (const auto& [id, pt] : vb)
    require_internal(out.at(id) == pt, "extension moved the boundary");
  require_internal(is_embedding(d, out), "extension failed the embedding oracle");
  return out;
}

Rational evaluation_bound(const SLDisk& d, int u) {
  auto bad = [](const std::string& clause) {
    fail(ErrorCode::PreconditionViolated, clause);
  };
  if (!validate(d).ok()) bad("disk is not valid");
  if (u < 0 || u >= static_cast<int>(d.vertices.size())) bad("query vertex out of range");
  if (!is_TrV(d)) bad("disk is not TrV");
  const std::vector<int> path = roof(d);
  const std::set<int> on_roof(path.begin(), path.end());
  std::vector<int> off;
  for (int id : boundary_vertices(d))
    if (!on_roof.count(id)) off.push_back(id);
  if (off.size() != 1 || off[0] != u)
    bad("boundary off the roof is not exactly the query vertex");
  for (size_t i = 1; i + 1 < path.size(); ++i)
    if (orientation(d.vertices[path[i - 1]], d.vertices[path[i]],
                    d.vertices[path[i + 1]]) > 0)
      bad("roof is not concave");
  const Edge ends = make_edge(path.front(), path.back());
  for (const auto& tri : d.triangles)
    for (int k = 0; k < 3; ++k)
      if (make_edge(tri[k], tri[(k + 1) % 3]) == ends)
        bad("roof endpoints joined by a 1-simplex");

  VolumeSystem sys;
  sys.disk = &d;
  for (int i = 0; i < static_cast<int>(d.vertices.size()); ++i)
    sys.pinned_x[i] = d.vertices[i].x;
  for (int id : path) sys.pinned_y[id] = d.vertices[id].y;
  const HPolytope poly = build_system(sys);
  const SystemVariables vars = system_variables(sys);
  require_internal(vars.x_vertices.empty(), "x coordinates escaped the pin");
  std::vector<Rational> objective(poly.dimension, Rational(0));
  bool found = false;
  for (size_t k = 0; k < vars.y_vertices.size(); ++k)
    if (vars.y_vertices[k] == u) {
      objective[k] = 1;
      found = true;
    }
  require_internal(found, "query vertex is not free");
  const LpResult r = lp_maximize(poly.forms, objective);
  require_internal(r.status == LpStatus::Optimal, "height program has no optimum");

  const Point& A = d.vertices[path.front()];
  const Point& B = d.vertices[path.back()];
  const Rational chord =
      A.y + (B.y - A.y) * (d.vertices[u].x - A.x) / (B.x - A.x);
  require_internal(r.value > chord, "bound does not clear the roof chord");
  return r.value;
}

namespace {

// ---------------------------------------------------------------------------
// General extension

VertexMap x_worker(const SLDisk& d, const VertexMap& f);

VertexMap x_split(const SLDisk& d, const VertexMap& f, const Edge& e) {
  auto pieces = split_at(d, e);
  VertexMap out;
  merge_values(out, pieces.first, x_worker(pieces.first.disk, pull_boundary(pieces.first, f)));
  merge_values(out, pieces.second,
               x_worker(pieces.second.disk, pull_boundary(pieces.second, f)));
  return out;
}

// Strictly convex image: normalize so one boundary edge is the base, detach its
// triangle, extend the rest with the link dropped below the base, then recover
// the link height by a vertical extension and an exact lift threshold.
VertexMap x_core(const SLDisk& d, const VertexMap& f, const SLCircle& c,
                 const SLCircle& img) {
  const ProjectiveMap g = reduce_circle(img, 0);
  VertexMap f0;
  for (const auto& [id, pt] : f) f0[id] = apply_projective(g, pt);
  const int r0 = c.id_at(0);
  const int r1 = c.id_at(1);
  require_internal(f0.at(r0) == Point(Rational(0), Rational(0)) &&
                       f0.at(r1) == Point(Rational(1), Rational(0)),
                   "base edge did not normalize");

  int tau = -1, u = -1;
  for (size_t t = 0; t < d.triangles.size() && tau < 0; ++t)
    for (int k = 0; k < 3; ++k)
      if (d.triangles[t][k] == r0 && d.triangles[t][(k + 1) % 3] == r1) {
        tau = static_cast<int>(t);
        u = d.triangles[t][(k + 2) % 3];
        break;
      }
  require_internal(tau >= 0, "base edge has no triangle");
  {
    auto ints = interior_vertices(d);
    require_internal(std::find(ints.begin(), ints.end(), u) != ints.end(),
                     "base link is not interior");
  }

  std::vector<int> kept;
  for (int t = 0; t < static_cast<int>(d.triangles.size()); ++t)
    if (t != tau) kept.push_back(t);
  SubDisk L = subcomplex(d, kept);
  const int u_local = L.from_parent.at(u);

  VertexMap fp;
  for (int lid : boundary_vertices(L.disk)) {
    int pid = L.to_parent[lid];
    if (pid != u) fp[lid] = f0.at(pid);
  }
  SLCircle cl = boundary_circle(L.disk);
  Rational drop(1, 2);
  bool placed_link = false;
  for (int attempt = 0; attempt < 60 && !placed_link; ++attempt) {
    fp[u_local] = Point{Rational(1, 2), -drop};
    SLCircle il = image_circle(cl, fp);
    if (is_simple_polygon(il) && convexity(il) == Convexity::StrictlyConvex &&
        obstructive_simplices(L.disk, fp).empty())
      placed_link = true;
    else
      drop /= 2;
  }
  require_internal(placed_link, "no admissible drop for the base link");

  const VertexMap mprime = x_worker(L.disk, fp);

  SLDisk Lp;
  Lp.triangles = L.disk.triangles;
  Lp.vertices.resize(L.disk.vertices.size());
  for (const auto& [lid, pt] : mprime) Lp.vertices[lid] = pt;
  require_internal(validate(Lp).ok() && is_TrV(Lp), "realized disk is not TrV");

  VertexMap vv;
  for (int lid : boundary_vertices(Lp))
    vv[lid] = lid == u_local ? Point{Rational(1, 2), Rational(0)} : mprime.at(lid);
  const VertexMap V = ve_worker(Lp, vv);

  Rational delta(1, 2);
  bool constrained = false;
  for (const auto& tri : Lp.triangles) {
    if (tri[0] != u_local && tri[1] != u_local && tri[2] != u_local) continue;
    Point a = V.at(tri[0]), b = V.at(tri[1]), cc = V.at(tri[2]);
    const Rational vol0 = signed_vol(a, b, cc);
    Point a1 = a, b1 = b, c1 = cc;
    if (tri[0] == u_local) a1.y += 1;
    if (tri[1] == u_local) b1.y += 1;
    if (tri[2] == u_local) c1.y += 1;
    const Rational vol1 = signed_vol(a1, b1, c1);
    if (vol1 < vol0) {
      const Rational threshold = vol0 / (vol0 - vol1);
      if (!constrained || threshold < delta) {
        delta = threshold;
        constrained = true;
      }
    }
  }
  if (constrained) delta /= 2;
  require_internal(delta > 0, "lift threshold is not positive");

  VertexMap reduced;
  for (const auto& [lid, pt] : V) reduced[L.to_parent[lid]] = pt;
  reduced[u] = Point{Rational(1, 2), delta};

  const ProjectiveMap ginv = g.inverse();
  VertexMap out;
  for (const auto& [id, pt] : reduced) out[id] = apply_projective(ginv, pt);
  for (const auto& [id, pt] : f)
    require_internal(out.at(id) == pt, "normalization round trip moved the boundary");
  return out;
}

// Image with a flat vertex: normalize the flat run onto the base, bend the base
// plateau strictly below, extend, then lift the plateau back by a vertical
// extension of the realized disk.
VertexMap x_plateau(const SLDisk& d, const VertexMap& f, const SLCircle& c,
                    const SLCircle& img) {
  auto runs = natural_edges(img);
  int mu = -1;
  for (size_t i = 0; i < runs.size() && mu < 0; ++i)
    if (runs[i].size() >= 3) mu = static_cast<int>(i);
  require_internal(mu >= 0, "no flat run on a non-strict image");

  const ProjectiveMap g = reduce_circle(img, mu);
  VertexMap f0;
  for (const auto& [id, pt] : f) f0[id] = apply_projective(g, pt);
  SLCircle rc = image_circle(c, f0);

  Rational h(1, 4);
  VertexMap f1;
  bool collapsed = false;
  for (int attempt = 0; attempt < 60 && !collapsed; ++attempt) {
    f1 = plateau_collapse(rc, h);
    SLCircle i1 = image_circle(c, f1);
    if (is_simple_polygon(i1) && convexity(i1) != Convexity::NotConvex &&
        circle_ccw(i1.pts) > 0 && obstructive_simplices(d, f1).empty() &&
        plateau_count(i1) < plateau_count(rc))
      collapsed = true;
    else
      h /= 2;
  }
  require_internal(collapsed, "no admissible collapse depth");

  const VertexMap m1 = x_worker(d, f1);

  SLDisk K1;
  K1.triangles = d.triangles;
  K1.vertices.resize(d.vertices.size());
  for (const auto& [id, pt] : m1) K1.vertices[id] = pt;
  require_internal(validate(K1).ok() && is_TrV(K1), "realized disk is not TrV");

  VertexMap vinv;
  for (int id : c.ids) vinv[id] = f0.at(id);
  const VertexMap V = ve_worker(K1, vinv);

  const ProjectiveMap ginv = g.inverse();
  VertexMap out;
  for (const auto& [id, pt] : V) out[id] = apply_projective(ginv, pt);
  for (const auto& [id, pt] : f)
    require_internal(out.at(id) == pt, "normalization round trip moved the boundary");
  return out;
}

VertexMap x_worker(const SLDisk& d, const VertexMap& f) {
  require_internal(validate(d).ok(), "extension piece is not a valid disk");
  SLCircle c = boundary_circle(d);
  for (int id : c.ids) require_internal(f.count(id) > 0, "extension piece map not total");
  SLCircle img = image_circle(c, f);
  require_internal(is_simple_polygon(img), "extension piece image is not simple");
  const Convexity cls = convexity(img);
  require_internal(cls != Convexity::NotConvex, "extension piece image is not convex");
  require_internal(obstructive_simplices(d, f).empty(), "extension piece is obstructive");

  if (d.triangles.size() == 1) return f;
  auto spanning = spanning_simplices(d);
  if (!spanning.empty()) return x_split(d, f, spanning.front());
  if (cls == Convexity::StrictlyConvex) return x_core(d, f, c, img);
  return x_plateau(d, f, c, img);
}

}  // namespace

VertexMap extend(const SLDisk& d, const VertexMap& f) {
  require_valid(d);
  SLCircle c = boundary_circle(d);
  VertexMap fb = restrict_to_boundary(d, f);
  for (int id : c.ids)
    if (!fb.count(id))
      fail(ErrorCode::NotBoundaryEmbedding,
           "map undefined on boundary vertex " + std::to_string(id));
  SLCircle img = image_circle(c, fb);
  if (!is_simple_polygon(img))
    fail(ErrorCode::NotBoundaryEmbedding, "boundary image is not a simple polygon");
  if (circle_ccw(img.pts) < 0)
    fail(ErrorCode::NotConvexImage, "image polygon is clockwise");
  if (convexity(img) == Convexity::NotConvex)
    fail(ErrorCode::NotConvexImage, "boundary image is not convex");
  auto obs = obstructive_simplices(d, fb);
  if (!obs.empty())
    fail(ErrorCode::Obstructive,
         "obstructive spanning 1-simplex [" + std::to_string(obs.front().first) + ", " +
             std::to_string(obs.front().second) + "]");

  VertexMap out = x_worker(d, fb);
  for (int id = 0; id < static_cast<int>(d.vertices.size()); ++id)
    require_internal(out.count(id) > 0, "extension misses a vertex");
  for (const auto& [id, pt] : fb)
    require_internal(out.at(id) == pt, "extension moved the boundary");
  require_internal(is_embedding(d, out), "extension failed the embedding oracle");
  return out;
}

}  // namespace sldisk
