#include "sldisk/polytope.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "sldisk/errors.hpp"
#include "sldisk/extend.hpp"

namespace sldisk {

namespace {

std::vector<int> subset_triangles(const VolumeSystem& sys) {
  if (sys.triangle_subset) return *sys.triangle_subset;
  std::vector<int> all(sys.disk->triangles.size());
  for (size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  return all;
}

std::set<int> subset_vertices(const VolumeSystem& sys) {
  std::set<int> out;
  for (int t : subset_triangles(sys)) {
    const auto& tri = sys.disk->triangles[t];
    out.insert(tri.begin(), tri.end());
  }
  return out;
}

}  // namespace

SystemVariables system_variables(const VolumeSystem& sys) {
  require_internal(sys.disk != nullptr, "volume system without a disk");
  SystemVariables vars;
  for (int v : subset_vertices(sys)) {
    if (!sys.pinned_x.count(v)) vars.x_vertices.push_back(v);
    if (!sys.pinned_y.count(v)) vars.y_vertices.push_back(v);
  }
  return vars;
}

namespace {

// A coordinate is either one system variable or a constant.
struct Coord {
  int var = -1;
  Rational value;
};

// Product of affine coordinates, kept with its quadratic terms so that the
// cancellation of x_i*y_i inside a volume form is exact and checkable.
struct Quad {
  Rational cst;
  std::map<int, Rational> lin;
  std::map<std::pair<int, int>, Rational> quad;

  void add(const Quad& o, const Rational& scale) {
    cst += scale * o.cst;
    for (const auto& [k, v] : o.lin) lin[k] += scale * v;
    for (const auto& [k, v] : o.quad) quad[k] += scale * v;
  }
};

Quad mul(const Coord& a, const Coord& b) {
  Quad q;
  if (a.var == -1 && b.var == -1) {
    q.cst = a.value * b.value;
  } else if (a.var == -1) {
    q.lin[b.var] = a.value;
  } else if (b.var == -1) {
    q.lin[a.var] = b.value;
  } else {
    auto key = std::minmax(a.var, b.var);
    q.quad[{key.first, key.second}] = 1;
  }
  return q;
}

Quad sub_mul(const Coord& a1, const Coord& a0, const Coord& b1, const Coord& b0) {
  // (a1 - a0) * (b1 - b0)
  Quad q = mul(a1, b1);
  q.add(mul(a1, b0), Rational(-1));
  q.add(mul(a0, b1), Rational(-1));
  q.add(mul(a0, b0), Rational(1));
  return q;
}

}  // namespace

HPolytope build_system(const VolumeSystem& sys) {
  SystemVariables vars = system_variables(sys);
  std::map<std::pair<char, int>, int> index;
  int next = 0;
  for (int v : vars.x_vertices) index[{'x', v}] = next++;
  for (int v : vars.y_vertices) index[{'y', v}] = next++;

  auto coord = [&](char axis, int v) {
    Coord c;
    auto it = index.find({axis, v});
    if (it != index.end()) {
      c.var = it->second;
    } else {
      const auto& pins = (axis == 'x') ? sys.pinned_x : sys.pinned_y;
      auto pit = pins.find(v);
      require_internal(pit != pins.end(), "coordinate neither pinned nor free");
      c.value = pit->second;
    }
    return c;
  };

  HPolytope p;
  p.dimension = vars.count();
  for (int t : subset_triangles(sys)) {
    const auto& tri = sys.disk->triangles[t];
    Coord xa = coord('x', tri[0]), ya = coord('y', tri[0]);
    Coord xb = coord('x', tri[1]), yb = coord('y', tri[1]);
    Coord xc = coord('x', tri[2]), yc = coord('y', tri[2]);
    // (xb - xa)(yc - ya) - (yb - ya)(xc - xa)
    Quad q = sub_mul(xb, xa, yc, ya);
    q.add(sub_mul(yb, ya, xc, xa), Rational(-1));
    for (const auto& [k, v] : q.quad) {
      (void)k;
      if (v != 0) {
        fail(ErrorCode::NonAffineSystem,
             "triangle " + std::to_string(t) + " multiplies two free coordinates");
      }
    }
    AffineForm f;
    f.coeffs.assign(p.dimension, Rational(0));
    for (const auto& [k, v] : q.lin) f.coeffs[k] = v;
    f.constant = q.cst;
    p.forms.push_back(std::move(f));
  }
  return p;
}

VertexMap realize(const VolumeSystem& sys, const std::vector<Rational>& values) {
  SystemVariables vars = system_variables(sys);
  require_internal(static_cast<int>(values.size()) == vars.count(), "value arity mismatch");
  std::map<std::pair<char, int>, Rational> assigned;
  int next = 0;
  for (int v : vars.x_vertices) assigned[{'x', v}] = values[next++];
  for (int v : vars.y_vertices) assigned[{'y', v}] = values[next++];
  auto lookup = [&](char axis, int v) -> std::optional<Rational> {
    auto it = assigned.find({axis, v});
    if (it != assigned.end()) return it->second;
    const auto& pins = (axis == 'x') ? sys.pinned_x : sys.pinned_y;
    auto pit = pins.find(v);
    if (pit != pins.end()) return pit->second;
    return std::nullopt;
  };
  VertexMap out;
  for (size_t v = 0; v < sys.disk->vertices.size(); ++v) {
    auto x = lookup('x', static_cast<int>(v));
    auto y = lookup('y', static_cast<int>(v));
    if (x && y) out[static_cast<int>(v)] = {*x, *y};
  }
  return out;
}

InteriorResult feasible_interior(const HPolytope& p, const std::vector<char>& strict) {
  return feasible_interior(p.forms, strict);
}

LpResult lp_extremum(const HPolytope& p, const std::vector<Rational>& objective, bool maximize) {
  require_internal(static_cast<int>(objective.size()) == p.dimension, "objective arity mismatch");
  return maximize ? lp_maximize(p.forms, objective) : lp_minimize(p.forms, objective);
}

namespace {

// Unique solution of the d x d system coeffs.x = -const over the chosen forms;
// nullopt when singular.
std::optional<std::vector<Rational>> solve_square(const HPolytope& p,
                                                  const std::vector<int>& chosen) {
  int d = p.dimension;
  std::vector<std::vector<Rational>> M(d, std::vector<Rational>(d + 1));
  for (int r = 0; r < d; ++r) {
    const auto& f = p.forms[chosen[r]];
    for (int c = 0; c < d; ++c) M[r][c] = f.coeffs[c];
    M[r][d] = -f.constant;
  }
  for (int col = 0; col < d; ++col) {
    int piv = -1;
    for (int r = col; r < d; ++r) {
      if (M[r][col] != 0) {
        piv = r;
        break;
      }
    }
    if (piv == -1) return std::nullopt;
    std::swap(M[col], M[piv]);
    for (int r = 0; r < d; ++r) {
      if (r == col || M[r][col] == 0) continue;
      Rational f = M[r][col] / M[col][col];
      for (int c = col; c <= d; ++c) M[r][c] -= f * M[col][c];
    }
  }
  std::vector<Rational> x(d);
  for (int r = 0; r < d; ++r) x[r] = M[r][d] / M[r][r];
  return x;
}

bool satisfies_all(const HPolytope& p, const std::vector<Rational>& x) {
  for (const auto& f : p.forms) {
    if (f.eval(x) < 0) return false;
  }
  return true;
}

}  // namespace

std::vector<std::vector<Rational>> vertices(const HPolytope& p) {
  int d = p.dimension;
  if (d == 0) {
    std::vector<Rational> empty;
    return satisfies_all(p, empty) ? std::vector<std::vector<Rational>>{{}}
                                   : std::vector<std::vector<Rational>>{};
  }
  for (int k = 0; k < d; ++k) {
    std::vector<Rational> obj(d, Rational(0));
    obj[k] = 1;
    LpResult hi = lp_maximize(p.forms, obj);
    if (hi.status == LpStatus::Infeasible) return {};
    LpResult lo = lp_minimize(p.forms, obj);
    if (hi.status == LpStatus::Unbounded || lo.status == LpStatus::Unbounded) {
      fail(ErrorCode::UnboundedPolytope,
           "coordinate " + std::to_string(k) + " is unbounded");
    }
  }
  if (d > 4) fail(ErrorCode::DimensionTooHigh, "vertex enumeration limited to dimension 4");

  int m = static_cast<int>(p.forms.size());
  if (m < d) return {};  // bounded full-rank intersections impossible
  std::set<std::vector<Rational>> found;
  std::vector<int> chosen(d);
  // Enumerate ascending index subsets of size d.
  for (int i = 0; i < d; ++i) chosen[i] = i;
  for (;;) {
    auto x = solve_square(p, chosen);
    if (x && satisfies_all(p, *x)) found.insert(*x);
    int i = d - 1;
    while (i >= 0 && chosen[i] == m - d + i) --i;
    if (i < 0) break;
    ++chosen[i];
    for (int j = i + 1; j < d; ++j) chosen[j] = chosen[j - 1] + 1;
  }
  return {found.begin(), found.end()};
}

namespace {

Rational simplex_volume(const std::vector<std::vector<Rational>>& pts) {
  int d = static_cast<int>(pts.size()) - 1;
  std::vector<std::vector<Rational>> M(d, std::vector<Rational>(d));
  for (int r = 0; r < d; ++r) {
    for (int c = 0; c < d; ++c) M[r][c] = pts[r + 1][c] - pts[0][c];
  }
  Rational det = 1;
  for (int col = 0; col < d; ++col) {
    int piv = -1;
    for (int r = col; r < d; ++r) {
      if (M[r][col] != 0) {
        piv = r;
        break;
      }
    }
    if (piv == -1) return Rational(0);
    if (piv != col) {
      std::swap(M[col], M[piv]);
      det = -det;
    }
    det *= M[col][col];
    for (int r = col + 1; r < d; ++r) {
      Rational f = M[r][col] / M[col][col];
      for (int c = col; c < d; ++c) M[r][c] -= f * M[col][c];
    }
  }
  Rational fact = 1;
  for (int k = 2; k <= d; ++k) fact *= k;
  return rational_abs(det) / fact;
}

struct Triangulator {
  const std::vector<std::vector<Rational>>& V;
  const std::vector<std::vector<char>>& active;  // vertex x form incidence
  int form_count;

  // Decomposes the face spanned by W (affine dimension k for genuine faces)
  // into k-simplices fanned from W[0]. Degenerate subsets only ever contribute
  // zero-volume simplices, so over-enumeration is harmless.
  std::vector<std::vector<int>> run(const std::vector<int>& W, int k) const {
    std::vector<std::vector<int>> out;
    if (static_cast<int>(W.size()) < k + 1) return out;
    if (static_cast<int>(W.size()) == k + 1) {
      out.push_back(W);
      return out;
    }
    if (k == 1) {
      for (size_t i = 1; i < W.size(); ++i) out.push_back({W[0], W[i]});
      return out;
    }
    int a = W[0];
    std::set<std::vector<int>> seen;
    for (int j = 0; j < form_count; ++j) {
      std::vector<int> S;
      for (int w : W) {
        if (active[w][j]) S.push_back(w);
      }
      if (static_cast<int>(S.size()) < k || S.size() == W.size()) continue;
      if (std::find(S.begin(), S.end(), a) != S.end()) continue;
      if (!seen.insert(S).second) continue;
      for (auto& sub : run(S, k - 1)) {
        sub.insert(sub.begin(), a);
        out.push_back(std::move(sub));
      }
    }
    return out;
  }
};

}  // namespace

std::vector<Rational> centroid(const HPolytope& p) {
  auto interior = feasible_interior(p.forms, {});
  if (interior.kind != InteriorResult::Kind::StrictPoint) {
    fail(ErrorCode::DegeneratePolytope, "polytope has no strict interior point");
  }
  int d = p.dimension;
  if (d == 0) return {};
  auto V = vertices(p);
  require_internal(!V.empty(), "full-dimensional polytope without vertices");
  std::vector<std::vector<char>> active(V.size(), std::vector<char>(p.forms.size(), 0));
  for (size_t i = 0; i < V.size(); ++i) {
    for (size_t j = 0; j < p.forms.size(); ++j) {
      if (p.forms[j].eval(V[i]) == 0) active[i][j] = 1;
    }
  }
  std::vector<int> all(V.size());
  for (size_t i = 0; i < V.size(); ++i) all[i] = static_cast<int>(i);
  Triangulator tr{V, active, static_cast<int>(p.forms.size())};
  auto simplices = tr.run(all, d);

  Rational total = 0;
  std::vector<Rational> weighted(d, Rational(0));
  for (const auto& s : simplices) {
    std::vector<std::vector<Rational>> pts;
    for (int idx : s) pts.push_back(V[idx]);
    Rational vol = simplex_volume(pts);
    if (vol == 0) continue;
    total += vol;
    for (int c = 0; c < d; ++c) {
      Rational avg = 0;
      for (const auto& q : pts) avg += q[c];
      avg /= static_cast<int>(pts.size());
      weighted[c] += vol * avg;
    }
  }
  require_internal(total > 0, "triangulation of a full-dimensional polytope is empty");
  for (auto& w : weighted) w /= total;
  return weighted;
}

BoundaryHit radial_to_boundary(const HPolytope& p, const std::vector<Rational>& c,
                               const std::vector<Rational>& dir) {
  require_internal(static_cast<int>(c.size()) == p.dimension &&
                       static_cast<int>(dir.size()) == p.dimension,
                   "radial arity mismatch");
  bool found = false;
  Rational best;
  for (size_t k = 0; k < p.forms.size(); ++k) {
    Rational slope = 0;
    for (int i = 0; i < p.dimension; ++i) slope += p.forms[k].coeffs[i] * dir[i];
    if (slope >= 0) continue;
    Rational t = p.forms[k].eval(c) / -slope;
    if (!found || t < best) {
      found = true;
      best = t;
    }
  }
  if (!found) fail(ErrorCode::RayUnbounded, "no form decreases along the ray");
  BoundaryHit hit;
  hit.t = best;
  hit.point.resize(p.dimension);
  for (int i = 0; i < p.dimension; ++i) hit.point[i] = c[i] + best * dir[i];
  for (size_t k = 0; k < p.forms.size(); ++k) {
    if (p.forms[k].eval(hit.point) == 0) hit.active.push_back(static_cast<int>(k));
  }
  return hit;
}

std::vector<Rational> canonical_direction(const std::vector<Rational>& v) {
  Integer den_lcm = 1;
  bool any = false;
  for (const auto& r : v) {
    if (r != 0) any = true;
    den_lcm = boost::multiprecision::lcm(den_lcm, denominator(r));
  }
  require_internal(any, "zero vector has no direction");
  std::vector<Integer> ints;
  ints.reserve(v.size());
  for (const auto& r : v) ints.push_back(numerator(r * Rational(den_lcm)));
  Integer g = 0;
  for (const auto& n : ints) g = boost::multiprecision::gcd(g, n);
  std::vector<Rational> out;
  out.reserve(v.size());
  bool negate = false;
  for (const auto& n : ints) {
    if (n != 0) {
      negate = n < 0;
      break;
    }
  }
  for (const auto& n : ints) {
    Integer q = n / g;
    out.push_back(Rational(negate ? -q : q));
  }
  return out;
}

std::vector<Rational> radial_forward(const HPolytope& p, const std::vector<Rational>& c,
                                     const std::vector<Rational>& direction, const Rational& t) {
  if (t == 0) return c;
  auto hit = radial_to_boundary(p, c, direction);
  std::vector<Rational> out(c.size());
  for (size_t i = 0; i < c.size(); ++i) out[i] = c[i] + t * (hit.point[i] - c[i]);
  return out;
}

RadialPoint radial_inverse(const HPolytope& p, const std::vector<Rational>& c,
                           const std::vector<Rational>& point) {
  require_internal(point.size() == c.size(), "radial arity mismatch");
  std::vector<Rational> diff(point.size());
  bool zero = true;
  for (size_t i = 0; i < point.size(); ++i) {
    diff[i] = point[i] - c[i];
    if (diff[i] != 0) zero = false;
  }
  if (zero) return {{}, Rational(0)};
  auto dir = canonical_direction(diff);
  // canonical_direction picks the sign-normalized representative of the line;
  // restore the orientation of the ray so t stays in [0, 1]
  size_t lead = 0;
  while (diff[lead] == 0) ++lead;
  if (diff[lead] < 0)
    for (auto& x : dir) x = -x;
  auto hit = radial_to_boundary(p, c, dir);
  size_t i = 0;
  while (i < diff.size() && hit.point[i] == c[i]) ++i;
  require_internal(i < diff.size(), "boundary hit collapsed onto the center");
  return {std::move(dir), diff[i] / (hit.point[i] - c[i])};
}

namespace {

struct FiberSystem {
  HPolytope poly;
  std::vector<int> y_order;
  int apex_var = -1;
};

FiberSystem make_fiber_system(const SLDisk& L, const std::vector<int>& movers, int apex,
                              const std::map<int, Rational>& X) {
  std::set<int> moving(movers.begin(), movers.end());
  require_internal(moving.count(apex), "apex is not among the moving vertices");
  VolumeSystem sys;
  sys.disk = &L;
  std::set<int> used;
  for (const auto& tri : L.triangles) used.insert(tri.begin(), tri.end());
  for (int v : used) {
    if (moving.count(v)) {
      auto it = X.find(v);
      require_internal(it != X.end(), "moving vertex without a pinned x");
      sys.pinned_x[v] = it->second;
    } else {
      sys.pinned_x[v] = L.vertices[v].x;
      sys.pinned_y[v] = L.vertices[v].y;
    }
  }
  FiberSystem fs;
  fs.poly = build_system(sys);
  fs.y_order = system_variables(sys).y_vertices;
  for (size_t i = 0; i < fs.y_order.size(); ++i) {
    if (fs.y_order[i] == apex) fs.apex_var = static_cast<int>(i);
  }
  require_internal(fs.apex_var != -1, "apex variable missing from the system");
  return fs;
}

HPolytope substitute_variable(const HPolytope& p, int var, const Rational& value) {
  HPolytope out;
  out.dimension = p.dimension - 1;
  for (const auto& f : p.forms) {
    AffineForm g;
    g.constant = f.constant + f.coeffs[var] * value;
    for (int i = 0; i < p.dimension; ++i) {
      if (i != var) g.coeffs.push_back(f.coeffs[i]);
    }
    out.forms.push_back(std::move(g));
  }
  return out;
}

std::vector<int> unbounded_directions(const HPolytope& p) {
  std::vector<int> out;
  for (int v = 0; v < p.dimension; ++v) {
    std::vector<Rational> obj(p.dimension, Rational(0));
    obj[v] = 1;
    LpResult hi = lp_maximize(p.forms, obj);
    if (hi.status == LpStatus::Infeasible) return {};
    if (hi.status == LpStatus::Unbounded) out.push_back(v);
    LpResult lo = lp_minimize(p.forms, obj);
    if (lo.status == LpStatus::Unbounded) out.push_back(-(v + 1));
  }
  return out;
}

bool strictly_feasible(const HPolytope& p, const std::vector<char>& strict = {}) {
  return feasible_interior(p.forms, strict).kind == InteriorResult::Kind::StrictPoint;
}

}  // namespace

FiberReport fiber_polytopes(const SLDisk& L, const std::vector<int>& movers, int apex,
                            const std::map<int, Rational>& X, const Rational& y_level) {
  FiberSystem fs = make_fiber_system(L, movers, apex, X);
  const Rational& xa = X.at(apex);
  if (!(xa > 0 && xa < 1)) {
    fail(ErrorCode::XNotInProjection, "apex x " + format_rational(xa) + " outside (0,1)");
  }
  if (!strictly_feasible(fs.poly)) {
    fail(ErrorCode::XNotInProjection, "no strictly positive placement over this x-assignment");
  }

  FiberReport rep;
  rep.free_poly = fs.poly;
  rep.y_order = fs.y_order;
  rep.apex = apex;

  rep.above_poly = fs.poly;
  AffineForm level;
  level.coeffs.assign(fs.poly.dimension, Rational(0));
  level.coeffs[fs.apex_var] = 1;
  level.constant = -y_level;
  rep.above_poly.forms.push_back(level);

  rep.at_poly = substitute_variable(fs.poly, fs.apex_var, y_level);

  rep.free_full_dim = strictly_feasible(rep.free_poly);
  rep.above_full_dim = strictly_feasible(rep.above_poly);
  rep.at_full_dim = strictly_feasible(rep.at_poly);
  rep.free_unbounded_dirs = unbounded_directions(rep.free_poly);
  rep.above_unbounded_dirs = unbounded_directions(rep.above_poly);
  rep.at_unbounded_dirs = unbounded_directions(rep.at_poly);
  return rep;
}

ProjectionAgreement projection_equality_check(const SLDisk& L, const std::vector<int>& movers,
                                              int apex, const Rational& y1, const Rational& y2,
                                              const std::vector<std::map<int, Rational>>& samples) {
  ProjectionAgreement agg;
  for (const auto& X : samples) {
    // the apex x-window is part of every membership: all four spaces confine
    // the apex over the open base segment, so an X outside it misses them all
    const Rational& xa = X.at(apex);
    if (!(xa > 0 && xa < 1)) {
      ++agg.samples;
      continue;
    }
    FiberSystem fs = make_fiber_system(L, movers, apex, X);
    bool free_ok = strictly_feasible(fs.poly);
    bool all_true = free_ok;
    bool all_false = !free_ok;
    std::string detail = "free=" + std::to_string(free_ok);
    for (const Rational& y : {y1, y2}) {
      bool at_ok = strictly_feasible(substitute_variable(fs.poly, fs.apex_var, y));
      HPolytope above = fs.poly;
      AffineForm level;
      level.coeffs.assign(fs.poly.dimension, Rational(0));
      level.coeffs[fs.apex_var] = 1;
      level.constant = -y;
      above.forms.push_back(level);
      std::vector<char> weak_last(above.forms.size(), 1);
      weak_last.back() = 0;
      bool above_ok = strictly_feasible(above, weak_last);
      bool strict_ok = strictly_feasible(above);
      for (bool b : {at_ok, above_ok, strict_ok}) {
        all_true = all_true && b;
        all_false = all_false && !b;
      }
      detail += " y=" + format_rational(y) + ":[at=" + std::to_string(at_ok) +
                " above=" + std::to_string(above_ok) + " strict=" + std::to_string(strict_ok) +
                "]";
    }
    if (all_true) ++agg.members;
    if (!all_true && !all_false) {
      agg.disagreements.push_back("sample " + std::to_string(agg.samples) + ": " + detail);
    }
    ++agg.samples;
  }
  return agg;
}

HPolytope star_kernel(const SLDisk& d, const VertexMap& m, int v) {
  VolumeSystem sys;
  sys.disk = &d;
  std::vector<int> incident;
  for (size_t t = 0; t < d.triangles.size(); ++t) {
    const auto& tri = d.triangles[t];
    if (tri[0] == v || tri[1] == v || tri[2] == v) incident.push_back(static_cast<int>(t));
  }
  require_internal(!incident.empty(), "vertex with no incident triangle");
  sys.triangle_subset = incident;
  for (int t : incident) {
    for (int u : d.triangles[t]) {
      if (u == v) continue;
      auto it = m.find(u);
      require_internal(it != m.end(), "map undefined on a star vertex");
      sys.pinned_x[u] = it->second.x;
      sys.pinned_y[u] = it->second.y;
    }
  }
  return build_system(sys);
}

std::vector<VertexMap> sample_embeddings(const SLDisk& d, const VertexMap& f, int n,
                                         unsigned long long seed) {
  VertexMap base = extend(d, f);
  std::vector<VertexMap> out;
  out.reserve(n);
  auto interiors = interior_vertices(d);
  if (interiors.empty()) {
    for (int i = 0; i < n; ++i) out.push_back(base);
    return out;
  }
  std::mt19937_64 rng(seed);
  VertexMap current = base;
  for (int i = 0; i < n; ++i) {
    int v = interiors[rng() % interiors.size()];
    long long dx = 0, dy = 0;
    do {
      dx = static_cast<long long>(rng() % 17) - 8;
      dy = static_cast<long long>(rng() % 17) - 8;
    } while (dx == 0 && dy == 0);
    HPolytope kernel = star_kernel(d, current, v);
    std::vector<Rational> c{current.at(v).x, current.at(v).y};
    auto hit = radial_to_boundary(kernel, c, {Rational(dx), Rational(dy)});
    Rational lambda = Rational(4 + static_cast<long long>(rng() % 9)) / 16;
    current[v] = {c[0] + lambda * (hit.point[0] - c[0]), c[1] + lambda * (hit.point[1] - c[1])};
    require_internal(is_embedding(d, current), "sampled placement failed the oracle");
    out.push_back(current);
  }
  return out;
}

}  // namespace sldisk
