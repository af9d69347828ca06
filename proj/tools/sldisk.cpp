#include <chrono>
#include <filesystem>
#include <iostream>
#include <map>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sldisk/errors.hpp"
#include "sldisk/extend.hpp"
#include "sldisk/io.hpp"
#include "sldisk/polytope.hpp"
#include "sldisk/reduce.hpp"
#include "sldisk/svg.hpp"

namespace fs = std::filesystem;
using namespace sldisk;

namespace {

std::string fmt_point(const Point& p) {
  return "(" + format_rational(p.x) + ", " + format_rational(p.y) + ")";
}

std::string fmt_edge(const Edge& e) {
  return "[" + std::to_string(e.first) + ", " + std::to_string(e.second) + "]";
}

SLDisk load_disk(const std::string& path) {
  std::string text = read_file(path);
  std::cout << "input: " << path << " digest=" << digest(text) << "\n";
  return parse_disk(text);
}

VertexMap load_map(const std::string& path) {
  std::string text = read_file(path);
  std::cout << "input: " << path << " digest=" << digest(text) << "\n";
  return parse_map(text);
}

void emit(const std::string& path, const std::string& content) {
  write_file(path, content);
  std::cout << "output: " << path << " digest=" << digest(content) << "\n";
}

// Boundary-map gate shared by the extension drivers: classification only, the
// library re-raises the matching error itself.
const char* gate_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::NotTrV:
    case ErrorCode::NotVertical:
    case ErrorCode::NotConvexImage:
    case ErrorCode::NotBoundaryEmbedding:
    case ErrorCode::Obstructive:
    case ErrorCode::NotConvex:
    case ErrorCode::PreconditionViolated:
      return "gated-out";
    default:
      return "failed";
  }
}

int cmd_check(const std::string& path) {
  SLDisk d = parse_disk(read_file(path));
  std::cout << "input: " << path << " digest=" << digest(read_file(path)) << "\n";
  ValidationReport rep = validate(d);
  if (!rep.ok()) {
    for (const auto& p : rep.problems) std::cout << "validate: fail " << p << "\n";
    std::cout << "result: invalid\n";
    return 2;
  }
  std::cout << "validate: pass\n";
  SLCircle c = boundary_circle(d);
  std::cout << "vertices: " << d.vertices.size() << " triangles: " << d.triangles.size()
            << " boundary: " << c.size() << "\n";
  switch (convexity(c)) {
    case Convexity::StrictlyConvex: std::cout << "convexity: strictly-convex\n"; break;
    case Convexity::Convex: std::cout << "convexity: convex\n"; break;
    case Convexity::NotConvex: std::cout << "convexity: not-convex\n"; break;
  }
  std::cout << "natural-edges: " << natural_edges(c).size() << "\n";
  auto spanning = spanning_simplices(d);
  std::cout << "simple: " << (spanning.empty() ? "yes" : "no") << "\n";
  if (!spanning.empty()) {
    std::cout << "spanning:";
    for (const Edge& e : spanning) std::cout << " " << fmt_edge(e);
    std::cout << "\n";
  }
  const bool trv = is_TrV(d);
  std::cout << "trv: " << (trv ? "yes" : "no") << "\n";
  if (trv) {
    std::cout << "roof:";
    for (int id : roof(d)) std::cout << " " << id;
    std::cout << "\n";
    if (spanning.empty() && d.triangles.size() > 1) {
      KeyFinding k = find_key_or_twinkey(d);
      std::cout << "key: kind=" << (k.kind == KeyFinding::Kind::Key ? "key" : "twin-key")
                << " triangles=";
      for (size_t i = 0; i < k.triangle_ids.size(); ++i)
        std::cout << (i ? "," : "") << k.triangle_ids[i];
      std::cout << " apex=" << k.apex << " foot=" << fmt_point(k.foot) << "\n";
    }
  }
  std::cout << "result: ok\n";
  return 0;
}

int extend_one(const SLDisk& d, const VertexMap& f, bool vertical, const std::string& out,
               const std::string& svg) {
  VertexMap full = vertical ? vertical_extend(d, f) : extend(d, f);
  if (!is_embedding(d, full)) fail(ErrorCode::InternalError, "output failed the oracle recheck");
  std::cout << "oracle: pass\n";
  for (const auto& [id, pt] : restrict_to_boundary(d, f))
    if (!(full.at(id) == pt)) fail(ErrorCode::InternalError, "boundary image moved");
  std::cout << "boundary: exact\n";
  if (!out.empty()) emit(out, write_map(full));
  if (!svg.empty()) {
    SvgOptions opt;
    emit(svg + ".before.svg", render_svg(d, nullptr, opt));
    emit(svg + ".after.svg", render_svg(d, &full, opt));
  }
  return 0;
}

int cmd_extend(const std::string& disk_path, const std::string& map_path, bool vertical,
               const std::string& out, const std::string& svg, const std::string& corpus) {
  if (corpus.empty()) {
    SLDisk d = load_disk(disk_path);
    VertexMap f = load_map(map_path);
    int rc = extend_one(d, f, vertical, out, svg);
    std::cout << "result: extended\n";
    return rc;
  }
  std::vector<fs::path> disks;
  for (const auto& entry : fs::directory_iterator(corpus)) {
    std::string name = entry.path().filename().string();
    if (name.size() > 10 && name.substr(name.size() - 10) == ".disk.json") disks.push_back(entry.path());
  }
  std::sort(disks.begin(), disks.end());
  int extended = 0, gated = 0, failed = 0;
  for (const fs::path& p : disks) {
    std::string stem = p.string().substr(0, p.string().size() - 10);
    std::string map_file = stem + ".map.json";
    std::string label = p.filename().string();
    try {
      SLDisk d = parse_disk(read_file(p.string()));
      VertexMap f = parse_map(read_file(map_file));
      VertexMap full = vertical ? vertical_extend(d, f) : extend(d, f);
      if (!is_embedding(d, full)) fail(ErrorCode::InternalError, "output failed the oracle recheck");
      if (!out.empty())
        write_file((fs::path(out) / (fs::path(stem).filename().string() + ".out.map.json")).string(),
                   write_map(full));
      std::cout << label << ": extended\n";
      ++extended;
    } catch (const Error& e) {
      const char* cls = gate_name(e.code());
      std::cout << label << ": " << cls << " (" << e.what() << ")\n";
      if (std::string(cls) == "failed") ++failed; else ++gated;
    }
  }
  std::cout << "aggregate: extended=" << extended << " gated-out=" << gated
            << " failed=" << failed << " total=" << disks.size() << "\n";
  return failed == 0 ? 0 : 3;
}

int cmd_reduce(const std::string& disk_path, int edge, const std::string& out,
               const std::string& svg) {
  SLDisk d = load_disk(disk_path);
  ReducedForm rf = reduce(d, edge);
  std::cout << "map-det: " << format_rational(rf.map.det()) << "\n";
  std::cout << "base-run:";
  for (int id : rf.base_run) std::cout << " " << id;
  std::cout << "\n";
  const ProjectiveMap gi = rf.map.inverse();
  for (size_t i = 0; i < d.vertices.size(); ++i)
    if (!(apply_projective(gi, rf.disk.vertices[i]) == d.vertices[i]))
      fail(ErrorCode::InternalError, "projective round trip moved vertex " + std::to_string(i));
  std::cout << "round-trip: exact\n";
  if (!out.empty()) emit(out, write_reduced(rf));
  if (!svg.empty()) {
    SvgOptions opt;
    emit(svg, render_svg(rf.disk, nullptr, opt));
  }
  std::cout << "result: reduced\n";
  return 0;
}

int cmd_check_obstructive(const std::string& disk_path, const std::string& map_path) {
  SLDisk d = load_disk(disk_path);
  VertexMap f = load_map(map_path);
  auto obs = obstructive_simplices(d, f);
  if (obs.empty()) {
    std::cout << "obstructive: none\nresult: clear\n";
    return 0;
  }
  std::cout << "obstructive:";
  for (const Edge& e : obs) std::cout << " " << fmt_edge(e);
  std::cout << "\nresult: obstructive\n";
  return 2;
}

// The disk must carry the unit base [0,1]x{0} as a single-simplex natural edge;
// the triangle over the base is removed and the rest fibered at the given x.
int cmd_fiber(const std::string& disk_path, const std::string& x_text,
              const std::string& level_text) {
  SLDisk d = load_disk(disk_path);
  require_valid(d);
  SLCircle c = boundary_circle(d);
  int pos0 = -1;
  for (int i = 0; i < c.size(); ++i)
    if (c.at(i) == Point{Rational(0), Rational(0)} && c.at(i + 1) == Point{Rational(1), Rational(0)})
      pos0 = i;
  if (pos0 < 0)
    fail(ErrorCode::PreconditionViolated, "boundary does not contain the base segment");
  const int r0 = c.id_at(pos0), r1 = c.id_at(pos0 + 1);
  int tau = -1, apex = -1;
  for (size_t t = 0; t < d.triangles.size() && tau < 0; ++t)
    for (int k = 0; k < 3; ++k)
      if (d.triangles[t][k] == r0 && d.triangles[t][(k + 1) % 3] == r1) {
        tau = static_cast<int>(t);
        apex = d.triangles[t][(k + 2) % 3];
        break;
      }
  require_internal(tau >= 0, "base segment has no triangle");
  std::vector<int> kept;
  for (int t = 0; t < static_cast<int>(d.triangles.size()); ++t)
    if (t != tau) kept.push_back(t);
  SubDisk L = subcomplex(d, kept);
  const int apex_local = L.from_parent.at(apex);
  std::vector<int> movers{apex_local};
  for (int v : interior_vertices(L.disk)) movers.push_back(v);
  std::map<int, Rational> X;
  for (int v : movers) X[v] = L.disk.vertices[v].x;
  X[apex_local] = parse_rational(x_text);
  const Rational level = parse_rational(level_text);

  FiberReport fr = fiber_polytopes(L.disk, movers, apex_local, X, level);
  std::cout << "movers: " << movers.size() << "\n";
  std::cout << "free: dim=" << fr.free_poly.dimension
            << " full-dim=" << (fr.free_full_dim ? "yes" : "no") << " unbounded-dirs=";
  for (size_t i = 0; i < fr.free_unbounded_dirs.size(); ++i)
    std::cout << (i ? "," : "") << fr.free_unbounded_dirs[i];
  if (fr.free_unbounded_dirs.empty()) std::cout << "none";
  std::cout << "\n";
  std::cout << "above: dim=" << fr.above_poly.dimension
            << " full-dim=" << (fr.above_full_dim ? "yes" : "no")
            << " bounded=" << (fr.above_unbounded_dirs.empty() ? "yes" : "no") << "\n";
  std::cout << "at: dim=" << fr.at_poly.dimension
            << " full-dim=" << (fr.at_full_dim ? "yes" : "no")
            << " bounded=" << (fr.at_unbounded_dirs.empty() ? "yes" : "no") << "\n";
  if (fr.at_poly.dimension <= 4 && fr.at_full_dim && fr.at_unbounded_dirs.empty()) {
    auto verts = vertices(fr.at_poly);
    std::cout << "at-vertices:";
    for (const auto& v : verts) {
      std::cout << " (";
      for (size_t i = 0; i < v.size(); ++i) std::cout << (i ? "," : "") << format_rational(v[i]);
      std::cout << ")";
    }
    std::cout << "\n";
  }
  std::cout << "result: ok\n";
  return 0;
}

int cmd_lemma6(const std::string& disk_path, int samples, unsigned long long seed) {
  SLDisk d = load_disk(disk_path);
  require_valid(d);
  ReducedForm rf = reduce(d, 0);
  const SLDisk& K = rf.disk;
  SLCircle c = boundary_circle(K);
  const int r0 = rf.base_run.front();
  const int r1 = rf.base_run[1];
  int tau = -1, apex = -1;
  for (size_t t = 0; t < K.triangles.size() && tau < 0; ++t)
    for (int k = 0; k < 3; ++k)
      if (K.triangles[t][k] == r0 && K.triangles[t][(k + 1) % 3] == r1) {
        tau = static_cast<int>(t);
        apex = K.triangles[t][(k + 2) % 3];
        break;
      }
  require_internal(tau >= 0, "base run has no triangle");
  {
    auto ints = interior_vertices(K);
    if (std::find(ints.begin(), ints.end(), apex) == ints.end())
      fail(ErrorCode::PreconditionViolated, "base link is not an interior vertex");
  }
  std::vector<int> kept;
  for (int t = 0; t < static_cast<int>(K.triangles.size()); ++t)
    if (t != tau) kept.push_back(t);
  SubDisk L = subcomplex(K, kept);
  const int apex_local = L.from_parent.at(apex);
  std::vector<int> movers{apex_local};
  for (int v : interior_vertices(L.disk)) movers.push_back(v);
  const int m = static_cast<int>(movers.size());

  std::map<int, Rational> X0;
  for (int v : movers) X0[v] = L.disk.vertices[v].x;
  FiberReport fr = fiber_polytopes(L.disk, movers, apex_local, X0, Rational(-1, 2));
  bool dims_ok = fr.free_poly.dimension == m && fr.above_poly.dimension == m &&
                 fr.at_poly.dimension == m - 1 && fr.free_full_dim && fr.above_full_dim;
  bool bounded_ok = !fr.free_unbounded_dirs.empty() && fr.above_unbounded_dirs.empty() &&
                    fr.at_unbounded_dirs.empty();
  std::cout << "dims: (" << fr.free_poly.dimension << ", " << fr.above_poly.dimension << ", "
            << fr.at_poly.dimension << ") expect (" << m << ", " << m << ", " << m - 1
            << ") -> " << (dims_ok ? "pass" : "fail") << "\n";
  std::cout << "bounded-except-free: " << (bounded_ok ? "pass" : "fail") << "\n";

  std::mt19937_64 rng(seed);
  std::vector<std::map<int, Rational>> xs;
  for (int s = 0; s < samples; ++s) {
    std::map<int, Rational> X;
    for (int v : movers)
      X[v] = L.disk.vertices[v].x + Rational(static_cast<long>(rng() % 2001) - 1000, 4000);
    xs.push_back(std::move(X));
  }
  ProjectionAgreement agg =
      projection_equality_check(L.disk, movers, apex_local, Rational(0), Rational(-1), xs);
  std::cout << "projection: samples=" << agg.samples << " members=" << agg.members
            << " disagreements=" << agg.disagreements.size() << " -> "
            << (agg.ok() ? "pass" : "fail") << "\n";
  for (const auto& s : agg.disagreements) std::cout << "disagree: " << s << "\n";
  const bool all = dims_ok && bounded_ok && agg.ok();
  std::cout << "result: " << (all ? "ok" : "violations") << "\n";
  return all ? 0 : 3;
}

int cmd_sample(const std::string& disk_path, const std::string& map_path, int n,
               unsigned long long seed, const std::string& out) {
  SLDisk d = load_disk(disk_path);
  VertexMap f = load_map(map_path);
  auto walks = sample_embeddings(d, f, n, seed);
  fs::create_directories(out);
  for (size_t i = 0; i < walks.size(); ++i) {
    char name[32];
    std::snprintf(name, sizeof(name), "sample_%03zu.map.json", i);
    emit((fs::path(out) / name).string(), write_map(walks[i]));
  }
  std::cout << "result: " << walks.size() << " samples\n";
  return 0;
}

int cmd_render(const std::string& disk_path, const std::string& map_path, const std::string& out,
               bool roof_f, bool key_f, bool spanning_f, bool obstructive_f) {
  SLDisk d = load_disk(disk_path);
  VertexMap f;
  if (!map_path.empty()) f = load_map(map_path);
  SvgOptions opt;
  opt.annotate_roof = roof_f;
  opt.annotate_key = key_f;
  opt.annotate_spanning = spanning_f;
  opt.annotate_obstructive = obstructive_f;
  if (obstructive_f) {
    if (map_path.empty())
      fail(ErrorCode::PreconditionViolated, "obstructive annotation needs a boundary map");
    opt.boundary_for_obstructive = &f;
  }
  const VertexMap* image = (!map_path.empty() && !obstructive_f) ? &f : nullptr;
  std::string svg = render_svg(d, image, opt);
  if (out.empty())
    std::cout << svg;
  else
    emit(out, svg);
  return 0;
}

int cmd_generate(unsigned long long seed, int interior, int boundary, const std::string& shape,
                 const std::string& out) {
  ShapeClass sc;
  if (shape == "convex") sc = ShapeClass::Convex;
  else if (shape == "strictly-convex") sc = ShapeClass::StrictlyConvex;
  else if (shape == "trv") sc = ShapeClass::TrV;
  else fail(ErrorCode::ParseError, "shape must be convex, strictly-convex or trv");
  SLDisk d = generate_disk(seed, interior, boundary, sc);
  std::string text = write_disk(d);
  if (out.empty())
    std::cout << text;
  else
    emit(out, text);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact simplexwise-linear disk toolkit"};
  app.require_subcommand(1);

  std::string disk_path, map_path, out, svg, corpus, x_text = "1/2", level_text = "-1/2";
  std::string shape = "trv";
  int edge = 0, n = 10, interior = 2, boundary = 6, samples = 100;
  unsigned long long seed = 1;
  bool roof_f = false, key_f = false, spanning_f = false, obstructive_f = false;

  auto* c_check = app.add_subcommand("check", "validate and classify a disk");
  c_check->add_option("disk", disk_path)->required();

  auto* c_reduce = app.add_subcommand("reduce", "normalize a convex disk over a natural edge");
  c_reduce->add_option("disk", disk_path)->required();
  c_reduce->add_option("--edge", edge, "natural edge index");
  c_reduce->add_option("--out", out);
  c_reduce->add_option("--svg", svg);

  auto* c_extend = app.add_subcommand("extend", "extend a boundary embedding over the disk");
  c_extend->add_option("disk", disk_path);
  c_extend->add_option("map", map_path);
  c_extend->add_option("--out", out);
  c_extend->add_option("--svg", svg);
  c_extend->add_option("--corpus", corpus, "directory of *.disk.json with matching *.map.json");
  bool vertical_flag = false;
  c_extend->add_flag("--vertical", vertical_flag, "use the vertical engine");

  auto* c_vext = app.add_subcommand("vertical-extend", "extend a vertical boundary map");
  c_vext->add_option("disk", disk_path);
  c_vext->add_option("map", map_path);
  c_vext->add_option("--out", out);
  c_vext->add_option("--svg", svg);
  c_vext->add_option("--corpus", corpus);

  auto* c_obs = app.add_subcommand("check-obstructive", "list f-obstructive spanning simplices");
  c_obs->add_option("disk", disk_path)->required();
  c_obs->add_option("map", map_path)->required();

  auto* c_fiber = app.add_subcommand("fiber", "fiber polytopes over a pinned apex x");
  c_fiber->add_option("disk", disk_path)->required();
  c_fiber->add_option("--x", x_text, "apex x coordinate");
  c_fiber->add_option("--level", level_text, "y level for the at/above fibers");

  auto* c_l6 = app.add_subcommand("lemma6-check", "fiber dimension and projection checks");
  c_l6->add_option("disk", disk_path)->required();
  c_l6->add_option("--samples", samples);
  c_l6->add_option("--seed", seed);

  auto* c_sample = app.add_subcommand("sample", "random walk through extensions of a boundary map");
  c_sample->add_option("disk", disk_path)->required();
  c_sample->add_option("map", map_path)->required();
  c_sample->add_option("-n", n);
  c_sample->add_option("--seed", seed);
  c_sample->add_option("--out", out)->required();

  auto* c_render = app.add_subcommand("render", "deterministic SVG figure");
  c_render->add_option("disk", disk_path)->required();
  c_render->add_option("map", map_path);
  c_render->add_option("--out", out);
  c_render->add_flag("--roof", roof_f);
  c_render->add_flag("--key", key_f);
  c_render->add_flag("--spanning", spanning_f);
  c_render->add_flag("--obstructive", obstructive_f);

  auto* c_gen = app.add_subcommand("generate", "deterministic random disk");
  c_gen->add_option("--seed", seed);
  c_gen->add_option("--interior", interior);
  c_gen->add_option("--boundary", boundary);
  c_gen->add_option("--shape", shape, "convex | strictly-convex | trv");
  c_gen->add_option("--out", out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  const auto start = std::chrono::steady_clock::now();
  int rc = 0;
  try {
    if (c_check->parsed()) rc = cmd_check(disk_path);
    else if (c_reduce->parsed()) rc = cmd_reduce(disk_path, edge, out, svg);
    else if (c_extend->parsed()) {
      if (corpus.empty() && (disk_path.empty() || map_path.empty()))
        fail(ErrorCode::ParseError, "extend needs disk and map files (or --corpus)");
      rc = cmd_extend(disk_path, map_path, vertical_flag, out, svg, corpus);
    } else if (c_vext->parsed()) {
      if (corpus.empty() && (disk_path.empty() || map_path.empty()))
        fail(ErrorCode::ParseError, "vertical-extend needs disk and map files (or --corpus)");
      rc = cmd_extend(disk_path, map_path, true, out, svg, corpus);
    } else if (c_obs->parsed()) rc = cmd_check_obstructive(disk_path, map_path);
    else if (c_fiber->parsed()) rc = cmd_fiber(disk_path, x_text, level_text);
    else if (c_l6->parsed()) rc = cmd_lemma6(disk_path, samples, seed);
    else if (c_sample->parsed()) rc = cmd_sample(disk_path, map_path, n, seed, out);
    else if (c_render->parsed())
      rc = cmd_render(disk_path, map_path, out, roof_f, key_f, spanning_f, obstructive_f);
    else if (c_gen->parsed()) rc = cmd_generate(seed, interior, boundary, shape, out);
  } catch (const Error& e) {
    std::cout << "error: " << e.what() << "\n";
    rc = exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cout << "error: " << e.what() << "\n";
    rc = 3;
  }
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
  std::cerr << "timing: " << ms << " ms\n";
  return rc;
}
