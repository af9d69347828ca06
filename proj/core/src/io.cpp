#include <cstdint>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "sldisk/errors.hpp"
#include "sldisk/io.hpp"

namespace sldisk {

namespace {

using nlohmann::json;

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorCode::ParseError, e.what());
  }
}

void expect_version(const json& j, const std::string& want) {
  if (!j.is_object() || !j.contains("version") || !j["version"].is_string() ||
      j["version"].get<std::string>() != want)
    fail(ErrorCode::ParseError, "missing or wrong version field (want \"" + want + "\")");
}

Rational rational_field(const json& j, const std::string& where) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  fail(ErrorCode::ParseError, where + ": rationals must be strings \"p/q\"");
}

int int_field(const json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(ErrorCode::ParseError, where + ": expected an integer");
  return j.get<int>();
}

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

void emit_disk_body(std::ostringstream& out, const SLDisk& d, const std::string& pad) {
  out << pad << "\"version\": \"sl-disk/1\",\n";
  out << pad << "\"vertices\": [";
  for (size_t i = 0; i < d.vertices.size(); ++i) {
    out << (i ? "," : "") << "\n" << pad << "  {\"x\": " << quoted(format_rational(d.vertices[i].x))
        << ", \"y\": " << quoted(format_rational(d.vertices[i].y)) << "}";
  }
  out << "\n" << pad << "],\n";
  out << pad << "\"triangles\": [";
  for (size_t t = 0; t < d.triangles.size(); ++t) {
    out << (t ? "," : "") << "\n"
        << pad << "  [" << d.triangles[t][0] << ", " << d.triangles[t][1] << ", "
        << d.triangles[t][2] << "]";
  }
  out << "\n" << pad << "]";
}

SLDisk disk_from_json(const json& j) {
  SLDisk d;
  if (!j.contains("vertices") || !j["vertices"].is_array() || !j.contains("triangles") ||
      !j["triangles"].is_array())
    fail(ErrorCode::ParseError, "disk needs \"vertices\" and \"triangles\" arrays");
  for (const json& v : j["vertices"]) {
    if (!v.is_object() || !v.contains("x") || !v.contains("y"))
      fail(ErrorCode::ParseError, "vertex entries need \"x\" and \"y\"");
    d.vertices.push_back(Point{rational_field(v["x"], "vertex x"), rational_field(v["y"], "vertex y")});
  }
  const int n = static_cast<int>(d.vertices.size());
  for (const json& t : j["triangles"]) {
    if (!t.is_array() || t.size() != 3)
      fail(ErrorCode::ParseError, "triangle entries must be index triples");
    std::array<int, 3> tri;
    for (int k = 0; k < 3; ++k) {
      tri[k] = int_field(t[k], "triangle index");
      if (tri[k] < 0 || tri[k] >= n)
        fail(ErrorCode::ParseError, "triangle index " + std::to_string(tri[k]) + " out of range");
    }
    d.triangles.push_back(tri);
  }
  return d;
}

}  // namespace

std::string write_disk(const SLDisk& d) {
  std::ostringstream out;
  out << "{\n";
  emit_disk_body(out, d, "  ");
  out << "\n}\n";
  return out.str();
}

SLDisk parse_disk(const std::string& text) {
  json j = parse_json(text);
  expect_version(j, "sl-disk/1");
  return disk_from_json(j);
}

std::string write_map(const VertexMap& m) {
  std::ostringstream out;
  out << "{\n  \"version\": \"sl-map/1\",\n  \"images\": {";
  bool first = true;
  for (const auto& [id, pt] : m) {
    out << (first ? "" : ",") << "\n    " << quoted(std::to_string(id)) << ": ["
        << quoted(format_rational(pt.x)) << ", " << quoted(format_rational(pt.y)) << "]";
    first = false;
  }
  out << "\n  }\n}\n";
  return out.str();
}

VertexMap parse_map(const std::string& text) {
  json j = parse_json(text);
  expect_version(j, "sl-map/1");
  if (!j.contains("images") || !j["images"].is_object())
    fail(ErrorCode::ParseError, "map needs an \"images\" object");
  VertexMap m;
  for (const auto& [key, val] : j["images"].items()) {
    int id;
    try {
      size_t used = 0;
      id = std::stoi(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      fail(ErrorCode::ParseError, "image key \"" + key + "\" is not a vertex id");
    }
    if (!val.is_array() || val.size() != 2)
      fail(ErrorCode::ParseError, "image values must be [x, y] pairs");
    if (m.count(id)) fail(ErrorCode::ParseError, "duplicate image key " + key);
    m[id] = Point{rational_field(val[0], "image x"), rational_field(val[1], "image y")};
  }
  return m;
}

std::string write_polytope(const HPolytope& p) {
  std::ostringstream out;
  out << "{\n  \"version\": \"sl-polytope/1\",\n  \"dimension\": " << p.dimension
      << ",\n  \"forms\": [";
  for (size_t i = 0; i < p.forms.size(); ++i) {
    out << (i ? "," : "") << "\n    {\"coeffs\": [";
    for (size_t k = 0; k < p.forms[i].coeffs.size(); ++k)
      out << (k ? ", " : "") << quoted(format_rational(p.forms[i].coeffs[k]));
    out << "], \"const\": " << quoted(format_rational(p.forms[i].constant)) << "}";
  }
  out << "\n  ]\n}\n";
  return out.str();
}

HPolytope parse_polytope(const std::string& text) {
  json j = parse_json(text);
  expect_version(j, "sl-polytope/1");
  HPolytope p;
  if (!j.contains("dimension") || !j["dimension"].is_number_integer() || !j.contains("forms") ||
      !j["forms"].is_array())
    fail(ErrorCode::ParseError, "polytope needs \"dimension\" and \"forms\"");
  p.dimension = j["dimension"].get<int>();
  if (p.dimension < 0) fail(ErrorCode::ParseError, "negative dimension");
  for (const json& f : j["forms"]) {
    if (!f.is_object() || !f.contains("coeffs") || !f["coeffs"].is_array() || !f.contains("const"))
      fail(ErrorCode::ParseError, "form entries need \"coeffs\" and \"const\"");
    AffineForm form;
    for (const json& cfj : f["coeffs"]) form.coeffs.push_back(rational_field(cfj, "coefficient"));
    if (static_cast<int>(form.coeffs.size()) != p.dimension)
      fail(ErrorCode::ParseError, "coefficient count does not match the dimension");
    form.constant = rational_field(f["const"], "constant");
    p.forms.push_back(std::move(form));
  }
  return p;
}

std::string write_reduced(const ReducedForm& r) {
  std::ostringstream out;
  out << "{\n  \"version\": \"sl-reduced/1\",\n  \"map\": [";
  for (int i = 0; i < 3; ++i) {
    out << (i ? "," : "") << "\n    [";
    for (int k = 0; k < 3; ++k)
      out << (k ? ", " : "") << quoted(format_rational(r.map.m[i][k]));
    out << "]";
  }
  out << "\n  ],\n  \"disk\": {\n";
  emit_disk_body(out, r.disk, "    ");
  out << "\n  },\n  \"base_run\": [";
  for (size_t i = 0; i < r.base_run.size(); ++i) out << (i ? ", " : "") << r.base_run[i];
  out << "]\n}\n";
  return out.str();
}

ReducedForm parse_reduced(const std::string& text) {
  json j = parse_json(text);
  expect_version(j, "sl-reduced/1");
  if (!j.contains("map") || !j["map"].is_array() || j["map"].size() != 3 ||
      !j.contains("disk") || !j["disk"].is_object() || !j.contains("base_run") ||
      !j["base_run"].is_array())
    fail(ErrorCode::ParseError, "reduced form needs \"map\", \"disk\", \"base_run\"");
  ReducedForm r;
  for (int i = 0; i < 3; ++i) {
    const json& row = j["map"][i];
    if (!row.is_array() || row.size() != 3)
      fail(ErrorCode::ParseError, "map rows must have three entries");
    for (int k = 0; k < 3; ++k) r.map.m[i][k] = rational_field(row[k], "map entry");
  }
  r.disk = disk_from_json(j["disk"]);
  for (const json& b : j["base_run"]) r.base_run.push_back(int_field(b, "base_run entry"));
  return r;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::ParseError, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) fail(ErrorCode::ParseError, "cannot read " + path);
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(ErrorCode::ParseError, "cannot open " + path + " for writing");
  out << content;
  out.flush();
  if (!out) fail(ErrorCode::ParseError, "cannot write " + path);
}

std::string digest(const std::string& content) {
  uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : content) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

}  // namespace sldisk
