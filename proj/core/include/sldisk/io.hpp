#pragma once

#include <string>

#include "sldisk/polytope.hpp"
#include "sldisk/reduce.hpp"

namespace sldisk {

// JSON formats. Rationals are strings "p/q" (or "p" when q = 1). A disk is
// {"version":"sl-disk/1","vertices":[{"x":..,"y":..},..],"triangles":[[i,j,k],..]};
// the boundary is derived on load, never stored. A vertex map is
// {"version":"sl-map/1","images":{"i":["x","y"],..}}. A polytope is
// {"version":"sl-polytope/1","dimension":d,"forms":[{"coeffs":[..],"const":..},..]}.
// Writers emit deterministic bytes; parse(write(v)) == v exactly.

std::string write_disk(const SLDisk& d);
SLDisk parse_disk(const std::string& text);

std::string write_map(const VertexMap& m);
VertexMap parse_map(const std::string& text);

std::string write_polytope(const HPolytope& p);
HPolytope parse_polytope(const std::string& text);

std::string write_reduced(const ReducedForm& r);
ReducedForm parse_reduced(const std::string& text);

std::string read_file(const std::string& path);   // Error(ParseError) on IO failure
void write_file(const std::string& path, const std::string& content);

// Short content digest (FNV-1a over bytes, hex) for run reports.
std::string digest(const std::string& content);

}  // namespace sldisk
