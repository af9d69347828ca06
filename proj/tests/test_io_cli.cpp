#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <optional>
#include <string>

#include "sldisk/disk.hpp"
#include "sldisk/errors.hpp"
#include "sldisk/io.hpp"
#include "sldisk/reduce.hpp"

using namespace sldisk;

namespace {

Rational Q(const char* t) { return parse_rational(t); }

SLDisk fan() {
  SLDisk d;
  d.vertices = {{0, 0}, {1, 0}, {1, 1}, {0, 1}, {Q("1/2"), Q("1/2")}};
  d.triangles = {{0, 1, 4}, {1, 2, 4}, {2, 3, 4}, {3, 0, 4}};
  return d;
}

template <typename F>
std::optional<ErrorCode> code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

struct RunResult {
  int exit_code = -1;
  std::string out;
};

// runs the installed CLI; stderr is dropped (timing lines live there)
RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(SLDISK_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string temp_dir() {
  static const std::string dir = [] {
    char tmpl[] = "/tmp/sldisk-test-XXXXXX";
    const char* d = mkdtemp(tmpl);
    REQUIRE(d != nullptr);
    return std::string(d);
  }();
  return dir;
}

}  // namespace

TEST_CASE("disk serialization round trips byte for byte") {
  SLDisk d = fan();
  std::string text = write_disk(d);
  SLDisk back = parse_disk(text);
  CHECK(back.vertices == d.vertices);
  CHECK(back.triangles == d.triangles);
  CHECK(write_disk(back) == text);
  CHECK(text.find("\"version\": \"sl-disk/1\"") != std::string::npos);
}

TEST_CASE("map serialization round trips") {
  VertexMap m;
  m[0] = {Q("1/3"), Q("-7/2")};
  m[12] = {4, 0};
  std::string text = write_map(m);
  VertexMap back = parse_map(text);
  CHECK(back == m);
  CHECK(write_map(back) == text);
  CHECK(text.find("\"version\": \"sl-map/1\"") != std::string::npos);
}

TEST_CASE("polytope serialization round trips") {
  HPolytope p;
  p.dimension = 2;
  AffineForm f;
  f.coeffs = {Q("1/2"), Rational(-3)};
  f.constant = Q("7/5");
  p.forms.push_back(f);
  f.coeffs = {0, 1};
  f.constant = 0;
  p.forms.push_back(f);
  std::string text = write_polytope(p);
  HPolytope back = parse_polytope(text);
  REQUIRE(back.forms.size() == 2);
  CHECK(back.dimension == 2);
  CHECK(back.forms[0].coeffs == p.forms[0].coeffs);
  CHECK(back.forms[0].constant == p.forms[0].constant);
  CHECK(write_polytope(back) == text);
}

TEST_CASE("reduced form serialization round trips") {
  ReducedForm r = reduce(fan(), 0);
  std::string text = write_reduced(r);
  ReducedForm back = parse_reduced(text);
  CHECK(back.base_run == r.base_run);
  CHECK(back.disk.vertices == r.disk.vertices);
  CHECK(back.disk.triangles == r.disk.triangles);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(back.map.m[i][j] == r.map.m[i][j]);
  CHECK(write_reduced(back) == text);
}

TEST_CASE("parse errors are typed and early") {
  CHECK(code_of([] { parse_disk("not json"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_disk("{}"); }) == ErrorCode::ParseError);
  CHECK(code_of([] {
          parse_disk("{\"version\":\"sl-map/1\",\"vertices\":[],\"triangles\":[]}");
        }) == ErrorCode::ParseError);
  // floats are rejected, not rounded
  CHECK(code_of([] {
          parse_disk(
              "{\"version\":\"sl-disk/1\",\"vertices\":[{\"x\":0.5,\"y\":\"0\"}],"
              "\"triangles\":[]}");
        }) == ErrorCode::ParseError);
  // triangle index out of range
  CHECK(code_of([] {
          parse_disk(
              "{\"version\":\"sl-disk/1\",\"vertices\":[{\"x\":\"0\",\"y\":\"0\"},"
              "{\"x\":\"1\",\"y\":\"0\"},{\"x\":\"0\",\"y\":\"1\"}],"
              "\"triangles\":[[0,1,3]]}");
        }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_map("{\"version\":\"sl-map/1\",\"images\":{\"x\":[\"0\",\"0\"]}}"); }) ==
        ErrorCode::ParseError);
  CHECK(code_of([] { parse_rational("1/0"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { read_file("/nonexistent/sldisk"); }) == ErrorCode::ParseError);
  // coefficient arity must match the dimension
  CHECK(code_of([] {
          parse_polytope(
              "{\"version\":\"sl-polytope/1\",\"dimension\":2,"
              "\"forms\":[{\"coeffs\":[\"1\"],\"const\":\"0\"}]}");
        }) == ErrorCode::ParseError);
}

TEST_CASE("digest is stable fnv-1a") {
  CHECK(digest("") == "cbf29ce484222325");
  CHECK(digest("abc") == "e71fa2190541574b");
  CHECK(digest(write_disk(fan())) == digest(write_disk(fan())));
  CHECK(digest("a") != digest("b"));
}

TEST_CASE("cli start to finish") {
  const std::string dir = temp_dir();
  const std::string disk = dir + "/gen.disk.json";

  RunResult gen = run_cli("generate --seed 5 --interior 2 --boundary 6 --shape trv --out " + disk);
  REQUIRE(gen.exit_code == 0);
  RunResult gen2 =
      run_cli("generate --seed 5 --interior 2 --boundary 6 --shape trv --out " + disk + ".again");
  CHECK(gen2.exit_code == 0);
  CHECK(read_file(disk) == read_file(disk + ".again"));

  RunResult chk = run_cli("check " + disk);
  CHECK(chk.exit_code == 0);
  CHECK(chk.out.find("validate: pass") != std::string::npos);

  // stdout must be byte-identical across runs (timing goes to stderr)
  RunResult chk2 = run_cli("check " + disk);
  CHECK(chk2.out == chk.out);

  RunResult missing = run_cli("check /nonexistent/sldisk.json");
  CHECK(missing.exit_code == 1);

  write_file(dir + "/broken.json", "{\"version\":\"sl-disk/1\"");
  CHECK(run_cli("check " + dir + "/broken.json").exit_code == 1);

  // obstructive pair: square with a diagonal pressed onto the image boundary
  SLDisk sq;
  sq.vertices = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  sq.triangles = {{0, 1, 2}, {0, 2, 3}};
  VertexMap g;
  g[0] = {0, 0};
  g[1] = {1, 0};
  g[2] = {1, 1};
  g[3] = {Q("1/2"), Q("1/2")};
  write_file(dir + "/sq.disk.json", write_disk(sq));
  write_file(dir + "/sq.map.json", write_map(g));
  RunResult obs = run_cli("extend " + dir + "/sq.disk.json " + dir + "/sq.map.json");
  CHECK(obs.exit_code == 2);

  // deterministic sampling over a convex disk with its own boundary
  const std::string cdisk = dir + "/conv.disk.json";
  REQUIRE(run_cli("generate --seed 3 --interior 2 --boundary 6 --shape convex --out " + cdisk)
              .exit_code == 0);
  SLDisk cd = parse_disk(read_file(cdisk));
  write_file(dir + "/conv.map.json", write_map(restrict_to_boundary(cd, identity_map(cd))));

  const std::string sample_args = cdisk + " " + dir + "/conv.map.json -n 3 --seed 9 --out ";
  RunResult smp = run_cli("sample " + sample_args + dir + "/s1");
  REQUIRE(smp.exit_code == 0);
  RunResult smp2 = run_cli("sample " + sample_args + dir + "/s2");
  REQUIRE(smp2.exit_code == 0);
  CHECK(smp.out.find("result: 3 samples") != std::string::npos);
  CHECK(read_file(dir + "/s1/sample_000.map.json") == read_file(dir + "/s2/sample_000.map.json"));
  CHECK(read_file(dir + "/s1/sample_002.map.json") == read_file(dir + "/s2/sample_002.map.json"));
}
