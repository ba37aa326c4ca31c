#include <doctest.h>

#include "lamkit/cli.hpp"
#include "lamkit/io.hpp"
#include "lamkit/render.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace lamkit;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<const char*> args) {
  args.insert(args.begin(), "lamkit");
  std::ostringstream out, err;
  int code = cli_dispatch(static_cast<int>(args.size()), args.data(), out, err);
  return {code, out.str(), err.str()};
}

size_t count(const std::string& s, const std::string& what) {
  size_t n = 0;
  for (size_t p = s.find(what); p != std::string::npos; p = s.find(what, p + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("cli examples") {
  auto g = run({"gap", "--critical", "1/3-2/3", "--depth", "3"});
  REQUIRE(g.code == 0);
  auto j = json::parse(g.out);
  CHECK(j["major"] == "1/3-2/3");
  CHECK(j["edges"].size() == 14);

  auto c = run({"rotational", "classify", "--vertices", "1/26,3/26,9/26"});
  REQUIRE(c.code == 0);
  CHECK(json::parse(c.out)["type"] == "A");

  auto o = run({"orbit", "--degree", "3", "--angle", "7/26"});
  REQUIRE(o.code == 0);
  auto oj = json::parse(o.out);
  CHECK(oj["preperiod"] == 0);
  CHECK(oj["period"] == 3);
}

TEST_CASE("cli exit codes") {
  CHECK(run({}).code == 64);
  CHECK(run({"orbit"}).code == 64);
  CHECK(run({"orbit", "--angle", "7/5"}).code == 1);
  CHECK(run({"gap", "--critical", "1/3-1/2"}).code == 1);
}

TEST_CASE("cli round trip through files") {
  auto dir = std::filesystem::temp_directory_path() / "lamkit_cli_test";
  std::filesystem::create_directories(dir);
  auto slice = (dir / "fb.json").string(), svg = (dir / "fb.svg").string();
  auto t = run({"tune", "--gap", "Fb", "--quadratic", "1/3", "--depth", "4"});
  REQUIRE(t.code == 0);
  write_text_file(slice, t.out);
  auto chk = run({"cubioid", "check", slice.c_str()});
  CHECK(chk.code == 0);
  auto w = run({"cubioid", "witness", slice.c_str()});
  REQUIRE(w.code == 0);
  CHECK(json::parse(w.out)["case"] == 2);
  auto r = run({"render", slice.c_str(), "--svg", svg.c_str()});
  REQUIRE(r.code == 0);
  auto cs = certified_from_json(read_json_file(slice));
  std::ifstream in(svg);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(count(text, "class=\"leaf\"") == cs.slice.size());
  std::filesystem::remove_all(dir);
}

TEST_CASE("json round trips") {
  auto cs = certify_quadgap(QuadGap::from_major(Chord::parse("7/8-1/4")), 3);
  auto back = certified_from_json(json::parse(to_json(cs).dump()));
  CHECK(back.slice.chords() == cs.slice.chords());
  REQUIRE(back.metadata.size() == cs.metadata.size());
  for (size_t i = 0; i < cs.metadata.size(); ++i) {
    CHECK(back.metadata[i].kind == cs.metadata[i].kind);
    CHECK(back.metadata[i].label == cs.metadata[i].label);
  }
  CHECK(parse_gap("Fa") == QuadGap::Fa());
  CHECK(parse_gap("7/8-1/4") == QuadGap::from_major(Chord::parse("7/8-1/4")));
}

TEST_CASE("rendering") {
  LaminationSlice empty;
  auto e = render_svg(empty);
  CHECK(count(e, "<circle") == 1);
  CHECK(count(e, "class=\"leaf\"") == 0);
  LaminationSlice d;
  d.leaves.push_back({Chord::parse("0-1/2"), 0, LeafOrigin::Generator});
  auto s = render_svg(d);
  CHECK(count(s, "class=\"leaf\"") == 1);
  CHECK(s.find(" L ") != std::string::npos);
  CHECK(render_svg(d) == s);
  auto p = geodesic_path(Chord::parse("0-1/4"), 100, 100, GeodesicStyle::Hyperbolic);
  // quarter-turn chord: orthogonal circle radius = r * tan(pi/4)
  CHECK(p == "M 200.000000 100.000000 A 100.000000 100.000000 0 0 1 100.000000 0.000000");
}
