#include "doctest.h"

#include <cstdio>
#include <fstream>

#include "diho/error.hpp"
#include "diho/io.hpp"

using namespace diho;

namespace {
Label L(const char* s) { return Label::leaf(s); }

void put(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
}

struct TempFiles {
  std::vector<std::string> paths;
  const std::string& add(const std::string& p, const std::string& text) {
    put(p, text);
    paths.push_back(p);
    return paths.back();
  }
  ~TempFiles() {
    for (const auto& p : paths) std::remove(p.c_str());
  }
};
}  // namespace

TEST_CASE("digraph text round-trips with comments and isolated vertices") {
  Digraph g = parse_digraph_text("# corner\nv c\ne a b # tail comment\n");
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 1);
  CHECK(parse_digraph_text(format_digraph(g)) == g);
}

TEST_CASE("digraph parse errors carry line context") {
  CHECK_THROWS_AS(parse_digraph_text("e a\n"), Error);
  CHECK_THROWS_AS(parse_digraph_text("x a b\n"), Error);
  try {
    parse_digraph_text("v a\nboom\n");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code == ErrorCode::ParseError);
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}

TEST_CASE("map files resolve digraph paths relative to themselves") {
  TempFiles tmp;
  tmp.add("io_dom.dg", "e 0 1\n");
  tmp.add("io_cod.dg", "e a b\ne b c\ne c a\n");
  tmp.add("io_f.map", "domain io_dom.dg\ncodomain io_cod.dg\nm 0 a\nm 1 b\n");
  DigraphMap f = load_map("io_f.map");
  CHECK(f.apply(L("0")) == L("a"));
  CHECK(validate_map(f));
  CHECK(format_assignment(f) == "m 0 a\nm 1 b\n");
}

TEST_CASE("track text round-trips") {
  DigraphPtr iv = share(parse_digraph_text("e 0 1\n"));
  Homotopy t{"-", {DigraphMap::identity(iv), DigraphMap::constant(iv, iv, L("0"))}};
  REQUIRE(t.validate());
  std::string text = format_track(t);
  Homotopy back = parse_track_text(text);
  CHECK(back.word == "-");
  CHECK(back.validate());
  CHECK(back.maps == t.maps);
  CHECK(format_track(back) == text);
}

TEST_CASE("zero-length tracks serialize with a bare word line") {
  DigraphPtr iv = share(parse_digraph_text("e 0 1\n"));
  Homotopy t{"", {DigraphMap::identity(iv)}};
  std::string text = format_track(t);
  CHECK(text.substr(0, 5) == "word\n");
  Homotopy back = parse_track_text(text);
  CHECK(back.word.empty());
  CHECK(back.maps.size() == 1);
}

TEST_CASE("track text validates stop counts") {
  CHECK_THROWS_AS(parse_track_text("word +\ndomain\nv a\ncodomain\nv a\n"
                                   "map\nm a a\n"),
                  Error);
  CHECK_THROWS_AS(parse_track_text("domain\nv a\ncodomain\nv a\nmap\nm a a\n"),
                  Error);
}

TEST_CASE("extension instances round-trip through text") {
  std::string text =
      "graph\ne a b\ne b c\ne c a\n"
      "sub\ne c a\n"
      "target\ne a b\ne b c\ne c a\n"
      "start-map\nm a a\nm b b\nm c c\n"
      "step -\nm a c\nm c c\n";
  HepInstance inst = parse_hep_text(text);
  CHECK(inst.whole->vertex_count() == 3);
  CHECK(inst.part->vertex_count() == 2);
  CHECK(inst.track.word == "-");
  std::string again = format_hep(inst);
  HepInstance back = parse_hep_text(again);
  CHECK(format_hep(back) == again);
}

TEST_CASE("bad extension instances are rejected with typed errors") {
  // track start disagrees with the start map on the sub
  CHECK_THROWS_AS(parse_hep_text("graph\ne a b\nsub\nv a\ntarget\ne a b\n"
                                 "start-map\nm a a\nm b b\n"
                                 "step + extra\n"),
                  Error);
  try {
    parse_hep_text("graph\ne a b\nsub\nv z\ntarget\ne a b\n"
                   "start-map\nm a a\nm b b\n");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code == ErrorCode::NotSubdigraph);
  }
}

TEST_CASE("finite systems round-trip through text") {
  std::string text =
      "obj X : x0 x1\n"
      "obj Y : y0\n"
      "mor X -> Y : x0=y0, x1=y0\n";
  limits::FiniteSystem s = parse_system_text(text);
  CHECK(s.object_count() == 2);
  CHECK(s.tokens(0).size() == 2);
  std::string again = format_system(s);
  CHECK(format_system(parse_system_text(again)) == again);
}

TEST_CASE("system text rejects malformed lines") {
  CHECK_THROWS_AS(parse_system_text("obj X x0\n"), Error);
  CHECK_THROWS_AS(parse_system_text("mor X -> Y\n"), Error);
  CHECK_THROWS_AS(parse_system_text("obj X : x0\nmor X -> Y : x0=\n"), Error);
}

TEST_CASE("dot export is byte-stable and shape-tagged") {
  Digraph g = parse_digraph_text("e a b\nv Apex\n");
  std::string d1 = export_dot(g), d2 = export_dot(g);
  CHECK(d1 == d2);
  CHECK(d1.find("doublecircle") != std::string::npos);
  CHECK(d1.find("->") != std::string::npos);
}
