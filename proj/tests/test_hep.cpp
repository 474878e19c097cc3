#include "doctest.h"

#include "diho/digraph.hpp"
#include "diho/error.hpp"
#include "diho/homotopy.hpp"

using namespace diho;

namespace {
Label L(const char* s) { return Label::leaf(s); }

Digraph c3() {
  return Digraph::Builder()
      .add_edge(L("a"), L("b"))
      .add_edge(L("b"), L("c"))
      .add_edge(L("c"), L("a"))
      .build();
}

/* One corner of the triangle slides backwards along c -> a. */
HepInstance corner_instance() {
  DigraphPtr g = share(c3());
  DigraphPtr x = share(Digraph::Builder().add_edge(L("c"), L("a")).build());
  DigraphMap m0(x, g, std::map<Label, Label>{{L("a"), L("a")}, {L("c"), L("c")}});
  DigraphMap m1(x, g, std::map<Label, Label>{{L("a"), L("c")}, {L("c"), L("c")}});
  return HepInstance(g, x, DigraphMap::identity(g), Homotopy{"-", {m0, m1}});
}
}  // namespace

TEST_CASE("instances validate their pieces on construction") {
  DigraphPtr g = share(c3());
  DigraphPtr x = share(Digraph::Builder().add_edge(L("c"), L("a")).build());
  DigraphMap ok(x, g, std::map<Label, Label>{{L("a"), L("a")}, {L("c"), L("c")}});
  // track must start at the restriction of the start map
  DigraphMap other(x, g, std::map<Label, Label>{{L("a"), L("c")}, {L("c"), L("c")}});
  CHECK_THROWS_AS(HepInstance(g, x, DigraphMap::identity(g),
                              Homotopy{"", {other}}),
                  Error);
  // part must sit inside the whole
  DigraphPtr stray = share(Digraph::point(L("zz")));
  CHECK_THROWS_AS(HepInstance(g, stray, DigraphMap::identity(g),
                              Homotopy{"", {DigraphMap::constant(stray, g, L("a"))}}),
                  Error);
  CHECK_NOTHROW(HepInstance(g, x, DigraphMap::identity(g), Homotopy{"", {ok}}));
}

TEST_CASE("the triangle corner slide has no whole-digraph extension") {
  Budget budget;
  CHECK(!check_hep(corner_instance(), budget).has_value());
}

TEST_CASE("padding does not rescue the triangle corner slide") {
  Budget budget{20'000'000, 0};
  CHECK(!check_hep(corner_instance(), budget, 6).has_value());
}

TEST_CASE("a slide on the interval endpoint extends to the whole") {
  DigraphPtr g = share(Digraph::Builder().add_edge(L("0"), L("1")).build());
  DigraphPtr x = share(Digraph::point(L("1")));
  DigraphMap m0(x, g, std::map<Label, Label>{{L("1"), L("1")}});
  DigraphMap m1(x, g, std::map<Label, Label>{{L("1"), L("0")}});
  HepInstance inst(g, x, DigraphMap::identity(g), Homotopy{"-", {m0, m1}});
  Budget budget;
  auto ext = check_hep(inst, budget);
  REQUIRE(ext.has_value());
  CHECK(ext->word == "-");
  CHECK(ext->validate());
  CHECK(ext->front() == DigraphMap::identity(g));
  CHECK(ext->back() == DigraphMap::constant(g, g, L("0")));
  CHECK(restrict_map(ext->back(), x) == m1);
}

TEST_CASE("zero-length tracks extend by doing nothing") {
  DigraphPtr g = share(c3());
  DigraphPtr x = share(Digraph::point(L("a")));
  DigraphMap m0(x, g, std::map<Label, Label>{{L("a"), L("a")}});
  HepInstance inst(g, x, DigraphMap::identity(g), Homotopy{"", {m0}});
  Budget budget;
  auto ext = check_hep(inst, budget);
  REQUIRE(ext.has_value());
  CHECK(ext->length() == 0);
  CHECK(ext->front() == DigraphMap::identity(g));
}
