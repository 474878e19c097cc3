#include "doctest.h"

#include <algorithm>

#include "diho/digraph.hpp"
#include "diho/error.hpp"
#include "diho/homotopy.hpp"
#include "oracle.hpp"

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

Digraph iv() { return Digraph::Builder().add_edge(L("0"), L("1")).build(); }
}  // namespace

TEST_CASE("one-step orientations between interval endmaps") {
  DigraphPtr g = share(iv());
  DigraphMap id = DigraphMap::identity(g);
  DigraphMap c0 = DigraphMap::constant(g, g, L("0"));
  DigraphMap c1 = DigraphMap::constant(g, g, L("1"));
  OrientationSet s01 = one_step(id, c1);
  CHECK(s01.plus);   // id(v) steps forward onto 1
  CHECK(!s01.minus);
  OrientationSet s10 = one_step(id, c0);
  CHECK(!s10.plus);
  CHECK(s10.minus);
  OrientationSet self = one_step(id, id);
  CHECK(self.plus);
  CHECK(self.minus);
}

TEST_CASE("enumerate_maps agrees with the odometer oracle") {
  std::vector<Digraph> shapes = {Digraph(), Digraph::point(L("p")), iv(), c3()};
  for (const Digraph& g : shapes)
    for (const Digraph& h : shapes) {
      Budget budget;
      std::vector<DigraphMap> got = enumerate_maps(g, h, budget);
      std::vector<std::vector<int>> want = oracle::all_maps(g, h);
      REQUIRE(got.size() == want.size());
      for (size_t i = 0; i < got.size(); ++i) CHECK(got[i].targets() == want[i]);
    }
}

TEST_CASE("tracks validate, replay, reverse, and concatenate") {
  DigraphPtr g = share(iv());
  DigraphMap id = DigraphMap::identity(g);
  DigraphMap c0 = DigraphMap::constant(g, g, L("0"));
  Homotopy t{"-", {id, c0}};
  REQUIRE(t.validate());
  CHECK(validate_map(t.replay()));
  Homotopy r = t.reversed();
  CHECK(r.word == "+");
  CHECK(r.front() == c0);
  CHECK(r.validate());
  Homotopy round = concat(t, r);
  CHECK(round.word == "-+");
  CHECK(round.validate());
  CHECK(round.front() == id);
  CHECK(round.back() == id);
  Homotopy broken{"+", {id, c0}};
  CHECK(!broken.validate());
}

TEST_CASE("interval self-maps form one class of three") {
  Budget budget;
  ClassTable t = homotopy_classes(iv(), iv(), budget);
  CHECK(t.map_count() == 3);
  CHECK(t.class_count() == 1);
  DigraphPtr g = share(iv());
  auto track = are_homotopic(DigraphMap::identity(g),
                             DigraphMap::constant(g, g, L("0")), budget);
  REQUIRE(track.has_value());
  CHECK(track->word == "-");
  CHECK(track->validate());
}

TEST_CASE("triangle self-maps split into rotations and constants") {
  Budget budget;
  Digraph tri = c3();
  ClassTable t = homotopy_classes(tri, tri, budget);
  CHECK(t.map_count() == 6);
  CHECK(t.class_count() == 2);
  DigraphPtr g = share(tri);
  DigraphMap id = DigraphMap::identity(g);
  DigraphMap rot(g, g, std::map<Label, Label>{{L("a"), L("b")},
                                              {L("b"), L("c")},
                                              {L("c"), L("a")}});
  DigraphMap ca = DigraphMap::constant(g, g, L("a"));
  CHECK(t.class_of_map(id) == t.class_of_map(rot));
  CHECK(t.class_of_map(id) != t.class_of_map(ca));
  CHECK(!are_homotopic(id, ca, budget).has_value());
  CHECK(are_weakly_homotopic(id, rot, budget));
}

TEST_CASE("class partition matches the oracle on mixed shapes") {
  std::vector<Digraph> shapes = {Digraph::point(L("p")), iv(), c3()};
  for (const Digraph& g : shapes)
    for (const Digraph& h : shapes) {
      Budget budget;
      ClassTable t = homotopy_classes(g, h, budget);
      std::vector<int> want = oracle::partition(g, h);
      REQUIRE(t.map_count() == static_cast<int>(want.size()));
      int want_classes = want.empty() ? 0 : *std::max_element(want.begin(), want.end()) + 1;
      CHECK(t.class_count() == want_classes);
      for (int i = 0; i < t.map_count(); ++i)
        for (int j = 0; j < t.map_count(); ++j)
          CHECK((t.class_of_index(i) == t.class_of_index(j)) ==
                (want[static_cast<size_t>(i)] == want[static_cast<size_t>(j)]));
    }
}

TEST_CASE("null classes are detected via constant representatives") {
  Budget budget;
  ClassTable t = homotopy_classes(iv(), c3(), budget);
  REQUIRE(t.class_count() == 1);
  CHECK(is_null_class(t, 0));
  ClassTable tri = homotopy_classes(c3(), c3(), budget);
  DigraphPtr g = share(c3());
  int id_class = tri.class_of_map(DigraphMap::identity(g));
  CHECK(!is_null_class(tri, id_class));
}

TEST_CASE("component enumeration stays inside the class") {
  Budget budget;
  DigraphPtr g = share(iv());
  auto comp = homotopy_component(DigraphMap::identity(g), budget);
  CHECK(comp.size() == 3);
}

TEST_CASE("searches stop at the budget with a typed error") {
  Digraph tri = c3();
  Budget tiny{3, 0};
  CHECK_THROWS_AS(homotopy_classes(tri, tri, tiny), BudgetExceeded);
}

TEST_CASE("contractibility of intervals but not the triangle") {
  Budget budget;
  auto t = is_contractible(iv(), budget);
  REQUIRE(t.has_value());
  CHECK(t->validate());
  CHECK(t->back().is_constant());
  CHECK(!is_contractible(c3(), budget).has_value());
  CHECK(!is_contractible(Digraph(), budget).has_value());
}

TEST_CASE("equivalence finds identity witnesses on equal digraphs") {
  Budget budget;
  auto w = are_equivalent(c3(), c3(), budget);
  REQUIRE(w.has_value());
  CHECK(w->back_track.validate());
  CHECK(w->forward_track.validate());
  CHECK(!are_equivalent(c3(), Digraph::point(L("p")), budget).has_value());
}
