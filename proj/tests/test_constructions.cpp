#include "doctest.h"

#include "diho/constructions.hpp"
#include "diho/digraph.hpp"
#include "diho/error.hpp"
#include "diho/map.hpp"

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

TEST_CASE("box and tensor edge counts on products of cycles and edges") {
  Digraph b = box_product(c3(), iv());
  CHECK(b.vertex_count() == 6);
  CHECK(b.edge_count() == 9);  // 3 edges x 2 slices + 3 verticals
  Digraph t = tensor_product(c3(), iv());
  CHECK(t.vertex_count() == 6);
  CHECK(t.edge_count() == 3);  // both coordinates must move
  CHECK(t.has_edge(Label::pair(L("a"), L("0")), Label::pair(L("b"), L("1"))));
  CHECK(!b.has_edge(Label::pair(L("a"), L("0")), Label::pair(L("b"), L("1"))));
}

TEST_CASE("box slices and projections are digraph maps") {
  DigraphPtr g = share(c3()), h = share(iv());
  DigraphPtr prod = share(box_product(*g, *h));
  DigraphMap at0 = box_slice(g, h, L("0"));
  CHECK(validate_map(at0));
  CHECK(at0.codomain() == *prod);
  auto [p1, p2] = pair_projections(prod, g, h);
  CHECK(validate_map(p1));
  CHECK(validate_map(p2));
  CHECK(compose(p1, at0) == DigraphMap::identity(g));
}

TEST_CASE("label-wise union and intersection") {
  Digraph g = Digraph::Builder().add_edge(L("a"), L("b")).build();
  Digraph h = Digraph::Builder().add_edge(L("b"), L("c")).add_edge(L("a"), L("b")).build();
  Digraph u = digraph_union(g, h);
  CHECK(u.vertex_count() == 3);
  CHECK(u.edge_count() == 2);
  Digraph i = digraph_intersection(g, h);
  CHECK(i.vertex_count() == 2);
  CHECK(i.edge_count() == 1);
}

TEST_CASE("disjoint union tags parts and its inclusions compose") {
  ConstructionResult r = disjoint_union({iv(), iv()});
  CHECK(r.result.vertex_count() == 4);
  CHECK(r.result.edge_count() == 2);
  const DigraphMap& i0 = r.map("inc0");
  const DigraphMap& i1 = r.map("inc1");
  CHECK(validate_map(i0));
  CHECK(validate_map(i1));
  CHECK(i0.apply(L("0")) != i1.apply(L("0")));
}

TEST_CASE("identification merges classes and flags broken relations") {
  Digraph g = Digraph::Builder().add_edge(L("a"), L("b")).add_edge(L("c"), L("d")).build();
  ConstructionResult r = identification(g, {{L("a"), L("c")}});
  CHECK(r.result.vertex_count() == 3);
  CHECK(r.result.has_vertex(Label::cls({L("a"), L("c")})));
  CHECK(validate_map(r.map("quotient")));
  bool flagged = false;
  for (const Warning& w : r.warnings)
    if (w.code == "INCOMPATIBLE_RELATION") flagged = true;
  CHECK(flagged);
}

TEST_CASE("identification along an edge drops the resulting loop silently") {
  Digraph g = Digraph::Builder().add_edge(L("a"), L("b")).build();
  ConstructionResult r = identification(g, {{L("a"), L("b")}});
  CHECK(r.result.vertex_count() == 1);
  CHECK(r.result.edge_count() == 0);
  CHECK(r.warnings.empty());
}

TEST_CASE("quotient collapses the part onto an adjoined Star") {
  ConstructionResult r =
      quotient(c3(), Digraph::Builder().add_edge(L("a"), L("b")).build());
  CHECK(r.result.vertex_count() == 2);
  CHECK(r.result.edge_count() == 2);
  CHECK(r.result.has_vertex(Label::cls({Label::star(), L("a"), L("b")})));
  CHECK(validate_map(r.map("quotient")));
}

TEST_CASE("cylinder maps satisfy the crushing laws") {
  DigraphPtr g = share(iv()), h = share(c3());
  DigraphMap f(g, h, std::map<Label, Label>{{L("0"), L("a")}, {L("1"), L("b")}});
  ConstructionResult mc = mapping_cylinder(f);
  CHECK(mc.result.vertex_count() == 5);
  CHECK(compose(mc.map("crush"), mc.map("top")) == f);
  CHECK(is_identity(compose(mc.map("crush"), mc.map("base"))));
  ConstructionResult em = extended_mapping_cylinder(f);
  CHECK(is_subdigraph(mc.result, em.result));
  CHECK(validate_map(em.map("crush")));
}

TEST_CASE("cone adds a single terminal apex over a mirror slice") {
  ConstructionResult r = cone(c3());
  CHECK(r.result.vertex_count() == 4);
  CHECK(r.result.edge_count() == 6);  // mirrored cycle + one edge per vertex
  for (const char* v : {"a", "b", "c"})
    CHECK(r.result.has_edge(Label::cone(L(v)), Label::apex()));
  CHECK(validate_map(r.map("top")));
}

TEST_CASE("extended cone reaches the boundary through the apex") {
  Digraph x = Digraph::Builder().add_edge(L("a"), L("b")).build();
  ConstructionResult r = extended_cone(x, c3());
  CHECK(r.result.has_vertex(Label::apex()));
  CHECK(is_subdigraph(cone(x).result, r.result));
  CHECK(validate_map(r.map("top")));
}

TEST_CASE("clause-built cofiber of a point into an edge") {
  DigraphPtr g = share(Digraph::point(L("p"))), h = share(iv());
  DigraphMap f(g, h, std::map<Label, Label>{{L("p"), L("0")}});
  ConstructionResult r = paper_cofiber(f);
  CHECK(r.result.vertex_count() == 4);
  CHECK(r.result.edge_count() == 6);
  CHECK(r.result.has_edge(Label::base(L("0")), Label::base(L("1"))));
  CHECK(r.result.has_edge(Label::base(L("0")), Label::mid(L("p"))));
  CHECK(r.result.has_edge(Label::mid(L("p")), Label::base(L("1"))));
  CHECK(r.result.has_edge(Label::mid(L("p")), Label::apex()));
  CHECK(r.result.has_edge(Label::base(L("0")), Label::apex()));
  CHECK(r.result.has_edge(Label::apex(), Label::base(L("1"))));
  CHECK(validate_map(r.map("base")));
  CHECK(validate_map(r.map("mid")));
}

TEST_CASE("pushout glues along the shared domain image") {
  DigraphPtr g = share(Digraph::point(L("p")));
  DigraphPtr h1 = share(iv()), h2 = share(c3());
  DigraphMap f1(g, h1, std::map<Label, Label>{{L("p"), L("0")}});
  DigraphMap f2(g, h2, std::map<Label, Label>{{L("p"), L("a")}});
  ConstructionResult r = pushout(f1, f2);
  CHECK(r.result.vertex_count() == 4);  // 2 + 3 - 1 shared
  CHECK(compose(r.map("inc0"), f1) == compose(r.map("inc1"), f2));
}

TEST_CASE("categorical cofiber collapses the top slice to Star") {
  DigraphPtr g = share(Digraph::point(L("p"))), h = share(iv());
  DigraphMap f(g, h, std::map<Label, Label>{{L("p"), L("0")}});
  ConstructionResult r = categorical_cofiber(f);
  CHECK(r.result.has_vertex(Label::star()));
  CHECK(validate_map(r.map("base")));
}

TEST_CASE("tube joins two reduced cylinders through one source slice") {
  DigraphPtr g = share(Digraph::point(L("p"))), h = share(iv());
  DigraphMap f(g, h, std::map<Label, Label>{{L("p"), L("0")}});
  DigraphMap k(g, h, std::map<Label, Label>{{L("p"), L("1")}});
  Digraph red = reduced_cylinder(f);
  CHECK(red.has_vertex(Label::src(L("p"))));
  CHECK(red.has_vertex(Label::base(L("0"))));
  ConstructionResult tube = mapping_tube(f, k);
  CHECK(validate_map(tube.map("src")));
  ConstructionResult joined = mapping_tube_union(f, k);
  CHECK(is_subdigraph(tube.result, joined.result));
  CHECK(is_subdigraph(with_base_labels(*h), joined.result));
  CHECK(validate_map(joined.map("base")));
  CHECK(validate_map(joined.map("src")));
}

TEST_CASE("gat variants glue the cylinder to a cone") {
  DigraphPtr g = share(Digraph::point(L("p"))), h = share(iv());
  DigraphMap f(g, h, std::map<Label, Label>{{L("p"), L("0")}});
  for (GatGlue glue : {GatGlue::Image, GatGlue::Base}) {
    ConstructionResult r = gat(f, glue);
    bool has_apex = false;  // the part tagging wraps it in a Pair
    for (const Label& v : r.result.vertices())
      if (v.text().find("Apex") != std::string::npos) has_apex = true;
    CHECK(has_apex);
    CHECK(r.result.vertex_count() >= 4);
  }
}

TEST_CASE("relabel requires injectivity") {
  Digraph g = iv();
  Digraph r = relabel(g, [](const Label& v) { return Label::base(v); });
  CHECK(r == with_base_labels(g));
  CHECK_THROWS_AS(relabel(g, [](const Label&) { return L("same"); }), Error);
}
