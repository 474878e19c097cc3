#include "doctest.h"

#include "diho/digraph.hpp"
#include "diho/error.hpp"

using namespace diho;

namespace {
Label L(const char* s) { return Label::leaf(s); }
}  // namespace

TEST_CASE("builder sorts, dedups, and declares edge endpoints") {
  Digraph g = Digraph::Builder()
                  .add_edge(L("b"), L("a"))
                  .add_edge(L("b"), L("a"))
                  .add_vertex(L("a"))
                  .add_vertex(L("c"))
                  .build();
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 1);
  CHECK(g.index_of(L("a")) == 0);
  CHECK(g.index_of(L("c")) == 2);
  CHECK(g.index_of(L("zz")) == -1);
  CHECK(g.has_edge(L("b"), L("a")));
  CHECK(!g.has_edge(L("a"), L("b")));
}

TEST_CASE("loops are rejected") {
  CHECK_THROWS_AS(Digraph::Builder().add_edge(L("a"), L("a")), Error);
}

TEST_CASE("neighbor lists are index-sorted") {
  Digraph g = Digraph::Builder()
                  .add_edge(L("a"), L("c"))
                  .add_edge(L("a"), L("b"))
                  .add_edge(L("b"), L("c"))
                  .build();
  CHECK(g.out_neighbors(0) == std::vector<int>{1, 2});
  CHECK(g.in_neighbors(2) == std::vector<int>{0, 1});
}

TEST_CASE("signature is canonical") {
  Digraph g1 = Digraph::Builder().add_edge(L("a"), L("b")).add_vertex(L("c")).build();
  Digraph g2 = Digraph::Builder().add_vertex(L("c")).add_edge(L("a"), L("b")).build();
  CHECK(g1 == g2);
  CHECK(g1.signature() == g2.signature());
}

TEST_CASE("containment predicates") {
  Digraph g = Digraph::Builder()
                  .add_edge(L("a"), L("b"))
                  .add_edge(L("b"), L("c"))
                  .build();
  Digraph x = Digraph::Builder().add_edge(L("a"), L("b")).build();
  Digraph y = Digraph::Builder().add_vertex(L("a")).add_vertex(L("b")).build();
  CHECK(is_subdigraph(x, g));
  CHECK(is_induced(x, g));
  CHECK(is_subdigraph(y, g));
  CHECK(!is_induced(y, g));
  CHECK(!is_subdigraph(g, x));
  CHECK(vertex_boundary(x, g) == std::vector<Label>{L("c")});
}

TEST_CASE("point and empty digraphs") {
  CHECK(Digraph().vertex_count() == 0);
  Digraph p = Digraph::point(L("p"));
  CHECK(p.vertex_count() == 1);
  CHECK(p.edge_count() == 0);
}
