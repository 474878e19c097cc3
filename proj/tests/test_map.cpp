#include "doctest.h"

#include "diho/digraph.hpp"
#include "diho/error.hpp"
#include "diho/map.hpp"

using namespace diho;

namespace {
Label L(const char* s) { return Label::leaf(s); }

Digraph chain3() {
  return Digraph::Builder().add_edge(L("a"), L("b")).add_edge(L("b"), L("c")).build();
}
}  // namespace

TEST_CASE("maps collapse or preserve each edge") {
  DigraphPtr g = share(chain3());
  DigraphMap fold(g, g, std::map<Label, Label>{{L("a"), L("a")},
                                               {L("b"), L("b")},
                                               {L("c"), L("b")}});
  CHECK(validate_map(fold));  // c->b collapses the edge b->c
  DigraphMap swap(g, g, std::map<Label, Label>{{L("a"), L("b")},
                                               {L("b"), L("a")},
                                               {L("c"), L("c")}});
  CHECK(!validate_map(swap));  // would need an edge b->a
}

TEST_CASE("assignment must cover the domain and land in the codomain") {
  DigraphPtr g = share(chain3());
  CHECK_THROWS_AS(DigraphMap(g, g, std::map<Label, Label>{{L("a"), L("a")}}),
                  Error);
  CHECK_THROWS_AS(DigraphMap(g, g, std::map<Label, Label>{{L("a"), L("zz")},
                                                          {L("b"), L("b")},
                                                          {L("c"), L("c")}}),
                  Error);
}

TEST_CASE("identity, constants, and composition") {
  DigraphPtr g = share(chain3());
  DigraphMap id = DigraphMap::identity(g);
  CHECK(is_identity(id));
  CHECK(validate_map(id));
  DigraphMap cb = DigraphMap::constant(g, g, L("b"));
  CHECK(cb.is_constant());
  CHECK(validate_map(cb));
  CHECK(compose(cb, id) == cb);
  CHECK(compose(id, cb) == cb);
  CHECK(is_identity(compose(id, id)));
}

TEST_CASE("restriction keeps the sub-digraph's vertices") {
  DigraphPtr g = share(chain3());
  DigraphPtr x = share(Digraph::Builder().add_edge(L("a"), L("b")).build());
  DigraphMap cb = DigraphMap::constant(g, g, L("b"));
  DigraphMap r = restrict_map(cb, x);
  CHECK(r.domain() == *x);
  CHECK(r.apply(L("a")) == L("b"));
  CHECK(r.is_constant());
}

TEST_CASE("describe is stable and readable") {
  DigraphPtr g = share(chain3());
  DigraphMap id = DigraphMap::identity(g);
  CHECK(id.describe() == id.describe());
  CHECK(id.describe().find("a>a") != std::string::npos);
}

TEST_CASE("composition requires matching middles") {
  DigraphPtr g = share(chain3());
  DigraphPtr p = share(Digraph::point(L("p")));
  DigraphMap into(p, g, std::map<Label, Label>{{L("p"), L("a")}});
  DigraphMap out = DigraphMap::constant(g, p, L("p"));
  CHECK(is_identity(compose(out, into)));
  CHECK_THROWS_AS(compose(into, into), Error);
}
