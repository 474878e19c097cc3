#include "doctest.h"

#include "diho/brown.hpp"
#include "diho/constructions.hpp"
#include "diho/error.hpp"

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

TEST_CASE("class tables are memoized per domain signature") {
  brown::Representable rep(c3());
  Budget budget;
  const ClassTable& t1 = rep.classes_for(iv(), budget);
  const ClassTable& t2 = rep.classes_for(iv(), budget);
  CHECK(&t1 == &t2);
  CHECK(t1.map_count() == 6);
  CHECK(t1.class_count() == 1);
}

TEST_CASE("pulled-back classes are composition classes") {
  brown::Representable rep(c3());
  Budget budget;
  DigraphPtr y = share(iv());
  DigraphMap u(y, rep.target_ptr(),
               std::map<Label, Label>{{L("0"), L("a")}, {L("1"), L("b")}});
  DigraphPtr k = share(Digraph::point(L("k")));
  DigraphMap f0(k, y, std::map<Label, Label>{{L("k"), L("0")}});
  DigraphMap f1(k, y, std::map<Label, Label>{{L("k"), L("1")}});
  int c0 = brown::yoneda_class(rep, u, f0, budget);
  int c1 = brown::yoneda_class(rep, u, f1, budget);
  CHECK(c0 == c1);  // [point, triangle] has a single class
  const ClassTable& table = rep.classes_for(*k, budget);
  CHECK(c0 == table.class_of_map(compose(u, f0)));
}

TEST_CASE("additivity audit on a two-part union") {
  Budget budget;
  brown::AdditivityReport r =
      brown::audit_additivity(c3(), {Digraph::point(L("p")), iv()}, budget);
  CHECK(r.whole_classes == 1);
  CHECK(r.tuple_count == 1);
  CHECK(r.bijective());
}

TEST_CASE("restriction audit over the split triangle") {
  Digraph g1 = Digraph::Builder().add_edge(L("a"), L("b")).add_edge(L("b"), L("c")).build();
  Digraph g2 = Digraph::Builder().add_edge(L("c"), L("a")).build();
  Budget budget;
  brown::MayerVietorisReport r = brown::audit_mayer_vietoris(c3(), g1, g2, budget);
  CHECK(r.union_classes == 2);
  CHECK(r.fibered_pairs == 1);
  CHECK(r.pairs_agree);
  CHECK(r.onto);
  CHECK(r.missed.empty());
}

TEST_CASE("cofiber audit of an identity map is exact") {
  DigraphPtr p = share(Digraph::point(L("p")));
  Budget budget;
  brown::CofiberReport r =
      brown::audit_cofiber(iv(), DigraphMap::identity(p), budget);
  CHECK(r.forward_null);
  CHECK(r.backward_complete);
  CHECK(r.unliftable.empty());
  CHECK(r.cofiber_classes == 1);
}

TEST_CASE("chain audit runs both thirds") {
  Digraph g = Digraph::Builder().add_edge(L("a"), L("b")).build();
  Digraph h = Digraph::Builder().add_edge(L("b"), L("c")).build();
  Budget budget{50'000'000, 0};
  brown::ChainReport r = brown::audit_cofiber_chain(iv(), g, h, budget);
  CHECK(r.first.forward_null);
  CHECK(r.second.forward_null);
}

TEST_CASE("the base stage adjoins one test copy per class") {
  Digraph empty;
  Digraph z = iv();
  DigraphMap u0(share(empty), share(z), std::map<Label, Label>{});
  Budget budget;
  brown::BaseReport r =
      brown::base_step(empty, u0, z, {Digraph::point(L("k"))}, budget);
  CHECK(r.surjective);
  REQUIRE(r.class_counts.size() == 1);
  CHECK(r.class_counts[0] == 1);
  CHECK(r.state.y->vertex_count() == 1);
  CHECK(validate_map(r.state.u()));
}

TEST_CASE("the inductive step merges a split pair through a tube") {
  Digraph y0 = Digraph::Builder().add_vertex(L("p")).add_vertex(L("q")).build();
  Digraph z = Digraph::point(L("z"));
  brown::StageState st;
  st.y = share(y0);
  st.z = share(z);
  st.u_targets = {0, 0};
  st.tests = {Digraph::point(L("k"))};
  Budget budget;
  brown::StepReport r = brown::inductive_step(st, budget);
  CHECK(r.attached == 1);
  CHECK(r.failed == 0);
  CHECK(r.postcondition_ok);
  CHECK(r.state.y->vertex_count() == 3);
  CHECK(r.state.y->edge_count() == 2);
  CHECK(r.state.next_tube == 1);
  REQUIRE(r.state.log.size() == 1);
  const brown::AttachmentRecord& rec = r.state.log[0];
  CHECK(rec.tube == 0);
  CHECK(rec.extended);
  CHECK(rec.word == "-+");
  CHECK(validate_map(r.state.u()));

  brown::StepReport again = brown::inductive_step(r.state, budget);
  CHECK(again.attached == 0);
  CHECK(*again.state.y == *r.state.y);
}

TEST_CASE("stage states survive the text round-trip") {
  Digraph y0 = Digraph::Builder().add_vertex(L("p")).add_vertex(L("q")).build();
  brown::StageState st;
  st.y = share(y0);
  st.z = share(Digraph::point(L("z")));
  st.u_targets = {0, 0};
  st.tests = {Digraph::point(L("k")), iv()};
  Budget budget;
  brown::StepReport r = brown::inductive_step(st, budget);
  std::string text = brown::format_stage(r.state);
  brown::StageState back = brown::parse_stage(text);
  CHECK(*back.y == *r.state.y);
  CHECK(*back.z == *r.state.z);
  CHECK(back.u_targets == r.state.u_targets);
  CHECK(back.tests.size() == r.state.tests.size());
  CHECK(back.next_tube == r.state.next_tube);
  CHECK(brown::format_stage(back) == text);
}

TEST_CASE("stage parsing rejects garbage with a typed error") {
  CHECK_THROWS_AS(brown::parse_stage("not json"), Error);
  CHECK_THROWS_AS(brown::parse_stage("{}"), Error);
}
