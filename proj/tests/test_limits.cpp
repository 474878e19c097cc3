#include "doctest.h"

#include "diho/error.hpp"
#include "diho/limits.hpp"

using namespace diho;
using namespace diho::limits;

namespace {

/* Two-token fork: R maps onto both X and Y, X maps into Y. */
FiniteSystem fork() {
  SystemBuilder b;
  b.add_object("R", {"r0", "r1"});
  b.add_object("X", {"x0", "x1"});
  b.add_object("Y", {"y0"});
  b.add_morphism("R", "X", {{"r0", "x0"}, {"r1", "x1"}});
  b.add_morphism("R", "Y", {{"r0", "y0"}, {"r1", "y0"}});
  b.add_morphism("X", "Y", {{"x0", "y0"}, {"x1", "y0"}});
  return b.build();
}

}  // namespace

TEST_CASE("builder enforces named objects and total assignments") {
  SystemBuilder b;
  b.add_object("X", {"x0"});
  b.add_morphism("X", "Z", {{"x0", "z0"}});
  CHECK_THROWS_AS(b.build(), Error);
  SystemBuilder partial;
  partial.add_object("X", {"x0", "x1"});
  partial.add_object("Y", {"y0"});
  partial.add_morphism("X", "Y", {{"x0", "y0"}});
  CHECK_THROWS_AS(partial.build(), Error);
}

TEST_CASE("builder rejects hom tables that are not composition-closed") {
  SystemBuilder b;
  b.add_object("A", {"a"});
  b.add_object("B", {"b"});
  b.add_object("C", {"c"});
  b.add_morphism("A", "B", {{"a", "b"}});
  b.add_morphism("B", "C", {{"b", "c"}});
  CHECK_THROWS_AS(b.build(), Error);  // missing the composite A -> C
  b.add_morphism("A", "C", {{"a", "c"}});
  CHECK_NOTHROW(b.build());
}

TEST_CASE("system reports cover domination, surjectivity, and emptiness") {
  SystemReport r = validate_system(fork());
  CHECK(r.common_sources);
  CHECK(r.all_surjective);
  CHECK(r.all_nonempty);

  SystemBuilder b;
  b.add_object("X", {"x0", "x1"});
  b.add_object("Y", {"y0", "y1"});
  b.add_morphism("X", "Y", {{"x0", "y0"}, {"x1", "y0"}});
  SystemReport nr = validate_system(b.build());
  CHECK(!nr.all_surjective);
  CHECK(nr.non_surjective.size() == 1);

  SystemBuilder two;
  two.add_object("X", {"x0"});
  two.add_object("Y", {"y0"});
  SystemReport tr = validate_system(two.build());
  CHECK(!tr.common_sources);
}

TEST_CASE("compatible families of the fork") {
  std::vector<LimitElement> lim = inverse_limit(fork());
  // a family is pinned by its R-coordinate
  CHECK(lim.size() == 2);
  for (const auto& el : lim) CHECK(el.size() == 3);
}

TEST_CASE("cofinality and the restriction comparison") {
  FiniteSystem s = fork();
  SystemBuilder b;
  b.add_object("R", {"r0", "r1"});
  FiniteSystem r_only = b.build();
  CHECK(is_cofinal(r_only, s));
  RestrictionReport rep = restriction_check(r_only, s);
  CHECK(rep.cofinal);
  CHECK(rep.whole_count == 2);
  CHECK(rep.sub_count == 2);
  CHECK(rep.bijective());

  SystemBuilder b2;
  b2.add_object("X", {"x0", "x1"});
  FiniteSystem x_only = b2.build();
  CHECK(!is_cofinal(x_only, s));  // nothing maps into R

  SystemBuilder stranger;
  stranger.add_object("Q", {"q"});
  CHECK_THROWS_AS(restriction_check(stranger.build(), s), Error);
}

TEST_CASE("surjective chains have witnessed nonempty limits") {
  SystemBuilder b;
  b.add_object("S0", {"a"});
  b.add_object("S1", {"a", "b"});
  b.add_object("S2", {"a", "b", "c"});
  b.add_morphism("S1", "S0", {{"a", "a"}, {"b", "a"}});
  b.add_morphism("S2", "S1", {{"a", "a"}, {"b", "b"}, {"c", "a"}});
  b.add_morphism("S2", "S0", {{"a", "a"}, {"b", "a"}, {"c", "a"}});
  FiniteSystem chain = b.build();
  LimitElement w = sequence_limit_witness(chain);
  std::vector<LimitElement> lim = inverse_limit(chain);
  CHECK(!lim.empty());
  CHECK(std::find(lim.begin(), lim.end(), w) != lim.end());
}

TEST_CASE("closure category flags hold on a surjective fork") {
  ClosureResult c = closure_category(fork());
  CHECK(c.at_most_one);
  CHECK(c.common_sources);
  CHECK(c.all_onto);
  CHECK(c.base_embeds);
  CHECK(!c.homs.empty());
}
