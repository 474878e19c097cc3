#include "doctest.h"

#include "diho/error.hpp"
#include "diho/label.hpp"

using namespace diho;

TEST_CASE("leaf labels round-trip through text") {
  Label a = Label::leaf("a");
  CHECK(a.text() == "a");
  CHECK(Label::parse("a") == a);
}

TEST_CASE("structured labels render as tag trees") {
  Label p = Label::pair(Label::leaf("a"), Label::leaf("0"));
  CHECK(p.text() == "Pair(a,0)");
  CHECK(Label::base(Label::leaf("x")).text() == "Base(x)");
  CHECK(Label::cyl(Label::leaf("x")).text() == "Cyl(x)");
  CHECK(Label::mid(Label::leaf("x")).text() == "Mid(x)");
  CHECK(Label::src(p).text() == "Src(Pair(a,0))");
  CHECK(Label::cone(Label::leaf("x")).text() == "Cone(x)");
  CHECK(Label::apex().text() == "Apex");
  CHECK(Label::star().text() == "Star");
}

TEST_CASE("every structured form parses back to itself") {
  for (const char* t :
       {"Pair(a,b)", "Base(a)", "Cyl(Pair(a,0))", "Mid(p)", "Src(q)",
        "Cone(a)", "Apex", "Star", "Class{Star,a,b}"}) {
    CHECK(Label::parse(t).text() == t);
  }
}

TEST_CASE("class labels sort and dedup their members") {
  Label c = Label::cls({Label::leaf("b"), Label::leaf("a"), Label::leaf("b")});
  CHECK(c.text() == "Class{a,b}");
  CHECK_THROWS_AS(Label::cls({}), Error);
}

TEST_CASE("ordering follows the rendered text") {
  CHECK(Label::apex() < Label::cone(Label::leaf("a")));
  CHECK(Label::cone(Label::leaf("a")) < Label::leaf("a"));  // 'C' < 'a'
  CHECK(Label::leaf("a") < Label::leaf("b"));
  CHECK(!(Label::leaf("a") < Label::leaf("a")));
}

TEST_CASE("malformed label text is rejected") {
  CHECK_THROWS_AS(Label::parse("Pair(a"), Error);
  CHECK_THROWS_AS(Label::parse("Class{}"), Error);
  CHECK_THROWS_AS(Label::parse(""), Error);
}
