#include "diho/label.hpp"

#include <algorithm>

#include "diho/error.hpp"

namespace diho {

namespace {

const char* kReserved[] = {"Pair", "Base", "Cyl",  "Mid",  "Src",
                           "Cone", "Apex", "Star", "Class"};

bool is_reserved(std::string_view s) {
  for (const char* r : kReserved)
    if (s == r) return true;
  return false;
}

bool leaf_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9') || c == '_';
}

std::string render(Label::Tag t, const std::string& leaf,
                   const std::vector<Label>& kids) {
  using Tag = Label::Tag;
  switch (t) {
    case Tag::Leaf: return leaf;
    case Tag::Apex: return "Apex";
    case Tag::Star: return "Star";
    case Tag::Pair: return "Pair(" + kids[0].text() + "," + kids[1].text() + ")";
    case Tag::Base: return "Base(" + kids[0].text() + ")";
    case Tag::Cyl:  return "Cyl(" + kids[0].text() + ")";
    case Tag::Mid:  return "Mid(" + kids[0].text() + ")";
    case Tag::Src:  return "Src(" + kids[0].text() + ")";
    case Tag::Cone: return "Cone(" + kids[0].text() + ")";
    case Tag::Class: {
      std::string out = "Class{";
      for (size_t i = 0; i < kids.size(); ++i) {
        if (i) out += ',';
        out += kids[i].text();
      }
      out += '}';
      return out;
    }
  }
  return {};
}

}  // namespace

bool is_valid_leaf_name(std::string_view s) {
  if (s.empty() || is_reserved(s)) return false;
  return std::all_of(s.begin(), s.end(), leaf_char);
}

Label Label::make(Tag t, std::string leaf, std::vector<Label> kids) {
  auto n = std::make_shared<Node>();
  n->tag = t;
  n->leaf = std::move(leaf);
  n->kids = std::move(kids);
  n->text = render(t, n->leaf, n->kids);
  Label l;
  l.node_ = std::move(n);
  return l;
}

Label Label::leaf(std::string_view name) {
  if (!is_valid_leaf_name(name))
    throw Error(ErrorCode::ParseError,
                "bad leaf name '" + std::string(name) + "'");
  return make(Tag::Leaf, std::string(name), {});
}

Label Label::pair(const Label& a, const Label& b) { return make(Tag::Pair, {}, {a, b}); }
Label Label::base(const Label& a) { return make(Tag::Base, {}, {a}); }
Label Label::cyl(const Label& a) { return make(Tag::Cyl, {}, {a}); }
Label Label::mid(const Label& a) { return make(Tag::Mid, {}, {a}); }
Label Label::src(const Label& a) { return make(Tag::Src, {}, {a}); }
Label Label::cone(const Label& a) { return make(Tag::Cone, {}, {a}); }
Label Label::apex() { return make(Tag::Apex, {}, {}); }
Label Label::star() { return make(Tag::Star, {}, {}); }

Label Label::cls(std::vector<Label> members) {
  if (members.empty())
    throw Error(ErrorCode::ParseError, "Class label needs at least one member");
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return make(Tag::Class, {}, std::move(members));
}

namespace {

struct Parser {
  std::string_view s;
  size_t pos = 0;

  [[noreturn]] void fail(const std::string& why) {
    throw Error(ErrorCode::ParseError,
                why + " at offset " + std::to_string(pos) + " in label '" +
                    std::string(s) + "'");
  }

  char peek() const { return pos < s.size() ? s[pos] : '\0'; }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos;
  }

  std::string word() {
    size_t start = pos;
    while (pos < s.size() && leaf_char(s[pos])) ++pos;
    if (pos == start) fail("expected identifier");
    return std::string(s.substr(start, pos - start));
  }

  Label label() {
    std::string w = word();
    if (w == "Apex") return Label::apex();
    if (w == "Star") return Label::star();
    if (w == "Pair") {
      expect('(');
      Label a = label();
      expect(',');
      Label b = label();
      expect(')');
      return Label::pair(a, b);
    }
    if (w == "Base" || w == "Cyl" || w == "Mid" || w == "Src" || w == "Cone") {
      expect('(');
      Label a = label();
      expect(')');
      if (w == "Base") return Label::base(a);
      if (w == "Cyl") return Label::cyl(a);
      if (w == "Mid") return Label::mid(a);
      if (w == "Src") return Label::src(a);
      return Label::cone(a);
    }
    if (w == "Class") {
      expect('{');
      std::vector<Label> members;
      members.push_back(label());
      while (peek() == ',') {
        ++pos;
        members.push_back(label());
      }
      expect('}');
      return Label::cls(std::move(members));
    }
    return Label::leaf(w);
  }
};

}  // namespace

Label Label::parse(std::string_view text) {
  Parser p{text};
  Label l = p.label();
  if (p.pos != text.size()) p.fail("trailing characters");
  return l;
}

}  // namespace diho
