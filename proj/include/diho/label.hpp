#ifndef DIHO_LABEL_HPP
#define DIHO_LABEL_HPP

#include <compare>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace diho {

/*
 * Vertex names form a small expression tree: user-supplied leaves plus the
 * tags the constructions introduce.  Every label owns a canonical rendering
 * (see text()); equality and the total order used everywhere are the string
 * order on that rendering, so iteration order never depends on construction
 * history.
 *
 * Grammar of the rendering:
 *   label := leaf | Apex | Star | Base(l) | Cyl(l) | Mid(l) | Src(l)
 *          | Cone(l) | Pair(l,l) | Class{l,...}
 *   leaf  := [A-Za-z0-9_]+   (tag names are reserved)
 * Class members are sorted and duplicate-free; a Class is never empty.
 */
class Label {
 public:
  enum class Tag { Leaf, Pair, Base, Cyl, Mid, Src, Cone, Apex, Star, Class };

  Label() = default;  // empty label, only valid as a placeholder

  static Label leaf(std::string_view name);
  static Label pair(const Label& a, const Label& b);
  static Label base(const Label& a);
  static Label cyl(const Label& a);
  static Label mid(const Label& a);
  static Label src(const Label& a);
  static Label cone(const Label& a);
  static Label apex();
  static Label star();
  static Label cls(std::vector<Label> members);  // sorts + dedups, rejects empty

  static Label parse(std::string_view text);

  Tag tag() const { return node_->tag; }
  const std::string& text() const { return node_->text; }
  const std::vector<Label>& children() const { return node_->kids; }
  const std::string& leaf_name() const { return node_->leaf; }
  bool empty() const { return node_ == nullptr; }

  bool operator==(const Label& o) const { return text() == o.text(); }
  std::strong_ordering operator<=>(const Label& o) const {
    return text() <=> o.text();
  }

 private:
  struct Node {
    Tag tag;
    std::string leaf;  // Leaf only
    std::vector<Label> kids;
    std::string text;
  };
  std::shared_ptr<const Node> node_;
  static Label make(Tag t, std::string leaf, std::vector<Label> kids);
};

bool is_valid_leaf_name(std::string_view s);

}  // namespace diho

#endif
