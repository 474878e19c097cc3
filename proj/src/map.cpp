#include "diho/map.hpp"

#include "diho/error.hpp"

namespace diho {

DigraphMap::DigraphMap(DigraphPtr domain, DigraphPtr codomain,
                       const std::map<Label, Label>& assignment)
    : dom_(std::move(domain)), cod_(std::move(codomain)) {
  targets_.reserve(static_cast<size_t>(dom_->vertex_count()));
  for (const auto& v : dom_->vertices()) {
    auto it = assignment.find(v);
    if (it == assignment.end())
      throw Error(ErrorCode::AssignmentIncomplete, "no image for " + v.text());
    int t = cod_->index_of(it->second);
    if (t < 0)
      throw Error(ErrorCode::UnknownTarget,
                  it->second.text() + " is not a codomain vertex");
    targets_.push_back(t);
  }
  for (const auto& [src, dst] : assignment) {
    (void)dst;
    if (!dom_->has_vertex(src))
      throw Error(ErrorCode::UnknownLabel,
                  src.text() + " is not a domain vertex");
  }
}

DigraphMap::DigraphMap(DigraphPtr domain, DigraphPtr codomain,
                       std::vector<int> targets)
    : dom_(std::move(domain)), cod_(std::move(codomain)), targets_(std::move(targets)) {
  if (targets_.size() != static_cast<size_t>(dom_->vertex_count()))
    throw Error(ErrorCode::AssignmentIncomplete, "target vector has wrong size");
  for (int t : targets_)
    if (t < 0 || t >= cod_->vertex_count())
      throw Error(ErrorCode::UnknownTarget, "target index out of range");
}

DigraphMap DigraphMap::identity(DigraphPtr g) {
  std::vector<int> t(static_cast<size_t>(g->vertex_count()));
  for (size_t i = 0; i < t.size(); ++i) t[i] = static_cast<int>(i);
  DigraphPtr copy = g;
  return DigraphMap(std::move(copy), std::move(g), std::move(t));
}

DigraphMap DigraphMap::constant(DigraphPtr domain, DigraphPtr codomain,
                                const Label& target) {
  int t = codomain->index_of(target);
  if (t < 0)
    throw Error(ErrorCode::UnknownTarget,
                target.text() + " is not a codomain vertex");
  std::vector<int> ts(static_cast<size_t>(domain->vertex_count()), t);
  return DigraphMap(std::move(domain), std::move(codomain), std::move(ts));
}

Label DigraphMap::apply(const Label& v) const {
  int i = dom_->index_of(v);
  if (i < 0)
    throw Error(ErrorCode::UnknownLabel, v.text() + " is not a domain vertex");
  return cod_->label_at(apply_index(i));
}

bool DigraphMap::is_constant() const {
  for (size_t i = 1; i < targets_.size(); ++i)
    if (targets_[i] != targets_[0]) return false;
  return !targets_.empty();
}

std::string DigraphMap::describe() const {
  std::string s;
  for (int i = 0; i < dom_->vertex_count(); ++i) {
    s += dom_->label_at(i).text();
    s += '>';
    s += cod_->label_at(apply_index(i)).text();
    s += ';';
  }
  return s;
}

bool validate_map(const DigraphMap& m) {
  for (const auto& [a, b] : m.domain().edges()) {
    int fa = m.apply_index(a), fb = m.apply_index(b);
    if (fa != fb && !m.codomain().has_edge(fa, fb)) return false;
  }
  return true;
}

DigraphMap compose(const DigraphMap& g, const DigraphMap& f) {
  if (!(f.codomain() == g.domain()))
    throw Error(ErrorCode::SignatureMismatch,
                "composition needs matching middle digraph");
  std::vector<int> t(f.targets().size());
  for (size_t i = 0; i < t.size(); ++i)
    t[i] = g.apply_index(f.apply_index(static_cast<int>(i)));
  return DigraphMap(f.domain_ptr(), g.codomain_ptr(), std::move(t));
}

DigraphMap restrict_map(const DigraphMap& m, DigraphPtr x) {
  if (!is_subdigraph(*x, m.domain()))
    throw Error(ErrorCode::NotSubdigraph, "restriction needs a sub-digraph");
  std::vector<int> t;
  t.reserve(static_cast<size_t>(x->vertex_count()));
  for (const auto& v : x->vertices())
    t.push_back(m.apply_index(m.domain().index_of(v)));
  return DigraphMap(std::move(x), m.codomain_ptr(), std::move(t));
}

bool is_identity(const DigraphMap& m) {
  if (!(m.domain() == m.codomain())) return false;
  for (size_t i = 0; i < m.targets().size(); ++i)
    if (m.targets()[i] != static_cast<int>(i)) return false;
  return true;
}

}  // namespace diho
