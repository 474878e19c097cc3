#include "diho/digraph.hpp"

#include <algorithm>

#include "diho/error.hpp"

namespace diho {

Digraph::Builder& Digraph::Builder::add_vertex(const Label& v) {
  if (v.empty()) throw Error(ErrorCode::UnknownLabel, "empty vertex label");
  verts_.push_back(v);
  return *this;
}

Digraph::Builder& Digraph::Builder::add_edge(const Label& from, const Label& to) {
  if (from == to)
    throw Error(ErrorCode::InvalidEdge, "loop edge at " + from.text());
  verts_.push_back(from);
  verts_.push_back(to);
  edges_.emplace_back(from, to);
  return *this;
}

Digraph Digraph::Builder::build() const {
  Digraph g;
  g.verts_ = verts_;
  std::sort(g.verts_.begin(), g.verts_.end());
  g.verts_.erase(std::unique(g.verts_.begin(), g.verts_.end()), g.verts_.end());
  for (const auto& [a, b] : edges_)
    g.edges_.emplace_back(g.index_of(a), g.index_of(b));
  std::sort(g.edges_.begin(), g.edges_.end());
  g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());
  g.out_.assign(g.verts_.size(), {});
  g.in_.assign(g.verts_.size(), {});
  for (const auto& [a, b] : g.edges_) {
    g.out_[static_cast<size_t>(a)].push_back(b);
    g.in_[static_cast<size_t>(b)].push_back(a);
  }
  return g;
}

Digraph::Digraph() = default;

Digraph Digraph::point(const Label& v) {
  return Builder().add_vertex(v).build();
}

int Digraph::index_of(const Label& v) const {
  auto it = std::lower_bound(verts_.begin(), verts_.end(), v);
  if (it == verts_.end() || !(*it == v)) return -1;
  return static_cast<int>(it - verts_.begin());
}

bool Digraph::has_edge(int from, int to) const {
  const auto& outs = out_[static_cast<size_t>(from)];
  return std::binary_search(outs.begin(), outs.end(), to);
}

bool Digraph::has_edge(const Label& from, const Label& to) const {
  int a = index_of(from), b = index_of(to);
  return a >= 0 && b >= 0 && has_edge(a, b);
}

std::vector<std::pair<Label, Label>> Digraph::edge_labels() const {
  std::vector<std::pair<Label, Label>> out;
  out.reserve(edges_.size());
  for (const auto& [a, b] : edges_)
    out.emplace_back(verts_[static_cast<size_t>(a)], verts_[static_cast<size_t>(b)]);
  return out;
}

std::string Digraph::signature() const {
  std::string s = "V[";
  for (const auto& v : verts_) {
    s += v.text();
    s += ';';
  }
  s += "]E[";
  for (const auto& [a, b] : edges_) {
    s += verts_[static_cast<size_t>(a)].text();
    s += '>';
    s += verts_[static_cast<size_t>(b)].text();
    s += ';';
  }
  s += ']';
  return s;
}

DigraphPtr share(Digraph g) { return std::make_shared<const Digraph>(std::move(g)); }

bool is_subdigraph(const Digraph& x, const Digraph& g) {
  for (const auto& v : x.vertices())
    if (!g.has_vertex(v)) return false;
  for (const auto& [a, b] : x.edge_labels())
    if (!g.has_edge(a, b)) return false;
  return true;
}

bool is_induced(const Digraph& x, const Digraph& g) {
  if (!is_subdigraph(x, g)) return false;
  for (const auto& a : x.vertices())
    for (const auto& b : x.vertices())
      if (!(a == b) && g.has_edge(a, b) && !x.has_edge(a, b)) return false;
  return true;
}

std::vector<Label> vertex_boundary(const Digraph& x, const Digraph& g) {
  if (!is_subdigraph(x, g))
    throw Error(ErrorCode::NotSubdigraph, "boundary needs a sub-digraph");
  std::vector<Label> out;
  for (const auto& v : g.vertices()) {
    if (x.has_vertex(v)) continue;
    bool touches = false;
    for (const auto& w : x.vertices())
      if (g.has_edge(v, w) || g.has_edge(w, v)) {
        touches = true;
        break;
      }
    if (touches) out.push_back(v);
  }
  return out;
}

LineDigraph::LineDigraph(std::string word) : word_(std::move(word)) {
  for (char c : word_)
    if (c != '+' && c != '-')
      throw Error(ErrorCode::ParseError,
                  "orientation word may contain only + and -");
}

Digraph LineDigraph::to_digraph() const {
  Digraph::Builder b;
  for (int i = 0; i <= length(); ++i) b.add_vertex(Label::leaf(std::to_string(i)));
  for (int i = 0; i < length(); ++i) {
    Label lo = Label::leaf(std::to_string(i));
    Label hi = Label::leaf(std::to_string(i + 1));
    if (word_[static_cast<size_t>(i)] == '+')
      b.add_edge(lo, hi);
    else
      b.add_edge(hi, lo);
  }
  return b.build();
}

}  // namespace diho
