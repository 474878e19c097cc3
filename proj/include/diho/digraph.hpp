#ifndef DIHO_DIGRAPH_HPP
#define DIHO_DIGRAPH_HPP

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "diho/label.hpp"

namespace diho {

/*
 * Finite loop-free digraph over labeled vertices.  Immutable once built.
 * Vertices are kept sorted by label; edges are sorted index pairs; every
 * accessor iterates in that order, which pins down all downstream output.
 */
class Digraph {
 public:
  class Builder {
   public:
    Builder& add_vertex(const Label& v);
    /* Endpoints are declared implicitly.  Loops are rejected. */
    Builder& add_edge(const Label& from, const Label& to);
    Digraph build() const;

   private:
    std::vector<Label> verts_;
    std::vector<std::pair<Label, Label>> edges_;
  };

  Digraph();  // empty digraph
  static Digraph point(const Label& v);

  int vertex_count() const { return static_cast<int>(verts_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const std::vector<Label>& vertices() const { return verts_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  std::vector<std::pair<Label, Label>> edge_labels() const;

  bool has_vertex(const Label& v) const { return index_of(v) >= 0; }
  int index_of(const Label& v) const;  // -1 when absent
  const Label& label_at(int i) const { return verts_[static_cast<size_t>(i)]; }

  bool has_edge(int from, int to) const;
  bool has_edge(const Label& from, const Label& to) const;

  const std::vector<int>& out_neighbors(int v) const { return out_[static_cast<size_t>(v)]; }
  const std::vector<int>& in_neighbors(int v) const { return in_[static_cast<size_t>(v)]; }

  bool operator==(const Digraph& o) const {
    return verts_ == o.verts_ && edges_ == o.edges_;
  }

  /* Canonical one-line rendering (sorted vertices; sorted edge pairs). */
  std::string signature() const;

 private:
  std::vector<Label> verts_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> out_, in_;
  friend class Builder;
};

using DigraphPtr = std::shared_ptr<const Digraph>;
DigraphPtr share(Digraph g);

/* X is a sub-digraph of G: vertex and edge sets are contained in G's. */
bool is_subdigraph(const Digraph& x, const Digraph& g);
/* Additionally every G-edge between X-vertices is an X-edge. */
bool is_induced(const Digraph& x, const Digraph& g);
/* Vertices of G outside X touching X by an edge in either direction. */
std::vector<Label> vertex_boundary(const Digraph& x, const Digraph& g);

/* Line digraph on n+1 vertices 0..n; word[i] = '+' gives i -> i+1, '-' the reverse. */
class LineDigraph {
 public:
  explicit LineDigraph(std::string word);
  int length() const { return static_cast<int>(word_.size()); }
  const std::string& word() const { return word_; }
  Digraph to_digraph() const;

 private:
  std::string word_;
};

}  // namespace diho

#endif
