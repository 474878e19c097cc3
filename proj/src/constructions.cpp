#include "diho/constructions.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "diho/error.hpp"

namespace diho {

const DigraphMap& ConstructionResult::map(const std::string& name) const {
  for (const auto& [n, m] : maps)
    if (n == name) return m;
  throw Error(ErrorCode::UnknownLabel, "no canonical map named " + name);
}

Digraph relabel(const Digraph& g, const std::function<Label(const Label&)>& fn) {
  Digraph::Builder b;
  for (const auto& v : g.vertices()) b.add_vertex(fn(v));
  for (const auto& [a, c] : g.edge_labels()) b.add_edge(fn(a), fn(c));
  Digraph out = b.build();
  if (out.vertex_count() != g.vertex_count())
    throw Error(ErrorCode::UnknownLabel, "relabeling collapsed vertices");
  return out;
}

Digraph with_base_labels(const Digraph& g) {
  return relabel(g, [](const Label& v) { return Label::base(v); });
}

Digraph box_product(const Digraph& g, const Digraph& h) {
  Digraph::Builder b;
  for (const auto& u : g.vertices())
    for (const auto& v : h.vertices()) b.add_vertex(Label::pair(u, v));
  for (const auto& [u1, u2] : g.edge_labels())
    for (const auto& v : h.vertices())
      b.add_edge(Label::pair(u1, v), Label::pair(u2, v));
  for (const auto& [v1, v2] : h.edge_labels())
    for (const auto& u : g.vertices())
      b.add_edge(Label::pair(u, v1), Label::pair(u, v2));
  return b.build();
}

Digraph tensor_product(const Digraph& g, const Digraph& h) {
  Digraph::Builder b;
  for (const auto& u : g.vertices())
    for (const auto& v : h.vertices()) b.add_vertex(Label::pair(u, v));
  for (const auto& [u1, u2] : g.edge_labels())
    for (const auto& [v1, v2] : h.edge_labels())
      b.add_edge(Label::pair(u1, v1), Label::pair(u2, v2));
  return b.build();
}

std::pair<DigraphMap, DigraphMap> pair_projections(DigraphPtr product,
                                                   DigraphPtr g, DigraphPtr h) {
  std::map<Label, Label> a1, a2;
  for (const auto& v : product->vertices()) {
    if (v.tag() != Label::Tag::Pair)
      throw Error(ErrorCode::UnknownLabel,
                  "projection needs Pair-labeled vertices, got " + v.text());
    a1[v] = v.children()[0];
    a2[v] = v.children()[1];
  }
  return {DigraphMap(product, std::move(g), a1),
          DigraphMap(product, std::move(h), a2)};
}

DigraphMap box_slice(DigraphPtr g, DigraphPtr h, const Label& at) {
  if (!h->has_vertex(at))
    throw Error(ErrorCode::UnknownLabel, at.text() + " is not a vertex");
  auto prod = share(box_product(*g, *h));
  std::map<Label, Label> assign;
  for (const auto& u : g->vertices()) assign[u] = Label::pair(u, at);
  return DigraphMap(g, std::move(prod), assign);
}

Digraph digraph_union(const Digraph& g, const Digraph& h) {
  Digraph::Builder b;
  for (const auto& v : g.vertices()) b.add_vertex(v);
  for (const auto& v : h.vertices()) b.add_vertex(v);
  for (const auto& [a, c] : g.edge_labels()) b.add_edge(a, c);
  for (const auto& [a, c] : h.edge_labels()) b.add_edge(a, c);
  return b.build();
}

Digraph digraph_intersection(const Digraph& g, const Digraph& h) {
  Digraph::Builder b;
  for (const auto& v : g.vertices())
    if (h.has_vertex(v)) b.add_vertex(v);
  for (const auto& [a, c] : g.edge_labels())
    if (h.has_edge(a, c)) b.add_edge(a, c);
  return b.build();
}

ConstructionResult disjoint_union(const std::vector<Digraph>& parts) {
  ConstructionResult out;
  Digraph::Builder b;
  std::vector<Label> tags;
  for (size_t i = 0; i < parts.size(); ++i) {
    tags.push_back(Label::leaf(std::to_string(i)));
    for (const auto& v : parts[i].vertices())
      b.add_vertex(Label::pair(tags[i], v));
    for (const auto& [a, c] : parts[i].edge_labels())
      b.add_edge(Label::pair(tags[i], a), Label::pair(tags[i], c));
  }
  auto total = share(b.build());
  out.result = *total;
  for (size_t i = 0; i < parts.size(); ++i) {
    std::map<Label, Label> assign;
    for (const auto& v : parts[i].vertices()) assign[v] = Label::pair(tags[i], v);
    out.maps.emplace_back("inc" + std::to_string(i),
                          DigraphMap(share(parts[i]), total, assign));
  }
  return out;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int a) {
    while (parent[static_cast<size_t>(a)] != a) {
      parent[static_cast<size_t>(a)] = parent[static_cast<size_t>(parent[static_cast<size_t>(a)])];
      a = parent[static_cast<size_t>(a)];
    }
    return a;
  }
  void merge(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<size_t>(std::max(a, b))] = std::min(a, b);
  }
};

}  // namespace

ConstructionResult identification(
    const Digraph& ambient, const std::vector<std::pair<Label, Label>>& pairs) {
  const int n = ambient.vertex_count();
  UnionFind uf(n);
  for (const auto& [a, b] : pairs) {
    int ia = ambient.index_of(a), ib = ambient.index_of(b);
    if (ia < 0 || ib < 0)
      throw Error(ErrorCode::UnknownLabel,
                  "identification names a missing vertex: " +
                      (ia < 0 ? a.text() : b.text()));
    uf.merge(ia, ib);
  }

  std::map<int, std::vector<Label>> members;
  for (int i = 0; i < n; ++i) members[uf.find(i)].push_back(ambient.label_at(i));

  std::vector<Label> class_label(static_cast<size_t>(n));
  for (const auto& [root, mem] : members) {
    Label l = mem.size() == 1 ? mem[0] : Label::cls(mem);
    for (const auto& m : mem)
      class_label[static_cast<size_t>(ambient.index_of(m))] = l;
  }

  ConstructionResult out;
  Digraph::Builder b;
  for (const auto& [root, mem] : members)
    b.add_vertex(class_label[static_cast<size_t>(ambient.index_of(mem[0]))]);
  for (const auto& [ia, ib] : ambient.edges()) {
    if (uf.find(ia) == uf.find(ib)) continue;  // loop dropped
    b.add_edge(class_label[static_cast<size_t>(ia)], class_label[static_cast<size_t>(ib)]);
  }
  auto result = share(b.build());
  out.result = *result;

  /* Compatibility: an edge between classes must be realized by every pair of
   * representatives (or collapse).  Violations are reported, not fatal. */
  for (const auto& [ia, ib] : ambient.edges()) {
    if (uf.find(ia) == uf.find(ib)) continue;
    bool reported = false;
    for (const auto& u : members[uf.find(ia)]) {
      for (const auto& v : members[uf.find(ib)]) {
        if (u == v || ambient.has_edge(u, v)) continue;
        out.warnings.push_back(
            {"INCOMPATIBLE_RELATION",
             "edge " + ambient.label_at(ia).text() + ">" +
                 ambient.label_at(ib).text() + " has no counterpart " +
                 u.text() + ">" + v.text()});
        reported = true;
        break;
      }
      if (reported) break;
    }
  }

  std::map<Label, Label> assign;
  for (int i = 0; i < n; ++i)
    assign[ambient.label_at(i)] = class_label[static_cast<size_t>(i)];
  out.maps.emplace_back("quotient",
                        DigraphMap(share(ambient), result, assign));
  return out;
}

ConstructionResult quotient(const Digraph& g, const Digraph& x) {
  if (!is_subdigraph(x, g))
    throw Error(ErrorCode::NotSubdigraph, "quotient needs a sub-digraph");
  Digraph ambient = digraph_union(g, Digraph::point(Label::star()));
  std::vector<std::pair<Label, Label>> pairs;
  for (const auto& v : x.vertices()) pairs.emplace_back(v, Label::star());
  return identification(ambient, pairs);
}

ConstructionResult mapping_cylinder(const DigraphMap& f) {
  const Digraph& g = f.domain();
  const Digraph& h = f.codomain();
  Digraph::Builder b;
  for (const auto& v : g.vertices()) b.add_vertex(Label::cyl(v));
  for (const auto& v : h.vertices()) b.add_vertex(Label::base(v));
  for (const auto& [a, c] : h.edge_labels())
    b.add_edge(Label::base(a), Label::base(c));
  for (const auto& [a, c] : g.edge_labels())
    b.add_edge(Label::cyl(a), Label::cyl(c));
  for (const auto& v : g.vertices())
    b.add_edge(Label::cyl(v), Label::base(f.apply(v)));
  auto cyl = share(b.build());

  ConstructionResult out;
  out.result = *cyl;
  std::map<Label, Label> base, top, crush;
  for (const auto& v : h.vertices()) {
    base[v] = Label::base(v);
    crush[Label::base(v)] = v;
  }
  for (const auto& v : g.vertices()) {
    top[v] = Label::cyl(v);
    crush[Label::cyl(v)] = f.apply(v);
  }
  out.maps.emplace_back("base", DigraphMap(f.codomain_ptr(), cyl, base));
  out.maps.emplace_back("top", DigraphMap(f.domain_ptr(), cyl, top));
  out.maps.emplace_back("crush", DigraphMap(cyl, f.codomain_ptr(), crush));
  return out;
}

Digraph cylinder_extension(const DigraphMap& f) {
  const Digraph& g = f.domain();
  const Digraph& h = f.codomain();
  Digraph::Builder b;
  for (const auto& v : g.vertices()) b.add_vertex(Label::cyl(v));
  for (const auto& v : h.vertices()) b.add_vertex(Label::base(v));
  for (const auto& u : h.vertices())
    for (const auto& v : g.vertices()) {
      if (h.has_edge(u, f.apply(v))) b.add_edge(Label::base(u), Label::cyl(v));
      if (h.has_edge(f.apply(v), u)) b.add_edge(Label::cyl(v), Label::base(u));
    }
  return b.build();
}

ConstructionResult extended_mapping_cylinder(const DigraphMap& f) {
  ConstructionResult cyl = mapping_cylinder(f);
  auto total = share(digraph_union(cyl.result, cylinder_extension(f)));
  ConstructionResult out;
  out.result = *total;
  std::map<Label, Label> base, top, crush;
  for (const auto& v : f.codomain().vertices()) {
    base[v] = Label::base(v);
    crush[Label::base(v)] = v;
  }
  for (const auto& v : f.domain().vertices()) {
    top[v] = Label::cyl(v);
    crush[Label::cyl(v)] = f.apply(v);
  }
  out.maps.emplace_back("base", DigraphMap(f.codomain_ptr(), total, base));
  out.maps.emplace_back("top", DigraphMap(f.domain_ptr(), total, top));
  out.maps.emplace_back("crush", DigraphMap(total, f.codomain_ptr(), crush));
  return out;
}

ConstructionResult cone(const Digraph& g) {
  Digraph::Builder b;
  b.add_vertex(Label::apex());
  for (const auto& v : g.vertices()) b.add_vertex(Label::cone(v));
  for (const auto& [a, c] : g.edge_labels())
    b.add_edge(Label::cone(a), Label::cone(c));
  for (const auto& v : g.vertices())
    b.add_edge(Label::cone(v), Label::apex());
  auto cg = share(b.build());
  ConstructionResult out;
  out.result = *cg;
  std::map<Label, Label> top;
  for (const auto& v : g.vertices()) top[v] = Label::cone(v);
  out.maps.emplace_back("top", DigraphMap(share(g), cg, top));
  return out;
}

Digraph cone_extension(const Digraph& x, const Digraph& h) {
  if (!is_subdigraph(x, h))
    throw Error(ErrorCode::NotSubdigraph, "cone extension needs a sub-digraph");
  Digraph::Builder b;
  b.add_vertex(Label::apex());
  for (const auto& y : vertex_boundary(x, h)) {
    b.add_vertex(y);
    bool from = false, to = false;
    for (const auto& v : x.vertices()) {
      from = from || h.has_edge(v, y);
      to = to || h.has_edge(y, v);
    }
    if (from) b.add_edge(Label::apex(), y);
    if (to) b.add_edge(y, Label::apex());
  }
  return b.build();
}

ConstructionResult extended_cone(const Digraph& x, const Digraph& h) {
  ConstructionResult cx = cone(x);
  auto total = share(digraph_union(cx.result, cone_extension(x, h)));
  ConstructionResult out;
  out.result = *total;
  std::map<Label, Label> top;
  for (const auto& v : x.vertices()) top[v] = Label::cone(v);
  out.maps.emplace_back("top", DigraphMap(share(x), total, top));
  return out;
}

ConstructionResult paper_cofiber(const DigraphMap& f) {
  const Digraph& g = f.domain();
  const Digraph& h = f.codomain();
  std::set<Label> image;
  for (const auto& v : g.vertices()) image.insert(f.apply(v));

  Digraph::Builder b;
  b.add_vertex(Label::apex());
  for (const auto& v : h.vertices()) b.add_vertex(Label::base(v));
  for (const auto& v : g.vertices()) b.add_vertex(Label::mid(v));
  for (const auto& [a, c] : h.edge_labels())
    b.add_edge(Label::base(a), Label::base(c));
  for (const auto& [a, c] : g.edge_labels())
    b.add_edge(Label::mid(a), Label::mid(c));
  for (const auto& v : g.vertices())
    b.add_edge(Label::base(f.apply(v)), Label::mid(v));
  for (const auto& u : h.vertices())
    for (const auto& v : g.vertices()) {
      if (h.has_edge(u, f.apply(v))) b.add_edge(Label::base(u), Label::mid(v));
      if (h.has_edge(f.apply(v), u)) b.add_edge(Label::mid(v), Label::base(u));
    }
  for (const auto& v : g.vertices())
    b.add_edge(Label::mid(v), Label::apex());
  for (const auto& u : image) b.add_edge(Label::base(u), Label::apex());
  for (const auto& y : h.vertices()) {
    if (image.count(y)) continue;
    bool from = false, to = false;
    for (const auto& x : image) {
      from = from || h.has_edge(x, y);
      to = to || h.has_edge(y, x);
    }
    if (from) b.add_edge(Label::apex(), Label::base(y));
    if (to) b.add_edge(Label::base(y), Label::apex());
  }
  auto cf = share(b.build());

  ConstructionResult out;
  out.result = *cf;
  std::map<Label, Label> base, mid;
  for (const auto& v : h.vertices()) base[v] = Label::base(v);
  for (const auto& v : g.vertices()) mid[v] = Label::mid(v);
  out.maps.emplace_back("base", DigraphMap(f.codomain_ptr(), cf, base));
  out.maps.emplace_back("mid", DigraphMap(f.domain_ptr(), cf, mid));
  return out;
}

ConstructionResult pushout(const DigraphMap& f1, const DigraphMap& f2) {
  if (!(f1.domain() == f2.domain()))
    throw Error(ErrorCode::DomainMismatch, "pushout legs share their domain");
  ConstructionResult du = disjoint_union({f1.codomain(), f2.codomain()});
  const DigraphMap& i1 = du.map("inc0");
  const DigraphMap& i2 = du.map("inc1");
  std::vector<std::pair<Label, Label>> pairs;
  for (const auto& v : f1.domain().vertices())
    pairs.emplace_back(i1.apply(f1.apply(v)), i2.apply(f2.apply(v)));
  ConstructionResult glued = identification(du.result, pairs);
  ConstructionResult out;
  out.result = glued.result;
  out.warnings = glued.warnings;
  const DigraphMap& q = glued.map("quotient");
  out.maps.emplace_back("inc0", compose(q, i1));
  out.maps.emplace_back("inc1", compose(q, i2));
  return out;
}

ConstructionResult categorical_cofiber(const DigraphMap& f) {
  const Digraph& h = f.codomain();
  std::set<Label> image;
  for (const auto& v : f.domain().vertices()) image.insert(f.apply(v));
  Digraph::Builder b;
  b.add_vertex(Label::star());
  for (const auto& v : h.vertices()) b.add_vertex(Label::base(v));
  for (const auto& [a, c] : h.edge_labels())
    b.add_edge(Label::base(a), Label::base(c));
  for (const auto& u : image) b.add_edge(Label::star(), Label::base(u));
  auto cf = share(b.build());
  ConstructionResult out;
  out.result = *cf;
  std::map<Label, Label> base;
  for (const auto& v : h.vertices()) base[v] = Label::base(v);
  out.maps.emplace_back("base", DigraphMap(f.codomain_ptr(), cf, base));
  return out;
}

Digraph reduced_cylinder(const DigraphMap& f) {
  const Digraph& g = f.domain();
  Digraph::Builder b;
  for (const auto& v : g.vertices()) {
    b.add_vertex(Label::src(v));
    b.add_vertex(Label::base(f.apply(v)));
    b.add_edge(Label::src(v), Label::base(f.apply(v)));
  }
  for (const auto& [a, c] : g.edge_labels()) {
    b.add_edge(Label::src(a), Label::src(c));
    if (!(f.apply(a) == f.apply(c)))
      b.add_edge(Label::base(f.apply(a)), Label::base(f.apply(c)));
  }
  return b.build();
}

namespace {

/* Extension edges between all of Base(H) and the Src slice, through f. */
Digraph src_extension(const DigraphMap& f) {
  const Digraph& g = f.domain();
  const Digraph& h = f.codomain();
  Digraph::Builder b;
  for (const auto& v : g.vertices()) b.add_vertex(Label::src(v));
  for (const auto& v : h.vertices()) b.add_vertex(Label::base(v));
  for (const auto& u : h.vertices())
    for (const auto& v : g.vertices()) {
      if (h.has_edge(u, f.apply(v))) b.add_edge(Label::base(u), Label::src(v));
      if (h.has_edge(f.apply(v), u)) b.add_edge(Label::src(v), Label::base(u));
    }
  return b.build();
}

}  // namespace

ConstructionResult mapping_tube(const DigraphMap& f, const DigraphMap& g) {
  if (!f.same_signature(g))
    throw Error(ErrorCode::SignatureMismatch, "tube legs share their signature");
  Digraph tube = digraph_union(
      digraph_union(reduced_cylinder(f), reduced_cylinder(g)),
      digraph_union(src_extension(f), src_extension(g)));
  auto total = share(std::move(tube));
  ConstructionResult out;
  out.result = *total;
  std::map<Label, Label> src;
  for (const auto& v : f.domain().vertices()) src[v] = Label::src(v);
  out.maps.emplace_back("src", DigraphMap(f.domain_ptr(), total, src));
  return out;
}

ConstructionResult mapping_tube_union(const DigraphMap& f, const DigraphMap& g) {
  ConstructionResult tube = mapping_tube(f, g);
  auto total = share(digraph_union(with_base_labels(f.codomain()), tube.result));
  ConstructionResult out;
  out.result = *total;
  std::map<Label, Label> base, src;
  for (const auto& v : f.codomain().vertices()) base[v] = Label::base(v);
  for (const auto& v : f.domain().vertices()) src[v] = Label::src(v);
  out.maps.emplace_back("base", DigraphMap(f.codomain_ptr(), total, base));
  out.maps.emplace_back("src", DigraphMap(f.domain_ptr(), total, src));
  return out;
}

ConstructionResult gat(const DigraphMap& f, GatGlue glue) {
  ConstructionResult cyl = mapping_cylinder(f);
  ConstructionResult cof = paper_cofiber(f);
  ConstructionResult du = disjoint_union({cyl.result, cof.result});
  const DigraphMap& i1 = du.map("inc0");
  const DigraphMap& i2 = du.map("inc1");
  std::set<Label> glued;
  if (glue == GatGlue::Image) {
    for (const auto& v : f.domain().vertices()) glued.insert(f.apply(v));
  } else {
    for (const auto& v : f.codomain().vertices()) glued.insert(v);
  }
  std::vector<std::pair<Label, Label>> pairs;
  for (const auto& v : glued)
    pairs.emplace_back(i1.apply(Label::base(v)), i2.apply(Label::base(v)));
  ConstructionResult out = identification(du.result, pairs);
  out.maps.clear();
  return out;
}

}  // namespace diho
