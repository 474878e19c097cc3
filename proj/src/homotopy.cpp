#include "diho/homotopy.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <unordered_map>
#include <unordered_set>

#include "diho/constructions.hpp"

namespace diho {

namespace {

struct VecHash {
  size_t operator()(const std::vector<int>& v) const {
    size_t h = 1469598103934665603ull;
    for (int x : v) {
      h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

void require_same_signature(const DigraphMap& f, const DigraphMap& g) {
  if (!f.same_signature(g))
    throw Error(ErrorCode::SignatureMismatch,
                "maps do not share domain and codomain");
}

/* Edges of dom incident to v whose other endpoint was assigned earlier. */
struct PrefixEdges {
  /* (earlier vertex, true when the edge leaves v) */
  std::vector<std::vector<std::pair<int, bool>>> at;
  explicit PrefixEdges(const Digraph& dom) {
    at.resize(static_cast<size_t>(dom.vertex_count()));
    for (const auto& [a, b] : dom.edges()) {
      if (a < b)
        at[static_cast<size_t>(b)].push_back({a, false});
      else
        at[static_cast<size_t>(a)].push_back({b, true});
    }
  }
};

bool prefix_ok(const Digraph& cod, const PrefixEdges& pe,
               const std::vector<int>& cur, int v, int image) {
  for (const auto& [u, leaving] : pe.at[static_cast<size_t>(v)]) {
    int other = cur[static_cast<size_t>(u)];
    if (leaving) {
      if (image != other && !cod.has_edge(image, other)) return false;
    } else {
      if (other != image && !cod.has_edge(other, image)) return false;
    }
  }
  return true;
}

/*
 * Enumerate all valid maps dom -> cod whose image at v lies in cands[v],
 * in lexicographic order.  fn returns false to stop early.  Each complete
 * map charges one budget unit.
 */
bool enumerate_constrained(const Digraph& dom, const Digraph& cod,
                           const std::vector<std::vector<int>>& cands,
                           Budget& budget,
                           const std::function<bool(const std::vector<int>&)>& fn) {
  const int n = dom.vertex_count();
  std::vector<int> cur(static_cast<size_t>(n), -1);
  PrefixEdges pe(dom);
  std::function<bool(int)> go = [&](int v) -> bool {
    if (v == n) {
      budget.charge();
      return fn(cur);
    }
    for (int image : cands[static_cast<size_t>(v)]) {
      if (!prefix_ok(cod, pe, cur, v, image)) continue;
      cur[static_cast<size_t>(v)] = image;
      if (!go(v + 1)) return false;
    }
    cur[static_cast<size_t>(v)] = -1;
    return true;
  };
  return go(0);
}

std::vector<int> step_candidates(const Digraph& cod, int image, char dir) {
  const auto& nbrs = dir == '+' ? cod.out_neighbors(image) : cod.in_neighbors(image);
  std::vector<int> cands;
  cands.reserve(nbrs.size() + 1);
  bool placed = false;
  for (int x : nbrs) {
    if (!placed && image < x) {
      cands.push_back(image);
      placed = true;
    }
    cands.push_back(x);
  }
  if (!placed) cands.push_back(image);
  return cands;
}

/* All valid maps one step away from f in direction dir. */
bool for_each_adjacent(const Digraph& dom, const Digraph& cod,
                       const std::vector<int>& f, char dir, Budget& budget,
                       const std::function<bool(const std::vector<int>&)>& fn) {
  std::vector<std::vector<int>> cands(f.size());
  for (size_t v = 0; v < f.size(); ++v)
    cands[v] = step_candidates(cod, f[v], dir);
  return enumerate_constrained(dom, cod, cands, budget, fn);
}

}  // namespace

OrientationSet one_step(const DigraphMap& f, const DigraphMap& g) {
  require_same_signature(f, g);
  OrientationSet o{true, true};
  const Digraph& cod = f.codomain();
  for (size_t v = 0; v < f.targets().size(); ++v) {
    int a = f.targets()[v], b = g.targets()[v];
    if (a == b) continue;
    if (!cod.has_edge(a, b)) o.plus = false;
    if (!cod.has_edge(b, a)) o.minus = false;
    if (!o.any()) break;
  }
  return o;
}

std::vector<DigraphMap> enumerate_maps(const Digraph& g, const Digraph& h,
                                       Budget& budget) {
  auto dom = share(g);
  auto cod = share(h);
  if (cod->vertex_count() == 0 && dom->vertex_count() > 0) return {};
  std::vector<int> all(static_cast<size_t>(h.vertex_count()));
  for (size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  std::vector<std::vector<int>> cands(static_cast<size_t>(g.vertex_count()), all);
  std::vector<DigraphMap> out;
  enumerate_constrained(*dom, *cod, cands, budget,
                        [&](const std::vector<int>& t) {
                          out.emplace_back(dom, cod, t);
                          return true;
                        });
  return out;
}

bool Homotopy::validate() const {
  if (maps.size() != word.size() + 1 || maps.empty()) return false;
  for (const auto& m : maps)
    if (!m.same_signature(maps.front()) || !validate_map(m)) return false;
  for (size_t i = 0; i < word.size(); ++i) {
    OrientationSet o = one_step(maps[i], maps[i + 1]);
    if (word[i] == '+' ? !o.plus : !o.minus) return false;
  }
  return true;
}

DigraphMap Homotopy::replay() const {
  const Digraph& dom = maps.front().domain();
  auto box = share(box_product(dom, LineDigraph(word).to_digraph()));
  std::map<Label, Label> assign;
  for (size_t i = 0; i < maps.size(); ++i) {
    Label stage = Label::leaf(std::to_string(i));
    for (const auto& v : dom.vertices())
      assign[Label::pair(v, stage)] = maps[i].apply(v);
  }
  return DigraphMap(std::move(box), maps.front().codomain_ptr(), assign);
}

Homotopy Homotopy::reversed() const {
  Homotopy out;
  out.maps.assign(maps.rbegin(), maps.rend());
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    out.word.push_back(*it == '+' ? '-' : '+');
  return out;
}

Homotopy concat(const Homotopy& a, const Homotopy& b) {
  if (!(a.back() == b.front()))
    throw Error(ErrorCode::SignatureMismatch,
                "tracks do not meet at a common map");
  Homotopy out = a;
  out.word += b.word;
  out.maps.insert(out.maps.end(), b.maps.begin() + 1, b.maps.end());
  return out;
}

namespace {

struct BfsOutcome {
  bool found = false;
  std::vector<int> hit;
  std::unordered_map<std::vector<int>, std::pair<std::vector<int>, char>, VecHash>
      parent;
  std::set<std::vector<int>> reached;
};

/* Deterministic breadth-first walk of the one-step graph starting at f. */
BfsOutcome map_space_bfs(const DigraphMap& f, Budget& budget,
                         const std::function<bool(const std::vector<int>&)>& is_goal,
                         bool want_reached) {
  const Digraph& dom = f.domain();
  const Digraph& cod = f.codomain();
  BfsOutcome out;
  std::unordered_set<std::vector<int>, VecHash> seen;
  std::queue<std::vector<int>> fifo;
  seen.insert(f.targets());
  if (want_reached) out.reached.insert(f.targets());
  if (is_goal && is_goal(f.targets())) {
    out.found = true;
    out.hit = f.targets();
    return out;
  }
  fifo.push(f.targets());
  while (!fifo.empty()) {
    std::vector<int> cur = fifo.front();
    fifo.pop();
    for (char dir : {'+', '-'}) {
      bool keep_going = for_each_adjacent(
          dom, cod, cur, dir, budget, [&](const std::vector<int>& nxt) {
            if (!seen.insert(nxt).second) return true;
            out.parent.emplace(nxt, std::make_pair(cur, dir));
            if (want_reached) out.reached.insert(nxt);
            if (is_goal && is_goal(nxt)) {
              out.found = true;
              out.hit = nxt;
              return false;
            }
            fifo.push(nxt);
            return true;
          });
      if (!keep_going) return out;
    }
  }
  return out;
}

Homotopy rebuild_track(const DigraphMap& f, const BfsOutcome& bfs) {
  std::vector<std::pair<std::vector<int>, char>> chain;
  std::vector<int> cur = bfs.hit;
  while (!(cur == f.targets())) {
    const auto& [prev, dir] = bfs.parent.at(cur);
    chain.push_back({cur, dir});
    cur = prev;
  }
  Homotopy track;
  track.maps.emplace_back(f.domain_ptr(), f.codomain_ptr(), f.targets());
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
    track.word.push_back(it->second);
    track.maps.emplace_back(f.domain_ptr(), f.codomain_ptr(), it->first);
  }
  return track;
}

}  // namespace

std::optional<Homotopy> are_homotopic(const DigraphMap& f, const DigraphMap& g,
                                      Budget& budget) {
  require_same_signature(f, g);
  BfsOutcome bfs = map_space_bfs(
      f, budget, [&](const std::vector<int>& t) { return t == g.targets(); },
      false);
  if (!bfs.found) return std::nullopt;
  return rebuild_track(f, bfs);
}

bool are_weakly_homotopic(const DigraphMap& f, const DigraphMap& g,
                          Budget& budget) {
  /* Finite domains: the box over any line digraph is again finite, so the
   * weak relation adds nothing. */
  return are_homotopic(f, g, budget).has_value();
}

std::set<std::vector<int>> homotopy_component(const DigraphMap& f,
                                              Budget& budget) {
  BfsOutcome bfs = map_space_bfs(f, budget, nullptr, true);
  return bfs.reached;
}

ClassTable::ClassTable(DigraphPtr domain, DigraphPtr codomain,
                       std::vector<std::vector<int>> maps,
                       std::vector<int> class_of,
                       std::vector<int> representative)
    : dom_(std::move(domain)),
      cod_(std::move(codomain)),
      maps_(std::move(maps)),
      class_of_(std::move(class_of)),
      representative_(std::move(representative)) {}

int ClassTable::index_of(const std::vector<int>& targets) const {
  auto it = std::lower_bound(maps_.begin(), maps_.end(), targets);
  if (it == maps_.end() || *it != targets) return -1;
  return static_cast<int>(it - maps_.begin());
}

int ClassTable::class_of_map(const DigraphMap& m) const {
  if (!(m.domain() == *dom_) || !(m.codomain() == *cod_))
    throw Error(ErrorCode::SignatureMismatch, "map does not fit this table");
  int i = index_of(m.targets());
  if (i < 0) throw Error(ErrorCode::InvalidMap, "assignment is not a digraph map");
  return class_of_[static_cast<size_t>(i)];
}

DigraphMap ClassTable::map_at(int index) const {
  return DigraphMap(dom_, cod_, maps_[static_cast<size_t>(index)]);
}

DigraphMap ClassTable::representative(int cls) const {
  return map_at(representative_[static_cast<size_t>(cls)]);
}

ClassTable homotopy_classes(const Digraph& g, const Digraph& h, Budget& budget) {
  auto dom = share(g);
  auto cod = share(h);
  std::vector<std::vector<int>> maps;
  if (!(cod->vertex_count() == 0 && dom->vertex_count() > 0)) {
    std::vector<int> all(static_cast<size_t>(h.vertex_count()));
    for (size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
    std::vector<std::vector<int>> cands(static_cast<size_t>(g.vertex_count()), all);
    enumerate_constrained(*dom, *cod, cands, budget,
                          [&](const std::vector<int>& t) {
                            maps.push_back(t);
                            return true;
                          });
  }

  std::vector<int> root(maps.size());
  for (size_t i = 0; i < root.size(); ++i) root[i] = static_cast<int>(i);
  std::function<int(int)> find = [&](int a) {
    while (root[static_cast<size_t>(a)] != a) {
      root[static_cast<size_t>(a)] = root[static_cast<size_t>(root[static_cast<size_t>(a)])];
      a = root[static_cast<size_t>(a)];
    }
    return a;
  };
  auto merge = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) root[static_cast<size_t>(std::max(a, b))] = std::min(a, b);
  };

  /* '+' neighbors cover both directions once every map is a source. */
  for (size_t i = 0; i < maps.size(); ++i) {
    for_each_adjacent(*dom, *cod, maps[i], '+', budget,
                      [&](const std::vector<int>& nxt) {
                        auto it = std::lower_bound(maps.begin(), maps.end(), nxt);
                        merge(static_cast<int>(i),
                              static_cast<int>(it - maps.begin()));
                        return true;
                      });
  }

  std::vector<int> class_of(maps.size(), -1);
  std::vector<int> reps;
  for (size_t i = 0; i < maps.size(); ++i) {
    int r = find(static_cast<int>(i));
    if (class_of[static_cast<size_t>(r)] < 0) {
      class_of[static_cast<size_t>(r)] = static_cast<int>(reps.size());
      reps.push_back(r);
    }
    class_of[i] = class_of[static_cast<size_t>(r)];
  }
  return ClassTable(dom, cod, std::move(maps), std::move(class_of),
                    std::move(reps));
}

bool is_null_class(const ClassTable& table, int cls) {
  if (table.domain().vertex_count() == 0) return true;
  for (int v = 0; v < table.codomain().vertex_count(); ++v) {
    std::vector<int> constant(static_cast<size_t>(table.domain().vertex_count()), v);
    int i = table.index_of(constant);
    if (i >= 0 && table.class_of_index(i) == cls) return true;
  }
  return false;
}

std::optional<EquivalenceWitness> are_equivalent(const Digraph& g,
                                                 const Digraph& h,
                                                 Budget& budget) {
  ClassTable gg = homotopy_classes(g, g, budget);
  ClassTable hh = homotopy_classes(h, h, budget);
  ClassTable gh = homotopy_classes(g, h, budget);
  ClassTable hg = homotopy_classes(h, g, budget);
  if (gh.map_count() == 0 || hg.map_count() == 0) {
    if (g.vertex_count() == 0 && h.vertex_count() == 0) {
      DigraphMap none(share(g), share(h), std::vector<int>{});
      DigraphMap none_back(share(h), share(g), std::vector<int>{});
      return EquivalenceWitness{none, none_back, Homotopy{"", {compose(none_back, none)}},
                                Homotopy{"", {compose(none, none_back)}}};
    }
    return std::nullopt;
  }
  int idg = gg.class_of_map(DigraphMap::identity(share(g)));
  int idh = hh.class_of_map(DigraphMap::identity(share(h)));
  for (int cg = 0; cg < gh.class_count(); ++cg) {
    DigraphMap to = gh.representative(cg);
    for (int ch = 0; ch < hg.class_count(); ++ch) {
      DigraphMap from = hg.representative(ch);
      if (gg.class_of_map(compose(from, to)) != idg) continue;
      if (hh.class_of_map(compose(to, from)) != idh) continue;
      auto back = are_homotopic(compose(from, to),
                                DigraphMap::identity(share(g)), budget);
      auto forward = are_homotopic(compose(to, from),
                                   DigraphMap::identity(share(h)), budget);
      return EquivalenceWitness{to, from, std::move(*back), std::move(*forward)};
    }
  }
  return std::nullopt;
}

std::optional<Homotopy> is_contractible(const Digraph& g, Budget& budget) {
  if (g.vertex_count() == 0) return std::nullopt;  // no constant maps exist
  DigraphMap id = DigraphMap::identity(share(g));
  auto is_const = [](const std::vector<int>& t) {
    for (size_t i = 1; i < t.size(); ++i)
      if (t[i] != t[0]) return false;
    return true;
  };
  BfsOutcome bfs = map_space_bfs(id, budget, is_const, false);
  if (!bfs.found) return std::nullopt;
  return rebuild_track(id, bfs);
}

HepInstance::HepInstance(DigraphPtr g, DigraphPtr x, DigraphMap f0,
                         Homotopy steps)
    : whole(std::move(g)), part(std::move(x)), start(std::move(f0)),
      track(std::move(steps)) {
  if (!is_subdigraph(*part, *whole))
    throw Error(ErrorCode::NotSubdigraph, "deformed part must sit inside the whole");
  if (!(start.domain() == *whole))
    throw Error(ErrorCode::SignatureMismatch, "start map must live on the whole digraph");
  if (!validate_map(start))
    throw Error(ErrorCode::InvalidMap, "start map does not respect edges");
  if (!track.validate())
    throw Error(ErrorCode::InvalidMap, "deformation track is not valid");
  if (!(track.front().domain() == *part) ||
      !(track.front().codomain() == start.codomain()))
    throw Error(ErrorCode::SignatureMismatch, "track must deform maps on the part");
  if (!(restrict_map(start, part) == track.front()))
    throw Error(ErrorCode::RestrictionMismatch,
                "track does not start at the restriction of the start map");
}

namespace {

struct HepKey {
  int consumed;
  int inserted;
  std::vector<int> map;
  bool operator<(const HepKey& o) const {
    if (consumed != o.consumed) return consumed < o.consumed;
    if (inserted != o.inserted) return inserted < o.inserted;
    return map < o.map;
  }
};

}  // namespace

std::optional<Homotopy> check_hep(const HepInstance& inst, Budget& budget,
                                  int pad_limit) {
  const Digraph& g = *inst.whole;
  const Digraph& h = inst.start.codomain();
  const int total = static_cast<int>(inst.track.length());

  /* part vertex index -> whole vertex index */
  std::vector<int> embed;
  for (const auto& v : inst.part->vertices()) embed.push_back(g.index_of(v));
  std::vector<int> pin(static_cast<size_t>(g.vertex_count()), -1);
  for (size_t i = 0; i < embed.size(); ++i)
    pin[static_cast<size_t>(embed[i])] = static_cast<int>(i);

  std::set<HepKey> seen;
  std::vector<std::pair<char, std::vector<int>>> chosen;

  /* Candidates for the next whole-digraph map: part vertices are pinned to
   * the prescribed stage, the rest move with the step orientation. */
  auto stage_candidates = [&](const std::vector<int>& cur, int stage, char dir) {
    std::vector<std::vector<int>> cands(cur.size());
    for (size_t v = 0; v < cur.size(); ++v) {
      if (pin[v] >= 0) {
        int want = inst.track.maps[static_cast<size_t>(stage)].apply_index(pin[v]);
        int have = cur[v];
        bool ok = want == have ||
                  (dir == '+' ? h.has_edge(have, want) : h.has_edge(want, have));
        if (ok) cands[v] = {want};
      } else {
        cands[v] = step_candidates(h, cur[v], dir);
      }
    }
    return cands;
  };

  std::function<bool(const std::vector<int>&, int, int)> go =
      [&](const std::vector<int>& cur, int consumed, int inserted) -> bool {
    if (consumed == total) return true;
    if (!seen.insert({consumed, inserted, cur}).second) return false;

    /* consume the next prescribed step */
    {
      char dir = inst.track.word[static_cast<size_t>(consumed)];
      auto cands = stage_candidates(cur, consumed + 1, dir);
      bool found = false;
      enumerate_constrained(g, h, cands, budget, [&](const std::vector<int>& nxt) {
        chosen.push_back({dir, nxt});
        if (go(nxt, consumed + 1, inserted)) {
          found = true;
          return false;
        }
        chosen.pop_back();
        return true;
      });
      if (found) return true;
    }

    /* or insert a step that is stationary on the part */
    if (inserted < pad_limit) {
      for (char dir : {'+', '-'}) {
        auto cands = stage_candidates(cur, consumed, dir);
        bool found = false;
        enumerate_constrained(g, h, cands, budget, [&](const std::vector<int>& nxt) {
          if (nxt == cur) return true;  // skip the trivial stationary step
          chosen.push_back({dir, nxt});
          if (go(nxt, consumed, inserted + 1)) {
            found = true;
            return false;
          }
          chosen.pop_back();
          return true;
        });
        if (found) return true;
      }
    }
    return false;
  };

  if (!go(inst.start.targets(), 0, 0)) return std::nullopt;

  Homotopy out;
  out.maps.emplace_back(inst.start.domain_ptr(), inst.start.codomain_ptr(),
                        inst.start.targets());
  for (const auto& [dir, m] : chosen) {
    out.word.push_back(dir);
    out.maps.emplace_back(inst.start.domain_ptr(), inst.start.codomain_ptr(), m);
  }
  return out;
}

}  // namespace diho
