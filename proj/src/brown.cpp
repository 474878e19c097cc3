#include "diho/brown.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "diho/io.hpp"
#include "json.hpp"

namespace diho::brown {

const ClassTable& Representable::classes_for(const Digraph& k, Budget& budget) {
  std::string key = k.signature();
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;
  ClassTable t = homotopy_classes(k, *z_, budget);
  return memo_.emplace(std::move(key), std::move(t)).first->second;
}

int yoneda_class(Representable& rep, const DigraphMap& u, const DigraphMap& f,
                 Budget& budget) {
  const ClassTable& t = rep.classes_for(f.domain(), budget);
  return t.class_of_map(compose(u, f));
}

AdditivityReport audit_additivity(const Digraph& z,
                                  const std::vector<Digraph>& parts,
                                  Budget& budget) {
  AdditivityReport rep;
  ConstructionResult du = disjoint_union(parts);
  ClassTable whole = homotopy_classes(du.result, z, budget);
  rep.whole_classes = static_cast<size_t>(whole.class_count());

  Representable target(z);
  std::vector<const ClassTable*> part_tables;
  size_t prod = 1;
  for (const Digraph& p : parts) {
    const ClassTable& t = target.classes_for(p, budget);
    part_tables.push_back(&t);
    prod *= static_cast<size_t>(t.class_count());
  }
  rep.tuple_count = prod;

  std::set<std::vector<int>> seen;
  bool injective = true;
  for (int c = 0; c < whole.class_count(); ++c) {
    DigraphMap m = whole.representative(c);
    std::vector<int> tuple;
    for (size_t i = 0; i < parts.size(); ++i) {
      const DigraphMap& inc = du.map("inc" + std::to_string(i));
      tuple.push_back(part_tables[i]->class_of_map(compose(m, inc)));
    }
    if (!seen.insert(tuple).second) injective = false;
  }
  rep.injective = injective;
  rep.surjective = seen.size() == prod;
  return rep;
}

MayerVietorisReport audit_mayer_vietoris(const Digraph& z, const Digraph& g1,
                                         const Digraph& g2, Budget& budget) {
  MayerVietorisReport rep;
  Digraph whole = digraph_union(g1, g2);
  Digraph common = digraph_intersection(g1, g2);
  DigraphPtr p1 = share(g1), p2 = share(g2), pc = share(common);

  ClassTable tu = homotopy_classes(whole, z, budget);
  ClassTable t1 = homotopy_classes(g1, z, budget);
  ClassTable t2 = homotopy_classes(g2, z, budget);
  ClassTable tc = homotopy_classes(common, z, budget);
  rep.union_classes = static_cast<size_t>(tu.class_count());

  /* Restricting a whole class to a piece is class-invariant, so the
   * representative stands in for the class. */
  std::vector<int> down1(static_cast<size_t>(t1.class_count()));
  std::vector<int> down2(static_cast<size_t>(t2.class_count()));
  for (int a = 0; a < t1.class_count(); ++a)
    down1[static_cast<size_t>(a)] =
        tc.class_of_map(restrict_map(t1.representative(a), pc));
  for (int b = 0; b < t2.class_count(); ++b)
    down2[static_cast<size_t>(b)] =
        tc.class_of_map(restrict_map(t2.representative(b), pc));

  std::set<std::pair<int, int>> fibered;
  for (int a = 0; a < t1.class_count(); ++a)
    for (int b = 0; b < t2.class_count(); ++b)
      if (down1[static_cast<size_t>(a)] == down2[static_cast<size_t>(b)])
        fibered.insert({a, b});
  rep.fibered_pairs = fibered.size();

  std::set<std::pair<int, int>> image;
  for (int c = 0; c < tu.class_count(); ++c) {
    DigraphMap m = tu.representative(c);
    int a = t1.class_of_map(restrict_map(m, p1));
    int b = t2.class_of_map(restrict_map(m, p2));
    if (!fibered.count({a, b})) rep.pairs_agree = false;
    image.insert({a, b});
  }
  rep.onto = true;
  for (const auto& p : fibered)
    if (!image.count(p)) {
      rep.onto = false;
      rep.missed.push_back(p);
    }
  return rep;
}

CofiberReport audit_cofiber(const Digraph& z, const DigraphMap& f,
                            Budget& budget) {
  CofiberReport rep;
  ConstructionResult cof = paper_cofiber(f);
  const DigraphMap& inc = cof.map("base");

  ClassTable tcof = homotopy_classes(cof.result, z, budget);
  ClassTable th = homotopy_classes(f.codomain(), z, budget);
  ClassTable tg = homotopy_classes(f.domain(), z, budget);
  rep.cofiber_classes = static_cast<size_t>(tcof.class_count());
  rep.codomain_classes = static_cast<size_t>(th.class_count());
  rep.domain_classes = static_cast<size_t>(tg.class_count());

  std::set<int> image;
  for (int c = 0; c < tcof.class_count(); ++c) {
    DigraphMap down = compose(tcof.representative(c), inc);
    image.insert(th.class_of_map(down));
    int pulled = tg.class_of_map(compose(down, f));
    if (!is_null_class(tg, pulled)) rep.forward_null = false;
  }
  for (int x = 0; x < th.class_count(); ++x) {
    int pulled = tg.class_of_map(compose(th.representative(x), f));
    if (is_null_class(tg, pulled) && !image.count(x)) {
      rep.backward_complete = false;
      rep.unliftable.push_back(x);
    }
  }
  return rep;
}

ChainReport audit_cofiber_chain(const Digraph& z, const Digraph& g,
                                const Digraph& h, Budget& budget) {
  ConstructionResult du = disjoint_union({g, h});
  Digraph whole = digraph_union(g, h);
  DigraphPtr wp = share(whole);

  /* Fold the tagged copies back onto the shared-label union. */
  const DigraphMap& i0 = du.map("inc0");
  const DigraphMap& i1 = du.map("inc1");
  std::map<Label, Label> fold;
  for (const Label& v : g.vertices()) fold[i0.apply(v)] = v;
  for (const Label& v : h.vertices()) fold[i1.apply(v)] = v;
  DigraphMap phi(share(du.result), wp, fold);

  ChainReport rep;
  rep.first = audit_cofiber(z, phi, budget);
  ConstructionResult cphi = paper_cofiber(phi);
  rep.second = audit_cofiber(z, cphi.map("base"), budget);
  return rep;
}

namespace {

/* Copy tag that cannot collide with vertices already present; wrap maps a
 * (tag, vertex) pair to the label the construction will actually use. */
std::string fresh_tag(
    const Digraph& existing, std::string name, const std::vector<Label>& verts,
    const std::function<Label(const std::string&, const Label&)>& wrap) {
  auto clashes = [&](const std::string& n) {
    for (const Label& v : verts)
      if (existing.has_vertex(wrap(n, v))) return true;
    return false;
  };
  while (clashes(name)) name += "x";
  return name;
}

Label copy_label(const std::string& tag, const Label& v) {
  return Label::pair(Label::leaf(tag), v);
}

Label tube_label(const std::string& tag, const Label& v) {
  return Label::src(Label::pair(Label::leaf(tag), v));
}

/* Lexicographically first valid assignment given per-vertex candidates;
 * vertices are decided in index order against earlier neighbors. */
std::optional<std::vector<int>> constrained_assignment(
    const Digraph& dom, const Digraph& cod,
    const std::vector<std::vector<int>>& cands, Budget& budget) {
  int n = dom.vertex_count();
  std::vector<int> cur(static_cast<size_t>(n), -1);
  std::function<bool(int)> go = [&](int i) -> bool {
    budget.charge();
    if (i == n) return true;
    for (int t : cands[static_cast<size_t>(i)]) {
      bool ok = true;
      for (int j : dom.out_neighbors(i)) {
        if (j >= i) continue;
        int s = cur[static_cast<size_t>(j)];
        if (t != s && !cod.has_edge(t, s)) { ok = false; break; }
      }
      if (ok)
        for (int j : dom.in_neighbors(i)) {
          if (j >= i) continue;
          int s = cur[static_cast<size_t>(j)];
          if (s != t && !cod.has_edge(s, t)) { ok = false; break; }
        }
      if (!ok) continue;
      cur[static_cast<size_t>(i)] = t;
      if (go(i + 1)) return true;
      cur[static_cast<size_t>(i)] = -1;
    }
    return false;
  };
  if (!go(0)) return std::nullopt;
  return cur;
}

}  // namespace

BaseReport base_step(const Digraph& y0, const DigraphMap& u0, const Digraph& z,
                     const std::vector<Digraph>& tests, Budget& budget) {
  if (!(u0.domain() == y0) || !(u0.codomain() == z))
    throw Error(ErrorCode::SignatureMismatch,
                "stage map must go from the stage digraph to the target");
  if (!validate_map(u0))
    throw Error(ErrorCode::InvalidMap, "stage map is not a digraph map");

  Representable target(z);
  BaseReport out;

  Digraph::Builder b;
  for (const Label& v : y0.vertices()) b.add_vertex(v);
  for (const auto& [s, t] : y0.edge_labels()) b.add_edge(s, t);

  std::map<Label, Label> assign;
  for (const Label& v : y0.vertices()) assign[v] = u0.apply(v);

  struct Copy {
    size_t test;
    int cls;
    std::string tag;
  };
  std::vector<Copy> copies;

  for (size_t k = 0; k < tests.size(); ++k) {
    const Digraph& kd = tests[k];
    const ClassTable& table = target.classes_for(kd, budget);
    out.class_counts.push_back(static_cast<size_t>(table.class_count()));
    for (int c = 0; c < table.class_count(); ++c) {
      std::string tag = fresh_tag(
          y0, "K" + std::to_string(k) + "c" + std::to_string(c),
          kd.vertices(), copy_label);
      DigraphMap r = table.representative(c);
      for (const Label& v : kd.vertices()) {
        Label lv = copy_label(tag, v);
        b.add_vertex(lv);
        assign[lv] = r.apply(v);
      }
      for (const auto& [s, t] : kd.edge_labels())
        b.add_edge(copy_label(tag, s), copy_label(tag, t));
      copies.push_back({k, c, tag});
    }
  }

  StageState st;
  st.y = share(b.build());
  st.z = share(z);
  st.tests = tests;
  st.next_tube = 0;
  DigraphMap u1(st.y, st.z, assign);
  st.u_targets = u1.targets();

  /* Each class must be reached by u1 composed with its own copy inclusion. */
  out.surjective = true;
  size_t at = 0;
  for (size_t k = 0; k < tests.size(); ++k) {
    const Digraph& kd = tests[k];
    const ClassTable& table = target.classes_for(kd, budget);
    std::set<int> hit;
    for (int c = 0; c < table.class_count(); ++c, ++at) {
      const Copy& cp = copies[at];
      std::map<Label, Label> into;
      for (const Label& v : kd.vertices()) into[v] = copy_label(cp.tag, v);
      DigraphMap inc(share(kd), st.y, into);
      hit.insert(table.class_of_map(compose(u1, inc)));
    }
    if (hit.size() != static_cast<size_t>(table.class_count()))
      out.surjective = false;
  }
  out.state = std::move(st);
  return out;
}

StepReport inductive_step(const StageState& in, Budget& budget) {
  const Digraph& y = *in.y;
  const Digraph& z = *in.z;
  DigraphMap u = in.u();
  Representable target(z);

  struct Tube {
    int id = 0;
    size_t test = 0;
    DigraphMap f, g;                        // test -> y
    std::vector<Label> src;                 // per test vertex, in order
    std::vector<std::pair<Label, Label>> edges;
    std::map<Label, Label> extension;       // src vertex -> target vertex
    bool extended = false;
  };
  std::vector<Tube> tubes;

  int next = in.next_tube;
  for (size_t k = 0; k < in.tests.size(); ++k) {
    const Digraph& kd = in.tests[k];
    ClassTable up = homotopy_classes(kd, y, budget);
    const ClassTable& down = target.classes_for(kd, budget);
    std::vector<int> pushed(static_cast<size_t>(up.class_count()));
    for (int c = 0; c < up.class_count(); ++c)
      pushed[static_cast<size_t>(c)] =
          down.class_of_map(compose(u, up.representative(c)));
    for (int i = 0; i < up.class_count(); ++i)
      for (int j = i + 1; j < up.class_count(); ++j) {
        if (pushed[static_cast<size_t>(i)] != pushed[static_cast<size_t>(j)])
          continue;
        Tube t{next++, k, up.representative(i), up.representative(j),
               {}, {}, {}, false};
        tubes.push_back(std::move(t));
      }
  }

  /* Tube shape against the incoming stage: a mirrored source slice wired
   * to both images, plus crossing edges wherever the stage digraph already
   * reaches either image. */
  for (Tube& t : tubes) {
    const Digraph& kd = in.tests[t.test];
    std::string tag =
        fresh_tag(y, "t" + std::to_string(t.id), kd.vertices(), tube_label);
    for (const Label& v : kd.vertices())
      t.src.push_back(tube_label(tag, v));
    auto src_of = [&](const Label& v) { return tube_label(tag, v); };
    for (const auto& [s, e] : kd.edge_labels())
      t.edges.emplace_back(src_of(s), src_of(e));
    for (const Label& v : kd.vertices()) {
      Label sv = src_of(v);
      Label fv = t.f.apply(v), gv = t.g.apply(v);
      t.edges.emplace_back(sv, fv);
      if (!(gv == fv)) t.edges.emplace_back(sv, gv);
      for (const Label& w : y.vertices()) {
        if (y.has_edge(w, fv) || y.has_edge(w, gv)) t.edges.emplace_back(w, sv);
        if (y.has_edge(fv, w) || y.has_edge(gv, w)) t.edges.emplace_back(sv, w);
      }
    }
  }

  /* Decide each extension against the stage plus that one tube; tubes never
   * touch each other, so the decisions commute. */
  for (Tube& t : tubes) {
    const Digraph& kd = in.tests[t.test];
    Digraph::Builder b;
    for (const Label& v : y.vertices()) b.add_vertex(v);
    for (const auto& [s, e] : y.edge_labels()) b.add_edge(s, e);
    for (const Label& v : t.src) b.add_vertex(v);
    for (const auto& [s, e] : t.edges) b.add_edge(s, e);
    Digraph with = b.build();
    DigraphPtr wp = share(with);

    /* First try dropping the slice onto u of the first image. */
    std::map<Label, Label> direct;
    for (const Label& v : y.vertices()) direct[v] = u.apply(v);
    for (int vi = 0; vi < kd.vertex_count(); ++vi)
      direct[t.src[static_cast<size_t>(vi)]] =
          u.apply(t.f.apply(kd.label_at(vi)));
    DigraphMap cand(wp, in.z, direct);
    if (validate_map(cand)) {
      t.extended = true;
      for (int vi = 0; vi < kd.vertex_count(); ++vi) {
        const Label& sv = t.src[static_cast<size_t>(vi)];
        t.extension[sv] = cand.apply(sv);
      }
      continue;
    }

    std::vector<std::vector<int>> cands(
        static_cast<size_t>(with.vertex_count()));
    std::set<Label> slice(t.src.begin(), t.src.end());
    for (int i = 0; i < with.vertex_count(); ++i) {
      const Label& lv = with.label_at(i);
      if (slice.count(lv)) {
        for (int zi = 0; zi < z.vertex_count(); ++zi)
          cands[static_cast<size_t>(i)].push_back(zi);
      } else {
        cands[static_cast<size_t>(i)].push_back(
            u.apply_index(y.index_of(lv)));
      }
    }
    auto found = constrained_assignment(with, z, cands, budget);
    if (found) {
      t.extended = true;
      for (const Label& sv : t.src)
        t.extension[sv] = z.label_at((*found)[static_cast<size_t>(
            with.index_of(sv))]);
    }
  }

  /* Assemble the next stage from the successful tubes. */
  Digraph::Builder fb;
  for (const Label& v : y.vertices()) fb.add_vertex(v);
  for (const auto& [s, e] : y.edge_labels()) fb.add_edge(s, e);
  std::map<Label, Label> assign;
  for (const Label& v : y.vertices()) assign[v] = u.apply(v);
  for (const Tube& t : tubes) {
    if (!t.extended) continue;
    for (const Label& v : t.src) {
      fb.add_vertex(v);
      assign[v] = t.extension.at(v);
    }
    for (const auto& [s, e] : t.edges) fb.add_edge(s, e);
  }

  StepReport out;
  out.state.y = share(fb.build());
  out.state.z = in.z;
  out.state.tests = in.tests;
  out.state.log = in.log;
  out.state.next_tube = next;
  DigraphMap u1(out.state.y, out.state.z, assign);
  out.state.u_targets = u1.targets();

  for (const Tube& t : tubes) {
    const Digraph& kd = in.tests[t.test];
    AttachmentRecord rec;
    rec.tube = t.id;
    rec.test_index = static_cast<int>(t.test);
    for (const Label& v : kd.vertices()) {
      rec.f[v.text()] = t.f.apply(v).text();
      rec.g[v.text()] = t.g.apply(v).text();
    }
    rec.extended = t.extended;
    if (t.extended) {
      rec.word = "-+";
      ++out.attached;
      /* Replay the two-step certificate through the slice. */
      std::map<Label, Label> mf, ms, mg;
      for (int vi = 0; vi < kd.vertex_count(); ++vi) {
        const Label& v = kd.label_at(vi);
        mf[v] = t.f.apply(v);
        ms[v] = t.src[static_cast<size_t>(vi)];
        mg[v] = t.g.apply(v);
      }
      DigraphPtr kp = share(kd);
      Homotopy cert{"-+",
                    {DigraphMap(kp, out.state.y, mf),
                     DigraphMap(kp, out.state.y, ms),
                     DigraphMap(kp, out.state.y, mg)}};
      if (!cert.validate() || !validate_map(cert.replay()))
        out.postcondition_ok = false;
    } else {
      ++out.failed;
      out.failures.push_back(rec);
    }
    out.state.log.push_back(std::move(rec));
  }
  return out;
}

std::string format_stage(const StageState& s) {
  nlohmann::json j;
  j["next_tube"] = s.next_tube;
  j["y"] = format_digraph(*s.y);
  j["z"] = format_digraph(*s.z);
  nlohmann::json u = nlohmann::json::object();
  for (int i = 0; i < s.y->vertex_count(); ++i)
    u[s.y->label_at(i).text()] =
        s.z->label_at(s.u_targets[static_cast<size_t>(i)]).text();
  j["u"] = u;
  nlohmann::json tests = nlohmann::json::array();
  for (const Digraph& t : s.tests) tests.push_back(format_digraph(t));
  j["tests"] = tests;
  nlohmann::json log = nlohmann::json::array();
  for (const AttachmentRecord& r : s.log) {
    nlohmann::json e;
    e["tube"] = r.tube;
    e["test_index"] = r.test_index;
    e["f"] = r.f;
    e["g"] = r.g;
    e["extended"] = r.extended;
    e["word"] = r.word;
    log.push_back(e);
  }
  j["log"] = log;
  return j.dump(2) + "\n";
}

StageState parse_stage(const std::string& text) {
  try {
    nlohmann::json j = nlohmann::json::parse(text);
    StageState s;
    s.y = share(parse_digraph_text(j.at("y").get<std::string>()));
    s.z = share(parse_digraph_text(j.at("z").get<std::string>()));
    s.next_tube = j.at("next_tube").get<int>();
    for (const auto& t : j.at("tests"))
      s.tests.push_back(parse_digraph_text(t.get<std::string>()));
    std::map<Label, Label> assign;
    for (const auto& [k, v] : j.at("u").items())
      assign[Label::parse(k)] = Label::parse(v.get<std::string>());
    DigraphMap u(s.y, s.z, assign);
    s.u_targets = u.targets();
    for (const auto& e : j.at("log")) {
      AttachmentRecord r;
      r.tube = e.at("tube").get<int>();
      r.test_index = e.at("test_index").get<int>();
      r.f = e.at("f").get<std::map<std::string, std::string>>();
      r.g = e.at("g").get<std::map<std::string, std::string>>();
      r.extended = e.at("extended").get<bool>();
      r.word = e.at("word").get<std::string>();
      s.log.push_back(std::move(r));
    }
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError,
                std::string("stage state: ") + e.what());
  }
}

}  // namespace diho::brown
