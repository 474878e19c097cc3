#include "diho/fixtures.hpp"

#include <sstream>

#include "diho/brown.hpp"
#include "diho/constructions.hpp"
#include "diho/gen.hpp"
#include "diho/homotopy.hpp"
#include "diho/io.hpp"
#include "diho/limits.hpp"

namespace diho::fixtures {

namespace {

FixtureResult ok(std::string d) { return {true, std::move(d)}; }
FixtureResult bad(std::string d) { return {false, std::move(d)}; }
const char* yn(bool b) { return b ? "yes" : "no"; }

Label L(const char* s) { return Label::leaf(s); }

Digraph triangle() {
  return Digraph::Builder()
      .add_edge(L("a"), L("b"))
      .add_edge(L("b"), L("c"))
      .add_edge(L("c"), L("a"))
      .build();
}

Digraph interval_up() { return Digraph::Builder().add_edge(L("0"), L("1")).build(); }
Digraph interval_down() { return Digraph::Builder().add_edge(L("1"), L("0")).build(); }
Digraph point_k(const char* name) { return Digraph::point(L(name)); }

bool good_track(const Homotopy& t) {
  return t.validate() && validate_map(t.replay());
}

/* Digraph on n single-letter vertices from an edge bitmask over the ordered
 * pairs (i,j), i != j, in row-major order. */
Digraph bits_digraph(int n, unsigned mask) {
  Digraph::Builder b;
  for (int i = 0; i < n; ++i)
    b.add_vertex(Label::leaf(std::string(1, static_cast<char>('a' + i))));
  int bit = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (mask & (1u << bit))
        b.add_edge(Label::leaf(std::string(1, static_cast<char>('a' + i))),
                   Label::leaf(std::string(1, static_cast<char>('a' + j))));
      ++bit;
    }
  return b.build();
}

bool has_isolated(const Digraph& d) {
  for (int i = 0; i < d.vertex_count(); ++i)
    if (d.out_neighbors(i).empty() && d.in_neighbors(i).empty()) return true;
  return false;
}

/* Random digraph without isolated vertices (falls back to a cycle). */
Digraph sample_connectedish(gen::Rng& rng, int n, int num, int den) {
  for (int tries = 0; tries < 64; ++tries) {
    Digraph d = gen::random_digraph(rng, n, num, den);
    if (!has_isolated(d)) return d;
  }
  Digraph::Builder b;
  for (int i = 0; i < n; ++i)
    b.add_edge(Label::leaf(std::string(1, static_cast<char>('a' + i))),
               Label::leaf(std::string(1, static_cast<char>('a' + (i + 1) % n))));
  return b.build();
}

limits::FiniteSystem subsystem_of(const limits::FiniteSystem& s,
                                  const std::vector<int>& objs) {
  limits::SystemBuilder b;
  for (int i : objs) b.add_object(s.object_name(i), s.tokens(i));
  for (int x : objs)
    for (int y : objs) {
      if (x == y || !s.has_hom(x, y)) continue;
      std::map<std::string, std::string> fn;
      const std::vector<int>& h = s.hom(x, y);
      for (size_t t = 0; t < h.size(); ++t)
        fn[s.tokens(x)[t]] = s.tokens(y)[static_cast<size_t>(h[t])];
      b.add_morphism(s.object_name(x), s.object_name(y), fn);
    }
  return b.build();
}

/* ---- products ---- */

FixtureResult fx_tensor_example() {
  Digraph got = tensor_product(triangle(), interval_up());
  Digraph::Builder b;
  for (const char* v : {"a", "b", "c"})
    for (const char* i : {"0", "1"}) b.add_vertex(Label::pair(L(v), L(i)));
  b.add_edge(Label::pair(L("a"), L("0")), Label::pair(L("b"), L("1")));
  b.add_edge(Label::pair(L("b"), L("0")), Label::pair(L("c"), L("1")));
  b.add_edge(Label::pair(L("c"), L("0")), Label::pair(L("a"), L("1")));
  Digraph want = b.build();
  if (!(got == want)) return bad("edge set mismatch: " + got.signature());
  return ok("6 vertices, 3 edges, exact match");
}

FixtureResult fx_box_example() {
  Digraph got = box_product(triangle(), interval_up());
  Digraph::Builder b;
  auto p = [](const char* v, const char* i) {
    return Label::pair(L(v), L(i));
  };
  for (const char* i : {"0", "1"}) {
    b.add_edge(p("a", i), p("b", i));
    b.add_edge(p("b", i), p("c", i));
    b.add_edge(p("c", i), p("a", i));
  }
  for (const char* v : {"a", "b", "c"}) b.add_edge(p(v, "0"), p(v, "1"));
  Digraph want = b.build();
  if (!(got == want)) return bad("edge set mismatch: " + got.signature());
  return ok("6 vertices, 9 edges, exact match");
}

FixtureResult fx_no_product() {
  Digraph c3 = triangle(), iv = interval_up();
  DigraphPtr c3p = share(c3), ivp = share(iv);
  DigraphPtr tens = share(tensor_product(c3, iv));
  DigraphPtr box = share(box_product(c3, iv));
  auto [p1, p2] = pair_projections(box, c3p, ivp);
  auto [f1, f2] = pair_projections(tens, c3p, ivp);
  Budget budget;
  std::vector<DigraphMap> all = enumerate_maps(*tens, *box, budget);
  int matching = 0;
  for (const DigraphMap& phi : all)
    if (compose(p1, phi) == f1 && compose(p2, phi) == f2) ++matching;
  std::ostringstream d;
  d << "candidates=" << all.size() << " matching=" << matching;
  return matching == 0 ? ok(d.str()) : bad(d.str());
}

/* ---- map spaces and classes ---- */

FixtureResult fx_interval_map_classes() {
  Digraph iv = interval_up();
  Budget budget;
  ClassTable t = homotopy_classes(iv, iv, budget);
  if (t.map_count() != 3 || t.class_count() != 1)
    return bad("maps=" + std::to_string(t.map_count()) +
               " classes=" + std::to_string(t.class_count()));
  DigraphPtr p = share(iv);
  auto track = are_homotopic(DigraphMap::identity(p),
                             DigraphMap::constant(p, p, L("0")), budget);
  if (!track || track->word != "-" || !good_track(*track))
    return bad("identity-to-constant word " +
               (track ? track->word : std::string("none")));
  return ok("maps=3 classes=1, identity~const0 via \"-\"");
}

FixtureResult fx_point_into_triangle() {
  Budget budget;
  ClassTable t = homotopy_classes(point_k("p"), triangle(), budget);
  bool pass = t.map_count() == 3 && t.class_count() == 1;
  std::string d = "maps=" + std::to_string(t.map_count()) +
                  " classes=" + std::to_string(t.class_count());
  return pass ? ok(d) : bad(d);
}

FixtureResult fx_triangle_into_interval() {
  Budget budget;
  ClassTable t = homotopy_classes(triangle(), interval_up(), budget);
  bool pass = t.map_count() == 2 && t.class_count() == 1;
  std::string d = "maps=" + std::to_string(t.map_count()) +
                  " classes=" + std::to_string(t.class_count());
  return pass ? ok(d) : bad(d);
}

FixtureResult fx_interval_into_triangle() {
  Budget budget;
  ClassTable t = homotopy_classes(interval_up(), triangle(), budget);
  bool pass = t.map_count() == 6 && t.class_count() == 1;
  std::string d = "maps=" + std::to_string(t.map_count()) +
                  " classes=" + std::to_string(t.class_count());
  return pass ? ok(d) : bad(d);
}

FixtureResult fx_triangle_self_classes() {
  Digraph c3 = triangle();
  Budget budget;
  ClassTable t = homotopy_classes(c3, c3, budget);
  DigraphPtr p = share(c3);
  bool split = t.class_of_map(DigraphMap::identity(p)) !=
               t.class_of_map(DigraphMap::constant(p, p, L("a")));
  bool pass = t.map_count() == 6 && t.class_count() == 2 && split;
  std::string d = "maps=" + std::to_string(t.map_count()) +
                  " classes=" + std::to_string(t.class_count()) +
                  " identity-vs-constant split=" + yn(split);
  return pass ? ok(d) : bad(d);
}

/* ---- contractibility ---- */

FixtureResult contract_expect(const Digraph& g, bool expect) {
  Budget budget{50'000'000, 0};
  auto track = is_contractible(g, budget);
  if (track.has_value() != expect)
    return bad(std::string("certificate=") + yn(track.has_value()));
  if (track && !good_track(*track)) return bad("certificate fails replay");
  if (track && !track->back().is_constant()) return bad("track end not constant");
  std::string d = track ? "word \"" + track->word + "\"" : "no certificate";
  return ok(d);
}

FixtureResult fx_contract_plus() { return contract_expect(interval_up(), true); }
FixtureResult fx_contract_minus() { return contract_expect(interval_down(), true); }

FixtureResult fx_contract_square() {
  return contract_expect(box_product(interval_up(), interval_up()), true);
}

FixtureResult fx_contract_cube() {
  Digraph sq = box_product(interval_up(), interval_up());
  return contract_expect(box_product(sq, interval_up()), true);
}

FixtureResult fx_triangle_not_contractible() {
  return contract_expect(triangle(), false);
}

FixtureResult fx_cone_empty_point() {
  Digraph cg = cone(Digraph()).result;
  if (cg.vertex_count() != 1 || cg.edge_count() != 0 ||
      !cg.has_vertex(Label::apex()))
    return bad("unexpected shape: " + cg.signature());
  return ok("single apex vertex");
}

FixtureResult fx_cone_contractible() {
  int checked = 0;
  auto try_one = [&](const Digraph& g) -> bool {
    Budget budget;
    auto track = is_contractible(cone(g).result, budget);
    ++checked;
    return track && good_track(*track) && track->back().is_constant();
  };
  for (int n = 0; n <= 4; ++n) {
    unsigned pairs = static_cast<unsigned>(n * (n - 1));
    for (unsigned mask = 0; mask < (1u << pairs); ++mask)
      if (!try_one(bits_digraph(n, mask)))
        return bad("failed at n=" + std::to_string(n) +
                   " mask=" + std::to_string(mask));
  }
  for (int i = 0; i < 200; ++i) {
    gen::Rng rng(7000 + static_cast<uint64_t>(i));
    if (!try_one(gen::random_digraph(rng, 5, 1 + i % 3, 4)))
      return bad("failed at 5-vertex sample " + std::to_string(i));
  }
  if (!try_one(bits_digraph(5, ~0u)) || !try_one(bits_digraph(5, 0u)))
    return bad("failed at 5-vertex extreme");
  return ok("checked=" + std::to_string(checked) + " all contractible");
}

/* ---- extension problem ---- */

FixtureResult fx_hep_c3(int pad) {
  Digraph c3 = triangle();
  Digraph x = Digraph::Builder().add_edge(L("c"), L("a")).build();
  DigraphPtr gp = share(c3), xp = share(x);
  std::map<Label, Label> m0{{L("a"), L("a")}, {L("c"), L("c")}};
  std::map<Label, Label> m1{{L("a"), L("c")}, {L("c"), L("c")}};
  Homotopy track{"-", {DigraphMap(xp, gp, m0), DigraphMap(xp, gp, m1)}};
  HepInstance inst(gp, xp, DigraphMap::identity(gp), track);
  Budget budget;
  auto ext = check_hep(inst, budget, pad);
  std::string d = std::string("extension=") + yn(ext.has_value()) +
                  " padding<=" + std::to_string(pad);
  return ext ? bad(d) : ok(d);
}

/* ---- cylinders and tubes ---- */

FixtureResult fx_cylinder_crush_example() {
  /* f folds the interval onto the triangle edge a->b. */
  Digraph iv = interval_up(), c3 = triangle();
  DigraphPtr ivp = share(iv), c3p = share(c3);
  DigraphMap f(ivp, c3p, std::map<Label, Label>{{L("0"), L("a")}, {L("1"), L("b")}});
  ConstructionResult mc = mapping_cylinder(f);
  const DigraphMap& top = mc.map("top");
  const DigraphMap& base = mc.map("base");
  const DigraphMap& crush = mc.map("crush");
  if (!(compose(crush, top) == f)) return bad("crush after top differs from f");
  if (!is_identity(compose(crush, base))) return bad("crush after base not identity");
  Homotopy slide{"+", {top, compose(base, f)}};
  if (!good_track(slide)) return bad("slide certificate invalid");
  Budget budget{50'000'000, 0};
  auto w = are_equivalent(mc.result, c3, budget);
  if (!w) return bad("cylinder not equivalent to codomain");
  if (!good_track(w->back_track) || !good_track(w->forward_track))
    return bad("equivalence witness fails replay");
  return ok("crush laws hold, slide word \"+\", equivalence witnessed");
}

FixtureResult fx_cylinder_random() {
  int passes = 0;
  const int trials = 50;
  for (int i = 0; i < trials; ++i) {
    gen::Rng rng(4200 + static_cast<uint64_t>(i));
    Digraph g = sample_connectedish(rng, 2 + rng.below(3), 1, 2);
    Digraph h = sample_connectedish(rng, 2 + rng.below(3), 1, 2);
    Budget budget{100'000'000, 0};
    auto f = gen::random_map(rng, g, h, budget);
    if (!f) continue;
    ConstructionResult mc = mapping_cylinder(*f);
    auto w = are_equivalent(mc.result, h, budget);
    if (w && good_track(w->back_track) && good_track(w->forward_track)) ++passes;
  }
  std::string d = "witnessed " + std::to_string(passes) + "/" +
                  std::to_string(trials);
  return passes == trials ? ok(d) : bad(d);
}

FixtureResult fx_tube_example() {
  Digraph g = point_k("g"), iv = interval_up();
  DigraphPtr gp = share(g), ivp = share(iv);
  DigraphMap f(gp, ivp, std::map<Label, Label>{{L("g"), L("0")}});
  DigraphMap h(gp, ivp, std::map<Label, Label>{{L("g"), L("1")}});
  ConstructionResult mtu = mapping_tube_union(f, h);
  const DigraphMap& base = mtu.map("base");
  const DigraphMap& src = mtu.map("src");
  Homotopy cert{"-+", {compose(base, f), src, compose(base, h)}};
  if (!good_track(cert)) return bad("tube certificate invalid");
  Budget budget;
  auto any = are_homotopic(compose(base, f), compose(base, h), budget);
  if (!any) return bad("search finds no track");
  return ok("tube word \"-+\" replays; search word \"" + any->word + "\"");
}

FixtureResult fx_tube_random() {
  int passes = 0;
  const int trials = 50;
  for (int i = 0; i < trials; ++i) {
    gen::Rng rng(4400 + static_cast<uint64_t>(i));
    Digraph g = gen::random_digraph(rng, 1 + rng.below(3), 1, 2);
    Digraph h = gen::random_digraph(rng, 1 + rng.below(3), 1, 2);
    Budget budget{20'000'000, 0};
    auto f1 = gen::random_map(rng, g, h, budget);
    auto f2 = gen::random_map(rng, g, h, budget);
    if (!f1 || !f2) continue;
    ConstructionResult mtu = mapping_tube_union(*f1, *f2);
    const DigraphMap& base = mtu.map("base");
    const DigraphMap& src = mtu.map("src");
    Homotopy cert{"-+", {compose(base, *f1), src, compose(base, *f2)}};
    if (cert.length() == 2 && good_track(cert)) ++passes;
  }
  std::string d = "certified " + std::to_string(passes) + "/" +
                  std::to_string(trials);
  return passes == trials ? ok(d) : bad(d);
}

/* ---- cofiber ---- */

FixtureResult fx_cofiber_null_example() {
  Digraph g = point_k("p"), iv = interval_up();
  DigraphPtr gp = share(g), ivp = share(iv);
  DigraphMap f(gp, ivp, std::map<Label, Label>{{L("p"), L("0")}});
  ConstructionResult cof = paper_cofiber(f);
  DigraphPtr cp = share(cof.result);
  Homotopy cert{"++",
                {compose(cof.map("base"), f), cof.map("mid"),
                 DigraphMap::constant(gp, cp, Label::apex())}};
  if (!good_track(cert)) return bad("null certificate invalid");
  Budget budget;
  auto any = are_homotopic(cert.front(), cert.back(), budget);
  if (!any) return bad("search finds no track");
  return ok("null track word \"++\" replays");
}

FixtureResult fx_cofiber_null_random() {
  int passes = 0;
  const int trials = 50;
  for (int i = 0; i < trials; ++i) {
    gen::Rng rng(4600 + static_cast<uint64_t>(i));
    Digraph g = gen::random_digraph(rng, 1 + rng.below(3), 1, 2);
    Digraph h = gen::random_digraph(rng, 1 + rng.below(3), 1, 2);
    Budget budget{20'000'000, 0};
    auto f = gen::random_map(rng, g, h, budget);
    if (!f) continue;
    ConstructionResult cof = paper_cofiber(*f);
    DigraphPtr cp = share(cof.result);
    Homotopy cert{"++",
                  {compose(cof.map("base"), *f), cof.map("mid"),
                   DigraphMap::constant(f->domain_ptr(), cp, Label::apex())}};
    if (cert.word == "++" && good_track(cert)) ++passes;
  }
  std::string d = "certified " + std::to_string(passes) + "/" +
                  std::to_string(trials);
  return passes == trials ? ok(d) : bad(d);
}

FixtureResult fx_cofiber_audit_identity() {
  Digraph pt = point_k("p");
  DigraphPtr pp = share(pt);
  Budget budget;
  brown::CofiberReport r =
      brown::audit_cofiber(interval_up(), DigraphMap::identity(pp), budget);
  bool pass = r.forward_null && r.backward_complete && r.cofiber_classes == 1;
  std::ostringstream d;
  d << "classes=" << r.cofiber_classes << " forward=" << yn(r.forward_null)
    << " backward=" << yn(r.backward_complete);
  return pass ? ok(d.str()) : bad(d.str());
}

FixtureResult fx_cofiber_audit_interval() {
  Digraph pt = point_k("p"), iv = interval_up();
  DigraphMap f(share(pt), share(iv), std::map<Label, Label>{{L("p"), L("0")}});
  Budget budget;
  brown::CofiberReport r = brown::audit_cofiber(interval_up(), f, budget);
  bool pass = r.forward_null && r.backward_complete &&
              r.cofiber_classes == 1 && r.codomain_classes == 1 &&
              r.domain_classes == 1;
  std::ostringstream d;
  d << "classes=" << r.cofiber_classes << "/" << r.codomain_classes << "/"
    << r.domain_classes << " forward=" << yn(r.forward_null)
    << " backward=" << yn(r.backward_complete);
  return pass ? ok(d.str()) : bad(d.str());
}

FixtureResult fx_cofiber_chain_audit() {
  Digraph g = Digraph::Builder().add_edge(L("a"), L("b")).build();
  Digraph h = Digraph::Builder().add_edge(L("b"), L("c")).build();
  Budget budget{50'000'000, 0};
  brown::ChainReport r = brown::audit_cofiber_chain(interval_up(), g, h, budget);
  bool pass = r.first.forward_null && r.second.forward_null;
  std::ostringstream d;
  d << "forward=" << yn(r.first.forward_null) << "," << yn(r.second.forward_null)
    << " backward=" << yn(r.first.backward_complete) << ","
    << yn(r.second.backward_complete);
  return pass ? ok(d.str()) : bad(d.str());
}

/* ---- gluing audits ---- */

FixtureResult gat_outcomes(GatGlue glue) {
  Digraph pt = point_k("p"), iv = interval_up();
  DigraphPtr pp = share(pt), ivp = share(iv);
  std::vector<DigraphMap> cases;
  cases.push_back(DigraphMap::identity(pp));
  cases.push_back(DigraphMap(pp, ivp, std::map<Label, Label>{{L("p"), L("0")}}));
  cases.push_back(DigraphMap::constant(ivp, pp, L("p")));
  std::string outcomes;
  for (const DigraphMap& f : cases) {
    ConstructionResult built = gat(f, glue);
    ConstructionResult cof = paper_cofiber(f);
    Budget budget{100'000'000, 0};
    auto w = are_equivalent(built.result, cof.result, budget);
    bool goodw = w && good_track(w->back_track) && good_track(w->forward_track);
    outcomes += goodw ? 'y' : 'n';
  }
  std::string d = "outcomes=" + outcomes + " (identity, include, collapse)";
  return outcomes == "yyy" ? ok(d) : bad(d);
}

FixtureResult fx_gat_image_audits() { return gat_outcomes(GatGlue::Image); }
FixtureResult fx_gat_base_audits() { return gat_outcomes(GatGlue::Base); }

/* ---- gluing-style class audits ---- */

FixtureResult fx_mv_triangle_split() {
  Digraph g1 = Digraph::Builder()
                   .add_edge(L("a"), L("b"))
                   .add_edge(L("b"), L("c"))
                   .build();
  Digraph g2 = Digraph::Builder().add_edge(L("c"), L("a")).build();
  if (!(digraph_union(g1, g2) == triangle())) return bad("pieces do not rebuild the triangle");
  Budget budget;
  brown::MayerVietorisReport vs_c3 =
      brown::audit_mayer_vietoris(triangle(), g1, g2, budget);
  brown::MayerVietorisReport vs_iv =
      brown::audit_mayer_vietoris(interval_up(), g1, g2, budget);
  bool pass = vs_c3.union_classes == 2 && vs_c3.fibered_pairs == 1 &&
              vs_c3.pairs_agree && vs_c3.onto && vs_iv.union_classes == 1 &&
              vs_iv.fibered_pairs == 1 && vs_iv.pairs_agree && vs_iv.onto;
  std::ostringstream d;
  d << "triangle-target " << vs_c3.union_classes << "->" << vs_c3.fibered_pairs
    << " onto=" << yn(vs_c3.onto) << "; interval-target "
    << vs_iv.union_classes << "->" << vs_iv.fibered_pairs
    << " onto=" << yn(vs_iv.onto);
  return pass ? ok(d.str()) : bad(d.str());
}

FixtureResult fx_additivity_example() {
  Budget budget;
  brown::AdditivityReport r =
      brown::audit_additivity(triangle(), {point_k("p"), interval_up()}, budget);
  std::ostringstream d;
  d << "classes=" << r.whole_classes << " tuples=" << r.tuple_count
    << " bijective=" << yn(r.bijective());
  return r.bijective() && r.whole_classes == 1 ? ok(d.str()) : bad(d.str());
}

FixtureResult fx_additivity_random() {
  int passes = 0;
  const int trials = 100;
  for (int i = 0; i < trials; ++i) {
    gen::Rng rng(5100 + static_cast<uint64_t>(i));
    Digraph g1 = gen::random_digraph(rng, 1 + rng.below(3), 1, 2);
    Digraph g2 = gen::random_digraph(rng, 1 + rng.below(3), 1, 2);
    Digraph z = gen::random_digraph(rng, 1 + rng.below(3), 1, 2);
    Budget budget{20'000'000, 0};
    brown::AdditivityReport r = brown::audit_additivity(z, {g1, g2}, budget);
    if (r.bijective()) ++passes;
  }
  std::string d = "bijective " + std::to_string(passes) + "/" +
                  std::to_string(trials);
  return passes == trials ? ok(d) : bad(d);
}

/* ---- finite systems ---- */

FixtureResult fx_limits_cofinal_random() {
  const int trials = 200;
  for (int i = 0; i < trials; ++i) {
    gen::Rng rng(9100 + static_cast<uint64_t>(i));
    gen::TreeSystem ts = gen::random_tree_system(rng, 5, 4, false);
    limits::SystemReport sr = limits::validate_system(ts.system);
    if (!sr.common_sources || !sr.all_nonempty)
      return bad("generated system violates its own axioms at " +
                 std::to_string(i));
    std::vector<int> objs;
    for (int o = 0; o < ts.system.object_count(); ++o) {
      if (ts.system.object_name(o) == ts.root || rng.chance(1, 2))
        objs.push_back(o);
    }
    limits::FiniteSystem sub = subsystem_of(ts.system, objs);
    limits::RestrictionReport r = limits::restriction_check(sub, ts.system);
    if (!r.cofinal) return bad("root subsystem not cofinal at " + std::to_string(i));
    if (!r.bijective())
      return bad("restriction not bijective at " + std::to_string(i) + " (" +
                 std::to_string(r.whole_count) + " vs " +
                 std::to_string(r.sub_count) + ")");
  }
  return ok("restriction bijective on " + std::to_string(trials) + " systems");
}

FixtureResult fx_limits_chain_random() {
  const int trials = 200;
  for (int i = 0; i < trials; ++i) {
    gen::Rng rng(9300 + static_cast<uint64_t>(i));
    limits::FiniteSystem cs = gen::random_chain_system(rng, 5, 4);
    limits::LimitElement w = limits::sequence_limit_witness(cs);
    for (const auto& [key, fn] : cs.homs()) {
      auto [x, y] = key;
      if (fn[static_cast<size_t>(w[static_cast<size_t>(x)])] !=
          w[static_cast<size_t>(y)])
        return bad("witness incompatible at " + std::to_string(i));
    }
    std::vector<limits::LimitElement> all = limits::inverse_limit(cs);
    if (all.empty()) return bad("empty limit at " + std::to_string(i));
    if (std::find(all.begin(), all.end(), w) == all.end())
      return bad("witness missing from limit at " + std::to_string(i));
  }
  return ok("nonempty witnessed limits on " + std::to_string(trials) + " chains");
}

FixtureResult fx_limits_closure_random() {
  const int trials = 200;
  for (int i = 0; i < trials; ++i) {
    gen::Rng rng(9500 + static_cast<uint64_t>(i));
    gen::TreeSystem ts = gen::random_tree_system(rng, 4, 3, true);
    limits::ClosureResult c = limits::closure_category(ts.system);
    if (!c.at_most_one) return bad("two solutions for a pair at " + std::to_string(i));
    if (!c.common_sources) return bad("domination lost at " + std::to_string(i));
    if (!c.all_onto) return bad("non-surjective solution at " + std::to_string(i));
    if (!c.base_embeds) return bad("base morphism missing at " + std::to_string(i));
  }
  return ok("closure axioms hold on " + std::to_string(trials) + " systems");
}

/* ---- tower steps ---- */

FixtureResult fx_base_step_demo() {
  Digraph empty;
  Digraph z = interval_up();
  DigraphMap u0(share(empty), share(z), std::map<Label, Label>{});
  Budget budget;
  brown::BaseReport r =
      brown::base_step(empty, u0, z, {point_k("k")}, budget);
  bool pass = r.surjective && r.state.y->vertex_count() == 1 &&
              r.class_counts == std::vector<size_t>{1};
  std::ostringstream d;
  d << "stage vertices=" << r.state.y->vertex_count()
    << " classes=" << r.class_counts[0] << " surjective=" << yn(r.surjective);
  return pass ? ok(d.str()) : bad(d.str());
}

FixtureResult fx_base_step_empty() {
  Digraph y0 = interval_up();
  DigraphPtr p = share(y0);
  Budget budget;
  brown::BaseReport r =
      brown::base_step(y0, DigraphMap::identity(p), y0, {}, budget);
  bool pass = r.surjective && *r.state.y == y0;
  return pass ? ok("no tests, stage unchanged") : bad("stage changed");
}

brown::StageState two_point_stage() {
  Digraph y0 = Digraph::Builder().add_vertex(L("p")).add_vertex(L("q")).build();
  Digraph z = point_k("z");
  brown::StageState st;
  st.y = share(y0);
  st.z = share(z);
  st.u_targets = {0, 0};
  st.tests = {point_k("k")};
  return st;
}

FixtureResult fx_inductive_demo() {
  Budget budget;
  brown::StepReport r = brown::inductive_step(two_point_stage(), budget);
  bool pass = r.attached == 1 && r.failed == 0 && r.postcondition_ok &&
              r.state.y->vertex_count() == 3 && r.state.y->edge_count() == 2;
  std::ostringstream d;
  d << "attached=" << r.attached << " failed=" << r.failed
    << " vertices=" << r.state.y->vertex_count()
    << " postcondition=" << yn(r.postcondition_ok);
  return pass ? ok(d.str()) : bad(d.str());
}

FixtureResult fx_inductive_fixpoint() {
  Budget budget;
  brown::StepReport first = brown::inductive_step(two_point_stage(), budget);
  brown::StepReport second = brown::inductive_step(first.state, budget);
  bool pass = second.attached == 0 && second.failed == 0 &&
              *second.state.y == *first.state.y;
  std::ostringstream d;
  d << "second step attached=" << second.attached
    << " stage stable=" << yn(*second.state.y == *first.state.y);
  return pass ? ok(d.str()) : bad(d.str());
}

FixtureResult fx_inductive_random() {
  const int trials = 20;
  int attached = 0, failed = 0;
  for (int i = 0; i < trials; ++i) {
    gen::Rng rng(5600 + static_cast<uint64_t>(i));
    Digraph y0 = gen::random_digraph(rng, 1 + rng.below(2), 1, 2);
    Digraph z = gen::random_digraph(rng, 1 + rng.below(2), 1, 2);
    Budget budget{100'000'000, 0};
    auto u0 = gen::random_map(rng, y0, z, budget);
    if (!u0) return bad("no stage map at " + std::to_string(i));
    std::vector<Digraph> tests = {point_k("k"), interval_up()};
    brown::BaseReport base = brown::base_step(y0, *u0, z, tests, budget);
    if (!base.surjective) return bad("base stage not surjective at " + std::to_string(i));
    brown::StepReport step = brown::inductive_step(base.state, budget);
    if (!step.postcondition_ok)
      return bad("certificate failed at " + std::to_string(i));
    attached += step.attached;
    failed += step.failed;
  }
  std::ostringstream d;
  d << "stages=" << trials << " attached=" << attached
    << " unextendable=" << failed;
  return ok(d.str());
}

FixtureResult fx_stage_roundtrip() {
  Budget budget;
  brown::StepReport r = brown::inductive_step(two_point_stage(), budget);
  std::string t1 = brown::format_stage(r.state);
  brown::StageState back = brown::parse_stage(t1);
  std::string t2 = brown::format_stage(back);
  bool pass = t1 == t2 && *back.y == *r.state.y &&
              back.u_targets == r.state.u_targets &&
              back.log.size() == r.state.log.size();
  return pass ? ok("stage text stable under reload") : bad("roundtrip drift");
}

/* ---- gluing warnings ---- */

FixtureResult fx_identify_incompatible() {
  Digraph ambient = Digraph::Builder()
                        .add_edge(L("a"), L("b"))
                        .add_edge(L("c"), L("d"))
                        .build();
  ConstructionResult r = identification(ambient, {{L("a"), L("c")}});
  int warn = 0;
  for (const Warning& w : r.warnings)
    if (w.code == "INCOMPATIBLE_RELATION") ++warn;
  bool pass = r.result.vertex_count() == 3 && r.result.edge_count() == 2 &&
              warn == 2 && validate_map(r.map("quotient"));
  std::ostringstream d;
  d << "vertices=" << r.result.vertex_count() << " warnings=" << warn;
  return pass ? ok(d.str()) : bad(d.str());
}

FixtureResult fx_quotient_star() {
  Digraph x = Digraph::Builder().add_edge(L("a"), L("b")).build();
  ConstructionResult r = quotient(triangle(), x);
  Digraph::Builder b;
  Label merged = Label::cls({Label::star(), L("a"), L("b")});
  b.add_edge(merged, L("c"));
  b.add_edge(L("c"), merged);
  bool pass = r.result == b.build() && validate_map(r.map("quotient"));
  std::ostringstream d;
  d << "shape=" << r.result.signature() << " warnings=" << r.warnings.size();
  return pass ? ok(d.str()) : bad(d.str());
}

}  // namespace

const std::vector<FixtureCase>& all_fixtures() {
  static const std::vector<FixtureCase> cases = {
      {"tensor-example", "documented", fx_tensor_example},
      {"box-example", "documented", fx_box_example},
      {"no-product", "documented", fx_no_product},
      {"interval-map-classes", "documented", fx_interval_map_classes},
      {"point-into-triangle", "documented", fx_point_into_triangle},
      {"triangle-into-interval", "documented", fx_triangle_into_interval},
      {"interval-into-triangle", "documented", fx_interval_into_triangle},
      {"triangle-self-classes", "oracle:map-space-components",
       fx_triangle_self_classes},
      {"contract-plus", "documented", fx_contract_plus},
      {"contract-minus", "documented", fx_contract_minus},
      {"contract-square", "documented", fx_contract_square},
      {"contract-cube", "documented", fx_contract_cube},
      {"triangle-not-contractible", "oracle:map-space-components",
       fx_triangle_not_contractible},
      {"cone-empty-point", "direct", fx_cone_empty_point},
      {"cone-contractible", "direct", fx_cone_contractible},
      {"hep-c3", "documented", [] { return fx_hep_c3(0); }},
      {"hep-c3-longer", "direct", [] { return fx_hep_c3(6); }},
      {"cylinder-crush-example", "documented", fx_cylinder_crush_example},
      {"cylinder-random", "direct", fx_cylinder_random},
      {"tube-example", "documented", fx_tube_example},
      {"tube-random", "direct", fx_tube_random},
      {"cofiber-null-example", "documented", fx_cofiber_null_example},
      {"cofiber-null-random", "direct", fx_cofiber_null_random},
      {"cofiber-audit-identity", "direct", fx_cofiber_audit_identity},
      {"cofiber-audit-interval", "oracle:full-enumeration",
       fx_cofiber_audit_interval},
      {"cofiber-chain-audit", "direct", fx_cofiber_chain_audit},
      {"gat-image-audits", "direct", fx_gat_image_audits},
      {"gat-base-audits", "direct", fx_gat_base_audits},
      {"mv-triangle-split", "oracle:full-enumeration", fx_mv_triangle_split},
      {"additivity-example", "direct", fx_additivity_example},
      {"additivity-random", "direct", fx_additivity_random},
      {"limits-cofinal-random", "direct", fx_limits_cofinal_random},
      {"limits-chain-random", "direct", fx_limits_chain_random},
      {"limits-closure-random", "direct", fx_limits_closure_random},
      {"base-step-demo", "documented", fx_base_step_demo},
      {"base-step-empty", "direct", fx_base_step_empty},
      {"inductive-demo", "documented", fx_inductive_demo},
      {"inductive-fixpoint", "direct", fx_inductive_fixpoint},
      {"inductive-random", "direct", fx_inductive_random},
      {"stage-roundtrip", "direct", fx_stage_roundtrip},
      {"identify-incompatible", "direct", fx_identify_incompatible},
      {"quotient-star", "direct", fx_quotient_star},
  };
  return cases;
}

RunReport run_fixtures(const std::string& pattern) {
  RunReport report;
  std::ostringstream out;
  for (const FixtureCase& c : all_fixtures()) {
    if (!pattern.empty() && c.id.find(pattern) == std::string::npos) continue;
    FixtureResult res;
    try {
      res = c.run();
    } catch (const std::exception& e) {
      res = {false, std::string("error: ") + e.what()};
    }
    ++report.ran;
    if (res.pass) ++report.passed;
    out << (res.pass ? "PASS " : "FAIL ") << c.id << " [" << c.source << "] "
        << res.detail << "\n";
  }
  out << report.passed << "/" << report.ran << " fixtures passed\n";
  report.text = out.str();
  return report;
}

}  // namespace diho::fixtures
