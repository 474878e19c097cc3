#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "diho/brown.hpp"
#include "diho/constructions.hpp"
#include "diho/digraph.hpp"
#include "diho/error.hpp"
#include "diho/fixtures.hpp"
#include "diho/homotopy.hpp"
#include "diho/io.hpp"
#include "diho/limits.hpp"
#include "diho/map.hpp"

namespace {

using namespace diho;

struct Global {
  std::uint64_t max_states = 5'000'000;
  int max_len = 0;  // 0 = no bound on witness words
  bool quiet = false;
};

Global g_opts;

Budget fresh_budget() { return Budget{g_opts.max_states, 0}; }

void emit(const std::string& text) {
  if (!g_opts.quiet) std::cout << text;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path);
  out << text;
}

void report_warnings(const ConstructionResult& r) {
  for (const Warning& w : r.warnings)
    std::cerr << "warning: " << w.code << ": " << w.detail << "\n";
}

/* Shared tail for every construction command: stdout text, -o file, --dot. */
int finish_digraph(const Digraph& d, const std::string& out,
                   const std::string& dot) {
  if (!out.empty())
    save_digraph(d, out);
  else
    emit(format_digraph(d));
  if (!dot.empty()) write_file(dot, export_dot(d));
  return 0;
}

int finish_construction(const ConstructionResult& r, const std::string& out,
                        const std::string& dot) {
  report_warnings(r);
  return finish_digraph(r.result, out, dot);
}

int finish_track(const Homotopy& t, const std::string& out) {
  if (g_opts.max_len > 0 &&
      t.length() > static_cast<size_t>(g_opts.max_len)) {
    emit("witness word exceeds --max-len\n");
    return 1;
  }
  if (!out.empty())
    save_track(t, out);
  else
    emit(format_track(t));
  return 0;
}

std::vector<std::pair<Label, Label>> parse_pairs(
    const std::vector<std::string>& words) {
  std::vector<std::pair<Label, Label>> pairs;
  for (const std::string& w : words) {
    auto eq = w.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == w.size())
      throw Error(ErrorCode::ParseError, "expected label=label, got '" + w + "'");
    pairs.emplace_back(Label::parse(w.substr(0, eq)),
                       Label::parse(w.substr(eq + 1)));
  }
  return pairs;
}

std::string class_summary(const ClassTable& t) {
  std::ostringstream out;
  out << "maps=" << t.map_count() << " classes=" << t.class_count() << "\n";
  for (int c = 0; c < t.class_count(); ++c) {
    int size = 0;
    for (int m = 0; m < t.map_count(); ++m)
      if (t.class_of_index(m) == c) ++size;
    out << "class " << c << " size=" << size << "\n"
        << format_assignment(t.representative(c));
  }
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"workbench for finite directed-graph deformation computations"};
  app.require_subcommand(1);

  if (const char* env = std::getenv("DIHO_MAX_STATES"))
    g_opts.max_states = std::strtoull(env, nullptr, 10);
  app.add_option("--max-states", g_opts.max_states,
                 "search budget in candidate states");
  app.add_option("--max-len", g_opts.max_len,
                 "reject witness words longer than this (0 = no bound)");
  app.add_flag("--quiet", g_opts.quiet, "suppress stdout reports");

  int rc = 0;

  /* ---- constructions on one or two digraphs ---- */
  struct TwoGraph {
    std::string a, b, out, dot;
  };
  auto add_two = [&](const char* name, const char* desc, auto fn) {
    auto st = std::make_shared<TwoGraph>();
    CLI::App* sub = app.add_subcommand(name, desc);
    sub->add_option("A", st->a, "first digraph file")->required();
    sub->add_option("B", st->b, "second digraph file")->required();
    sub->add_option("-o,--out", st->out, "write the resulting .dg here");
    sub->add_option("--dot", st->dot, "write a Graphviz rendering here");
    sub->callback([&rc, st, fn] {
      rc = fn(load_digraph(st->a), load_digraph(st->b), st->out, st->dot);
    });
  };

  add_two("box", "strong one-coordinate product",
          [](const Digraph& a, const Digraph& b, const std::string& out,
             const std::string& dot) {
            return finish_digraph(box_product(a, b), out, dot);
          });
  add_two("tensor", "both-coordinates product",
          [](const Digraph& a, const Digraph& b, const std::string& out,
             const std::string& dot) {
            return finish_digraph(tensor_product(a, b), out, dot);
          });
  add_two("union", "label-wise union",
          [](const Digraph& a, const Digraph& b, const std::string& out,
             const std::string& dot) {
            return finish_digraph(digraph_union(a, b), out, dot);
          });
  add_two("intersect", "label-wise intersection",
          [](const Digraph& a, const Digraph& b, const std::string& out,
             const std::string& dot) {
            return finish_digraph(digraph_intersection(a, b), out, dot);
          });
  add_two("quotient", "collapse the second digraph inside the first",
          [](const Digraph& a, const Digraph& b, const std::string& out,
             const std::string& dot) {
            return finish_construction(quotient(a, b), out, dot);
          });
  add_two("econe", "cone of the first glued along it into the second",
          [](const Digraph& a, const Digraph& b, const std::string& out,
             const std::string& dot) {
            return finish_construction(extended_cone(a, b), out, dot);
          });

  struct ManyGraph {
    std::vector<std::string> files;
    std::string out, dot;
  };
  {
    auto st = std::make_shared<ManyGraph>();
    CLI::App* sub = app.add_subcommand("disjoint", "tagged disjoint union");
    sub->add_option("parts", st->files, "digraph files")->required();
    sub->add_option("-o,--out", st->out, "write the resulting .dg here");
    sub->add_option("--dot", st->dot, "write a Graphviz rendering here");
    sub->callback([&rc, st] {
      std::vector<Digraph> parts;
      for (const auto& f : st->files) parts.push_back(load_digraph(f));
      rc = finish_construction(disjoint_union(parts), st->out, st->dot);
    });
  }

  struct IdentifyArgs {
    std::string g;
    std::vector<std::string> pairs;
    std::string out, dot;
  };
  {
    auto st = std::make_shared<IdentifyArgs>();
    CLI::App* sub = app.add_subcommand("identify", "merge listed vertex pairs");
    sub->add_option("G", st->g, "ambient digraph file")->required();
    sub->add_option("pairs", st->pairs, "vertex pairs as label=label")->required();
    sub->add_option("-o,--out", st->out, "write the resulting .dg here");
    sub->add_option("--dot", st->dot, "write a Graphviz rendering here");
    sub->callback([&rc, st] {
      rc = finish_construction(
          identification(load_digraph(st->g), parse_pairs(st->pairs)), st->out,
          st->dot);
    });
  }

  struct OneGraph {
    std::string a, out, dot;
  };
  {
    auto st = std::make_shared<OneGraph>();
    CLI::App* sub = app.add_subcommand("cone", "adjoin an apex over a mirror slice");
    sub->add_option("A", st->a, "digraph file")->required();
    sub->add_option("-o,--out", st->out, "write the resulting .dg here");
    sub->add_option("--dot", st->dot, "write a Graphviz rendering here");
    sub->callback([&rc, st] {
      rc = finish_construction(cone(load_digraph(st->a)), st->out, st->dot);
    });
  }
  {
    auto st = std::make_shared<OneGraph>();
    CLI::App* sub = app.add_subcommand("dot", "Graphviz export");
    sub->add_option("A", st->a, "digraph file")->required();
    sub->add_option("-o,--out", st->out, "write the .dot file here");
    sub->callback([&rc, st] {
      std::string text = export_dot(load_digraph(st->a));
      if (!st->out.empty())
        write_file(st->out, text);
      else
        emit(text);
      rc = 0;
    });
  }

  /* ---- constructions on maps ---- */
  struct OneMap {
    std::string f, out, dot;
  };
  auto add_map_cmd = [&](const char* name, const char* desc, auto fn) {
    auto st = std::make_shared<OneMap>();
    CLI::App* sub = app.add_subcommand(name, desc);
    sub->add_option("f", st->f, "map file")->required();
    sub->add_option("-o,--out", st->out, "write the resulting .dg here");
    sub->add_option("--dot", st->dot, "write a Graphviz rendering here");
    sub->callback([&rc, st, fn] { rc = fn(load_map(st->f), st->out, st->dot); });
    return sub;
  };

  add_map_cmd("cylinder", "mapping cylinder",
              [](const DigraphMap& f, const std::string& out,
                 const std::string& dot) {
                return finish_construction(mapping_cylinder(f), out, dot);
              });
  add_map_cmd("emcylinder", "extended mapping cylinder",
              [](const DigraphMap& f, const std::string& out,
                 const std::string& dot) {
                return finish_construction(extended_mapping_cylinder(f), out, dot);
              });
  add_map_cmd("reduced", "reduced cylinder (tube body)",
              [](const DigraphMap& f, const std::string& out,
                 const std::string& dot) {
                return finish_digraph(reduced_cylinder(f), out, dot);
              });

  {
    auto st = std::make_shared<OneMap>();
    auto style = std::make_shared<std::string>("paper");
    CLI::App* sub = app.add_subcommand("cofiber", "cone-over-domain quotient");
    sub->add_option("f", st->f, "map file")->required();
    sub->add_option("--style", *style, "paper | categorical")
        ->check(CLI::IsMember({"paper", "categorical"}));
    sub->add_option("-o,--out", st->out, "write the resulting .dg here");
    sub->add_option("--dot", st->dot, "write a Graphviz rendering here");
    sub->callback([&rc, st, style] {
      DigraphMap f = load_map(st->f);
      ConstructionResult r =
          *style == "paper" ? paper_cofiber(f) : categorical_cofiber(f);
      rc = finish_construction(r, st->out, st->dot);
    });
  }
  {
    auto st = std::make_shared<OneMap>();
    auto glue = std::make_shared<std::string>("im");
    CLI::App* sub = app.add_subcommand("gat", "cylinder glued to a cone");
    sub->add_option("f", st->f, "map file")->required();
    sub->add_option("--glue", *glue, "im | base")
        ->check(CLI::IsMember({"im", "base"}));
    sub->add_option("-o,--out", st->out, "write the resulting .dg here");
    sub->add_option("--dot", st->dot, "write a Graphviz rendering here");
    sub->callback([&rc, st, glue] {
      rc = finish_construction(
          gat(load_map(st->f), *glue == "im" ? GatGlue::Image : GatGlue::Base),
          st->out, st->dot);
    });
  }

  struct TwoMap {
    std::string f, g, out, dot;
    bool bare = false;
  };
  {
    auto st = std::make_shared<TwoMap>();
    CLI::App* sub = app.add_subcommand("tube", "two-map tube joined with the codomain");
    sub->add_option("f", st->f, "first map file")->required();
    sub->add_option("g", st->g, "second map file")->required();
    sub->add_flag("--bare", st->bare, "emit the tube alone, not joined");
    sub->add_option("-o,--out", st->out, "write the resulting .dg here");
    sub->add_option("--dot", st->dot, "write a Graphviz rendering here");
    sub->callback([&rc, st] {
      DigraphMap f = load_map(st->f), g = load_map(st->g);
      ConstructionResult r =
          st->bare ? mapping_tube(f, g) : mapping_tube_union(f, g);
      rc = finish_construction(r, st->out, st->dot);
    });
  }

  /* ---- deciders ---- */
  struct TwoMapPlain {
    std::string f, g, out;
  };
  {
    auto st = std::make_shared<TwoMapPlain>();
    CLI::App* sub = app.add_subcommand("homotopic", "search for a deformation track");
    sub->add_option("f", st->f, "first map file")->required();
    sub->add_option("g", st->g, "second map file")->required();
    sub->add_option("-o,--out", st->out, "write the witness .hty here");
    sub->callback([&rc, st] {
      Budget budget = fresh_budget();
      auto t = are_homotopic(load_map(st->f), load_map(st->g), budget);
      if (!t) {
        emit("no track\n");
        rc = 1;
        return;
      }
      rc = finish_track(*t, st->out);
    });
  }
  {
    auto st = std::make_shared<TwoGraph>();
    CLI::App* sub = app.add_subcommand("classes", "deformation classes of the map space");
    sub->add_option("A", st->a, "domain digraph file")->required();
    sub->add_option("B", st->b, "codomain digraph file")->required();
    sub->callback([&rc, st] {
      Budget budget = fresh_budget();
      ClassTable t = homotopy_classes(load_digraph(st->a), load_digraph(st->b), budget);
      emit(class_summary(t));
      rc = 0;
    });
  }
  {
    auto st = std::make_shared<TwoGraph>();
    CLI::App* sub = app.add_subcommand("equivalent", "two-sided deformation inverse search");
    sub->add_option("A", st->a, "first digraph file")->required();
    sub->add_option("B", st->b, "second digraph file")->required();
    sub->callback([&rc, st] {
      Budget budget = fresh_budget();
      auto w = are_equivalent(load_digraph(st->a), load_digraph(st->b), budget);
      if (!w) {
        emit("not equivalent\n");
        rc = 1;
        return;
      }
      if (g_opts.max_len > 0 &&
          (w->back_track.length() > static_cast<size_t>(g_opts.max_len) ||
           w->forward_track.length() > static_cast<size_t>(g_opts.max_len))) {
        emit("witness word exceeds --max-len\n");
        rc = 1;
        return;
      }
      std::ostringstream outp;
      outp << "to:\n" << format_assignment(w->to)
           << "from:\n" << format_assignment(w->from)
           << "round-trip words: back \"" << w->back_track.word
           << "\" forward \"" << w->forward_track.word << "\"\n";
      emit(outp.str());
      rc = 0;
    });
  }
  {
    auto st = std::make_shared<OneGraph>();
    CLI::App* sub = app.add_subcommand("contractible", "deform the identity to a constant");
    sub->add_option("A", st->a, "digraph file")->required();
    sub->add_option("-o,--out", st->out, "write the witness .hty here");
    sub->callback([&rc, st] {
      Budget budget = fresh_budget();
      auto t = is_contractible(load_digraph(st->a), budget);
      if (!t) {
        emit("no contraction\n");
        rc = 1;
        return;
      }
      rc = finish_track(*t, st->out);
    });
  }
  struct HepArgs {
    std::string file, out;
    int pad = 0;
  };
  {
    auto st = std::make_shared<HepArgs>();
    CLI::App* sub = app.add_subcommand("hep", "extend a partial deformation to the whole digraph");
    sub->add_option("instance", st->file, ".hep instance file")->required();
    sub->add_option("--allow-longer", st->pad,
                    "extra track length allowed beyond the given word");
    sub->add_option("-o,--out", st->out, "write the extension .hty here");
    sub->callback([&rc, st] {
      HepInstance inst = load_hep(st->file);
      Budget budget = fresh_budget();
      auto t = check_hep(inst, budget, st->pad);
      if (!t) {
        emit("no extension\n");
        rc = 1;
        return;
      }
      rc = finish_track(*t, st->out);
    });
  }
  {
    auto st = std::make_shared<TwoGraph>();
    CLI::App* sub = app.add_subcommand("maps", "enumerate the full map space");
    sub->add_option("A", st->a, "domain digraph file")->required();
    sub->add_option("B", st->b, "codomain digraph file")->required();
    sub->callback([&rc, st] {
      Budget budget = fresh_budget();
      std::vector<DigraphMap> all =
          enumerate_maps(load_digraph(st->a), load_digraph(st->b), budget);
      std::ostringstream outp;
      outp << "count=" << all.size() << "\n";
      for (size_t i = 0; i < all.size(); ++i)
        outp << "map " << i << "\n" << format_assignment(all[i]);
      emit(outp.str());
      rc = all.empty() ? 1 : 0;
    });
  }

  /* ---- finite systems ---- */
  struct OneSys {
    std::string file;
  };
  {
    auto st = std::make_shared<OneSys>();
    CLI::App* sub = app.add_subcommand("limit", "compatible families of a finite system");
    sub->add_option("sys", st->file, ".fs system file")->required();
    sub->callback([&rc, st] {
      limits::FiniteSystem s = load_system(st->file);
      std::vector<limits::LimitElement> all = limits::inverse_limit(s);
      std::ostringstream outp;
      for (const auto& el : all) {
        for (int o = 0; o < s.object_count(); ++o) {
          if (o) outp << " ";
          outp << s.tokens(o)[static_cast<size_t>(el[static_cast<size_t>(o)])];
        }
        outp << "\n";
      }
      outp << "count=" << all.size() << "\n";
      emit(outp.str());
      rc = all.empty() ? 1 : 0;
    });
  }
  struct TwoSys {
    std::string sub_file, sys_file;
  };
  {
    auto st = std::make_shared<TwoSys>();
    CLI::App* sub = app.add_subcommand("cofinal", "compare a subsystem's families with the whole");
    sub->add_option("sub", st->sub_file, "subsystem .fs file")->required();
    sub->add_option("sys", st->sys_file, "ambient .fs file")->required();
    sub->callback([&rc, st] {
      limits::FiniteSystem sub_sys = load_system(st->sub_file);
      limits::FiniteSystem sys = load_system(st->sys_file);
      limits::RestrictionReport r = limits::restriction_check(sub_sys, sys);
      std::ostringstream outp;
      outp << "cofinal=" << (r.cofinal ? "yes" : "no")
           << " whole=" << r.whole_count << " sub=" << r.sub_count
           << " injective=" << (r.injective ? "yes" : "no")
           << " surjective=" << (r.surjective ? "yes" : "no") << "\n";
      emit(outp.str());
      rc = r.cofinal && r.bijective() ? 0 : 1;
    });
  }
  {
    auto st = std::make_shared<OneSys>();
    CLI::App* sub = app.add_subcommand("cbar", "closure category and its axioms");
    sub->add_option("sys", st->file, ".fs system file")->required();
    sub->callback([&rc, st] {
      limits::FiniteSystem s = load_system(st->file);
      limits::ClosureResult c = limits::closure_category(s);
      std::ostringstream outp;
      outp << "solutions=" << c.homs.size()
           << " at-most-one=" << (c.at_most_one ? "yes" : "no")
           << " common-sources=" << (c.common_sources ? "yes" : "no")
           << " all-onto=" << (c.all_onto ? "yes" : "no")
           << " base-embeds=" << (c.base_embeds ? "yes" : "no") << "\n";
      emit(outp.str());
      rc = c.at_most_one && c.common_sources && c.all_onto && c.base_embeds ? 0 : 1;
    });
  }

  /* ---- tower steps ---- */
  CLI::App* brown_cmd = app.add_subcommand("brown", "representability tower steps");
  brown_cmd->require_subcommand(1);
  struct BaseArgs {
    std::string target, start, map, out;
    std::vector<std::string> tests;
  };
  {
    auto st = std::make_shared<BaseArgs>();
    CLI::App* sub = brown_cmd->add_subcommand("base", "build the first stage");
    sub->add_option("--target", st->target, "target digraph .dg")->required();
    sub->add_option("--start", st->start, "starting digraph .dg (default empty)");
    sub->add_option("--map", st->map, "starting map .map (default empty)");
    sub->add_option("--tests", st->tests, "test digraph .dg files");
    sub->add_option("-o,--out", st->out, "write the stage state here");
    sub->callback([&rc, st] {
      Digraph z = load_digraph(st->target);
      Digraph y0 = st->start.empty() ? Digraph() : load_digraph(st->start);
      if (st->map.empty() && y0.vertex_count() > 0)
        throw Error(ErrorCode::PreconditionFailed,
                    "--start without --map only works for the empty digraph");
      DigraphMap u0 = st->map.empty()
                          ? DigraphMap(share(y0), share(z), std::vector<int>{})
                          : load_map(st->map);
      std::vector<Digraph> tests;
      for (const auto& f : st->tests) tests.push_back(load_digraph(f));
      Budget budget = fresh_budget();
      brown::BaseReport r = brown::base_step(y0, u0, z, tests, budget);
      std::ostringstream outp;
      outp << "surjective=" << (r.surjective ? "yes" : "no") << " classes=";
      for (size_t i = 0; i < r.class_counts.size(); ++i)
        outp << (i ? "," : "") << r.class_counts[i];
      outp << "\n";
      std::cerr << outp.str();
      std::string stage = brown::format_stage(r.state);
      if (!st->out.empty())
        write_file(st->out, stage);
      else
        emit(stage);
      rc = r.surjective ? 0 : 1;
    });
  }
  struct StepArgs {
    std::string stage, out;
  };
  {
    auto st = std::make_shared<StepArgs>();
    CLI::App* sub = brown_cmd->add_subcommand("step", "attach tubes for one stage");
    sub->add_option("--stage", st->stage, "stage state file")->required();
    sub->add_option("-o,--out", st->out, "write the next stage state here");
    sub->callback([&rc, st] {
      std::ifstream in(st->stage);
      if (!in) throw Error(ErrorCode::IoError, "cannot open " + st->stage);
      std::ostringstream buf;
      buf << in.rdbuf();
      brown::StageState state = brown::parse_stage(buf.str());
      Budget budget = fresh_budget();
      brown::StepReport r = brown::inductive_step(state, budget);
      std::ostringstream outp;
      outp << "attached=" << r.attached << " failed=" << r.failed
           << " postcondition=" << (r.postcondition_ok ? "yes" : "no") << "\n";
      std::cerr << outp.str();
      std::string stage = brown::format_stage(r.state);
      if (!st->out.empty())
        write_file(st->out, stage);
      else
        emit(stage);
      rc = r.postcondition_ok ? 0 : 1;
    });
  }

  /* ---- audits ---- */
  CLI::App* audit_cmd = app.add_subcommand("audit", "functor axiom checks");
  audit_cmd->require_subcommand(1);
  struct AdditivityArgs {
    std::string target;
    std::vector<std::string> parts;
  };
  {
    auto st = std::make_shared<AdditivityArgs>();
    CLI::App* sub = audit_cmd->add_subcommand(
        "additivity", "classes of a disjoint union against the factor tuple");
    sub->add_option("target", st->target, "target digraph .dg")->required();
    sub->add_option("parts", st->parts, "part digraph .dg files")->required();
    sub->callback([&rc, st] {
      std::vector<Digraph> parts;
      for (const auto& f : st->parts) parts.push_back(load_digraph(f));
      Budget budget = fresh_budget();
      brown::AdditivityReport r =
          brown::audit_additivity(load_digraph(st->target), parts, budget);
      std::ostringstream outp;
      outp << "classes=" << r.whole_classes << " tuples=" << r.tuple_count
           << " injective=" << (r.injective ? "yes" : "no")
           << " surjective=" << (r.surjective ? "yes" : "no") << "\n";
      emit(outp.str());
      rc = r.bijective() ? 0 : 1;
    });
  }
  struct MvArgs {
    std::string target, g1, g2;
  };
  {
    auto st = std::make_shared<MvArgs>();
    CLI::App* sub = audit_cmd->add_subcommand(
        "mv", "restriction of union classes to agreeing pairs");
    sub->add_option("target", st->target, "target digraph .dg")->required();
    sub->add_option("G1", st->g1, "first piece .dg")->required();
    sub->add_option("G2", st->g2, "second piece .dg")->required();
    sub->callback([&rc, st] {
      Budget budget = fresh_budget();
      brown::MayerVietorisReport r = brown::audit_mayer_vietoris(
          load_digraph(st->target), load_digraph(st->g1), load_digraph(st->g2),
          budget);
      std::ostringstream outp;
      outp << "union-classes=" << r.union_classes
           << " fibered-pairs=" << r.fibered_pairs
           << " pairs-agree=" << (r.pairs_agree ? "yes" : "no")
           << " onto=" << (r.onto ? "yes" : "no") << "\n";
      emit(outp.str());
      rc = r.pairs_agree && r.onto ? 0 : 1;
    });
  }
  struct CofArgs {
    std::string target, f;
  };
  {
    auto st = std::make_shared<CofArgs>();
    CLI::App* sub = audit_cmd->add_subcommand(
        "cofiber", "exactness of the cofiber class sequence");
    sub->add_option("target", st->target, "target digraph .dg")->required();
    sub->add_option("f", st->f, "map .map file")->required();
    sub->callback([&rc, st] {
      Budget budget = fresh_budget();
      brown::CofiberReport r = brown::audit_cofiber(load_digraph(st->target),
                                                    load_map(st->f), budget);
      std::ostringstream outp;
      outp << "cofiber-classes=" << r.cofiber_classes
           << " codomain-classes=" << r.codomain_classes
           << " domain-classes=" << r.domain_classes
           << " forward=" << (r.forward_null ? "yes" : "no")
           << " backward=" << (r.backward_complete ? "yes" : "no") << "\n";
      emit(outp.str());
      rc = r.forward_null && r.backward_complete ? 0 : 1;
    });
  }

  /* ---- fixtures ---- */
  struct VerifyArgs {
    std::string pattern;
  };
  {
    auto st = std::make_shared<VerifyArgs>();
    CLI::App* sub = app.add_subcommand("verify", "run the built-in fixture suite");
    sub->add_option("pattern", st->pattern, "substring filter on fixture ids");
    sub->callback([&rc, st] {
      fixtures::RunReport r = fixtures::run_fixtures(st->pattern);
      std::cout << r.text;
      rc = r.all_passed() && r.ran > 0 ? 0 : 1;
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 3;
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return rc;
}
