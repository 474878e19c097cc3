/*
 * Release gate: one line per criterion, nonzero exit when any line fails.
 * Criteria 1-8 and 10-12 replay the compiled-in fixture cases by id; 9 runs
 * the independent odometer oracle against the search engine; 13 reruns the
 * whole fixture suite and compares the report text byte for byte.
 */

#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "diho/fixtures.hpp"
#include "diho/gen.hpp"
#include "diho/homotopy.hpp"
#include "oracle.hpp"

using namespace diho;

namespace {

std::map<std::string, const fixtures::FixtureCase*> index_fixtures() {
  std::map<std::string, const fixtures::FixtureCase*> by_id;
  for (const fixtures::FixtureCase& c : fixtures::all_fixtures())
    by_id[c.id] = &c;
  return by_id;
}

bool run_group(const std::vector<std::string>& ids, std::string& detail) {
  static const auto by_id = index_fixtures();
  bool pass = true;
  for (const std::string& id : ids) {
    auto it = by_id.find(id);
    if (it == by_id.end()) {
      pass = false;
      detail += " missing:" + id;
      continue;
    }
    fixtures::FixtureResult res;
    try {
      res = it->second->run();
    } catch (const std::exception& e) {
      res = {false, std::string("error: ") + e.what()};
    }
    if (!res.pass) {
      pass = false;
      detail += " " + id + ": " + res.detail;
    }
  }
  if (pass) detail = std::to_string(ids.size()) + " fixture(s)";
  return pass;
}

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

/* Engine map list and class partition against the odometer oracle. */
bool oracle_agrees(const Digraph& g, const Digraph& h, std::string& why) {
  Budget budget{50'000'000, 0};
  ClassTable table = homotopy_classes(g, h, budget);
  std::vector<std::vector<int>> want = oracle::all_maps(g, h);
  if (static_cast<size_t>(table.map_count()) != want.size()) {
    why = "map counts differ: " + std::to_string(table.map_count()) + " vs " +
          std::to_string(want.size());
    return false;
  }
  for (size_t i = 0; i < want.size(); ++i)
    if (table.map_at(static_cast<int>(i)).targets() != want[i]) {
      why = "map order differs at " + std::to_string(i);
      return false;
    }
  std::vector<int> part = oracle::partition(g, h);
  for (size_t i = 0; i < want.size(); ++i)
    for (size_t j = i + 1; j < want.size(); ++j) {
      bool engine = table.class_of_index(static_cast<int>(i)) ==
                    table.class_of_index(static_cast<int>(j));
      bool naive = part[i] == part[j];
      if (engine != naive) {
        why = "partition differs on maps " + std::to_string(i) + "," +
              std::to_string(j);
        return false;
      }
    }
  return true;
}

bool criterion_oracle(std::string& detail) {
  std::vector<Digraph> small;
  for (int n = 0; n <= 3; ++n) {
    unsigned pairs = static_cast<unsigned>(n * (n - 1));
    for (unsigned mask = 0; mask < (1u << pairs); ++mask)
      small.push_back(bits_digraph(n, mask));
  }
  size_t checked = 0;
  std::string why;
  for (const Digraph& g : small)
    for (const Digraph& h : small) {
      if (!oracle_agrees(g, h, why)) {
        detail = "pair " + g.signature() + " / " + h.signature() + ": " + why;
        return false;
      }
      ++checked;
    }
  int spot = 0;
  for (int i = 0; i < 25; ++i) {
    gen::Rng rng(1300 + static_cast<uint64_t>(i));
    Digraph g = gen::random_digraph(rng, 4, 1, 2);
    Digraph h = gen::random_digraph(rng, 4, 1, 2);
    if (!oracle_agrees(g, h, why)) {
      detail = "sampled pair " + std::to_string(i) + ": " + why;
      return false;
    }
    ++checked;
    Budget budget{50'000'000, 0};
    std::vector<DigraphMap> maps = enumerate_maps(g, h, budget);
    if (maps.size() < 2) continue;
    const DigraphMap& f = maps.front();
    const DigraphMap& l = maps.back();
    std::vector<int> part = oracle::partition(g, h);
    bool naive = part.front() == part.back();
    auto track = are_homotopic(f, l, budget);
    if (track.has_value() != naive) {
      detail = "reachability differs on sampled pair " + std::to_string(i);
      return false;
    }
    if (track && !(track->validate() && validate_map(track->replay()))) {
      detail = "witness fails replay on sampled pair " + std::to_string(i);
      return false;
    }
    ++spot;
  }
  detail = std::to_string(checked) + " digraph pairs, " +
           std::to_string(spot) + " reachability spot checks";
  return true;
}

bool criterion_determinism(std::string& detail) {
  fixtures::RunReport r1 = fixtures::run_fixtures("");
  fixtures::RunReport r2 = fixtures::run_fixtures("");
  if (!r1.all_passed()) {
    detail = "first sweep had failures";
    return false;
  }
  if (r1.text != r2.text) {
    detail = "reports differ between runs";
    return false;
  }
  detail = "two full sweeps, byte-identical reports (" +
           std::to_string(r1.ran) + " fixtures)";
  return true;
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    const char* title;
    std::vector<std::string> ids;  // empty = custom body
  };
  const std::vector<Criterion> table = {
      {1, "product fixtures", {"tensor-example", "box-example"}},
      {2, "no categorical product", {"no-product"}},
      {3,
       "contractibility certificates",
       {"contract-plus", "contract-minus", "contract-square", "contract-cube",
        "triangle-not-contractible", "cone-empty-point", "cone-contractible"}},
      {4, "no extension for the corner slide", {"hep-c3", "hep-c3-longer"}},
      {5,
       "cylinder crushes onto the codomain",
       {"cylinder-crush-example", "cylinder-random"}},
      {6, "tube certificates of length two", {"tube-example", "tube-random"}},
      {7,
       "cofiber nullhomotopy word",
       {"cofiber-null-example", "cofiber-null-random"}},
      {8, "glued-cone comparison audits", {"gat-image-audits", "gat-base-audits"}},
      {9, "oracle equivalence", {}},
      {10,
       "finite system lemmas",
       {"limits-cofinal-random", "limits-chain-random", "limits-closure-random"}},
      {11, "additivity bijection", {"additivity-example", "additivity-random"}},
      {12,
       "tower steps with replayable certificates",
       {"base-step-demo", "base-step-empty", "inductive-demo",
        "inductive-fixpoint", "inductive-random"}},
      {13, "determinism", {}},
  };

  int failures = 0;
  for (const Criterion& c : table) {
    std::string detail;
    bool pass;
    if (c.number == 9)
      pass = criterion_oracle(detail);
    else if (c.number == 13)
      pass = criterion_determinism(detail);
    else
      pass = run_group(c.ids, detail);
    std::printf("%s criterion %2d (%s):%s%s\n", pass ? "PASS" : "FAIL",
                c.number, c.title, detail.empty() ? "" : " ", detail.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
  }
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  return failures ? 1 : 0;
}
