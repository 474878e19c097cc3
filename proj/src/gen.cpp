#include "diho/gen.hpp"

#include <algorithm>
#include <numeric>

#include "diho/homotopy.hpp"

namespace diho::gen {

int Rng::below(int n) {
  return static_cast<int>(eng_() % static_cast<uint64_t>(n));
}

bool Rng::chance(int num, int den) { return below(den) < num; }

namespace {

Label letter(int i) { return Label::leaf(std::string(1, static_cast<char>('a' + i))); }

/* Surjection [0,src) -> [0,dst): seat every target first, fill the rest. */
std::vector<int> random_surjection(Rng& rng, int src, int dst) {
  std::vector<int> pos(static_cast<size_t>(src));
  std::iota(pos.begin(), pos.end(), 0);
  for (int c = 0; c < dst; ++c)
    std::swap(pos[static_cast<size_t>(c)],
              pos[static_cast<size_t>(c + rng.below(src - c))]);
  std::vector<int> out(static_cast<size_t>(src));
  for (int i = 0; i < src; ++i) out[static_cast<size_t>(i)] = rng.below(dst);
  for (int c = 0; c < dst; ++c) out[static_cast<size_t>(pos[static_cast<size_t>(c)])] = c;
  return out;
}

std::vector<std::string> token_pool(int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back("t" + std::to_string(i));
  return out;
}

}  // namespace

Digraph random_digraph(Rng& rng, int n, int num, int den) {
  Digraph::Builder b;
  for (int i = 0; i < n; ++i) b.add_vertex(letter(i));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && rng.chance(num, den)) b.add_edge(letter(i), letter(j));
  return b.build();
}

std::optional<DigraphMap> random_map(Rng& rng, const Digraph& g,
                                     const Digraph& h, Budget& budget) {
  std::vector<DigraphMap> all = enumerate_maps(g, h, budget);
  if (all.empty()) return std::nullopt;
  return all[static_cast<size_t>(rng.below(static_cast<int>(all.size())))];
}

TreeSystem random_tree_system(Rng& rng, int max_objects, int max_tokens,
                              bool surjective) {
  int n = 1 + rng.below(max_objects);
  TreeSystem out;
  std::vector<int> sizes(static_cast<size_t>(n));
  out.parent.assign(static_cast<size_t>(n), -1);
  for (int i = 0; i < n; ++i) out.names.push_back("o" + std::to_string(i));
  out.root = out.names[0];

  sizes[0] = 1 + rng.below(max_tokens);
  for (int i = 1; i < n; ++i) {
    out.parent[static_cast<size_t>(i)] = rng.below(i);
    int ps = sizes[static_cast<size_t>(out.parent[static_cast<size_t>(i)])];
    sizes[static_cast<size_t>(i)] =
        surjective ? 1 + rng.below(ps) : 1 + rng.below(max_tokens);
  }

  /* Step function along each tree edge, then all path composites. */
  std::vector<std::vector<int>> step(static_cast<size_t>(n));
  for (int i = 1; i < n; ++i) {
    int ps = sizes[static_cast<size_t>(out.parent[static_cast<size_t>(i)])];
    int cs = sizes[static_cast<size_t>(i)];
    if (surjective) {
      step[static_cast<size_t>(i)] = random_surjection(rng, ps, cs);
    } else {
      std::vector<int> fn(static_cast<size_t>(ps));
      for (int t = 0; t < ps; ++t) fn[static_cast<size_t>(t)] = rng.below(cs);
      step[static_cast<size_t>(i)] = fn;
    }
  }

  limits::SystemBuilder b;
  for (int i = 0; i < n; ++i)
    b.add_object(out.names[static_cast<size_t>(i)],
                 token_pool(sizes[static_cast<size_t>(i)]));
  for (int i = 1; i < n; ++i) {
    /* Composites from every ancestor of i down to i. */
    std::vector<int> fn = step[static_cast<size_t>(i)];
    int anc = out.parent[static_cast<size_t>(i)];
    while (anc >= 0) {
      std::map<std::string, std::string> named;
      for (int t = 0; t < sizes[static_cast<size_t>(anc)]; ++t)
        named["t" + std::to_string(t)] =
            "t" + std::to_string(fn[static_cast<size_t>(t)]);
      b.add_morphism(out.names[static_cast<size_t>(anc)],
                     out.names[static_cast<size_t>(i)], named);
      int up = out.parent[static_cast<size_t>(anc)];
      if (up >= 0) {
        const std::vector<int>& s = step[static_cast<size_t>(anc)];
        std::vector<int> next(static_cast<size_t>(sizes[static_cast<size_t>(up)]));
        for (int t = 0; t < sizes[static_cast<size_t>(up)]; ++t)
          next[static_cast<size_t>(t)] = fn[static_cast<size_t>(s[static_cast<size_t>(t)])];
        fn = std::move(next);
      }
      anc = up;
    }
  }
  out.system = b.build();
  return out;
}

limits::FiniteSystem random_chain_system(Rng& rng, int max_objects,
                                         int max_tokens) {
  int n = 1 + rng.below(max_objects);
  std::vector<int> sizes(static_cast<size_t>(n));
  sizes[static_cast<size_t>(n - 1)] = 1 + rng.below(max_tokens);
  for (int i = n - 2; i >= 0; --i)
    sizes[static_cast<size_t>(i)] = 1 + rng.below(sizes[static_cast<size_t>(i + 1)]);

  /* Steps o_{i+1} -> o_i, surjective; homs are all downward composites. */
  std::vector<std::vector<int>> step(static_cast<size_t>(n));
  for (int i = 0; i + 1 < n; ++i)
    step[static_cast<size_t>(i)] =
        random_surjection(rng, sizes[static_cast<size_t>(i + 1)], sizes[static_cast<size_t>(i)]);

  limits::SystemBuilder b;
  for (int i = 0; i < n; ++i)
    b.add_object("o" + std::to_string(i), token_pool(sizes[static_cast<size_t>(i)]));
  for (int j = 1; j < n; ++j) {
    std::vector<int> fn = step[static_cast<size_t>(j - 1)];
    for (int i = j - 1; i >= 0; --i) {
      std::map<std::string, std::string> named;
      for (int t = 0; t < sizes[static_cast<size_t>(j)]; ++t)
        named["t" + std::to_string(t)] =
            "t" + std::to_string(fn[static_cast<size_t>(t)]);
      b.add_morphism("o" + std::to_string(j), "o" + std::to_string(i), named);
      if (i > 0) {
        const std::vector<int>& s = step[static_cast<size_t>(i - 1)];
        std::vector<int> next(static_cast<size_t>(sizes[static_cast<size_t>(j)]));
        for (int t = 0; t < sizes[static_cast<size_t>(j)]; ++t)
          next[static_cast<size_t>(t)] = s[static_cast<size_t>(fn[static_cast<size_t>(t)])];
        fn = std::move(next);
      }
    }
  }
  return b.build();
}

}  // namespace diho::gen
