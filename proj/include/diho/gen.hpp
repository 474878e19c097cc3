#ifndef DIHO_GEN_HPP
#define DIHO_GEN_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "diho/digraph.hpp"
#include "diho/error.hpp"
#include "diho/limits.hpp"
#include "diho/map.hpp"

namespace diho::gen {

/* Seeded engine with modulo draws; identical across platforms and runs. */
class Rng {
 public:
  explicit Rng(uint64_t seed) : eng_(seed) {}
  uint64_t raw() { return eng_(); }
  int below(int n);              // in [0, n); n >= 1
  bool chance(int num, int den); // true with probability num/den

 private:
  std::mt19937_64 eng_;
};

/* Digraph on n single-letter vertices keeping each ordered pair as an edge
 * with probability num/den. */
Digraph random_digraph(Rng& rng, int n, int num, int den);

/* Uniform choice among all maps g -> h; empty when no map exists. */
std::optional<DigraphMap> random_map(Rng& rng, const Digraph& g,
                                     const Digraph& h, Budget& budget);

/*
 * Rooted-tree system: morphisms run from ancestors to descendants along
 * unique paths, so "at most one morphism" and "common sources" hold by
 * construction; with surjective steps every morphism is onto.
 */
struct TreeSystem {
  limits::FiniteSystem system;
  std::string root;
  std::vector<std::string> names;    // object order
  std::vector<int> parent;           // -1 at the root
};
TreeSystem random_tree_system(Rng& rng, int max_objects, int max_tokens,
                              bool surjective);

/* Chain o0 <- o1 <- ... with surjective steps (token sizes shrink down). */
limits::FiniteSystem random_chain_system(Rng& rng, int max_objects,
                                         int max_tokens);

}  // namespace diho::gen

#endif
