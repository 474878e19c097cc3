#ifndef DIHO_HOMOTOPY_HPP
#define DIHO_HOMOTOPY_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "diho/error.hpp"
#include "diho/map.hpp"

namespace diho {

/* Which single-step deformations connect f to g. */
struct OrientationSet {
  bool plus = false;
  bool minus = false;
  bool any() const { return plus || minus; }
};

/*
 * '+' holds when every vertex image stays put or moves along an edge
 * f(v) -> g(v); '-' is the same with the edge reversed.
 */
OrientationSet one_step(const DigraphMap& f, const DigraphMap& g);

/* All maps G -> H in lexicographic assignment order. */
std::vector<DigraphMap> enumerate_maps(const Digraph& g, const Digraph& h,
                                       Budget& budget);

/*
 * A deformation track: n+1 maps and an n-letter orientation word; step i
 * connects maps[i] to maps[i+1] in the direction word[i].  Replaying builds
 * the corresponding map on domain x line digraph.
 */
struct Homotopy {
  std::string word;
  std::vector<DigraphMap> maps;

  size_t length() const { return word.size(); }
  const DigraphMap& front() const { return maps.front(); }
  const DigraphMap& back() const { return maps.back(); }
  bool validate() const;
  DigraphMap replay() const;
  Homotopy reversed() const;
};

Homotopy concat(const Homotopy& a, const Homotopy& b);

/* Breadth-first search through the map space; returns a deformation track
 * from f to g, or nothing when the components differ. */
std::optional<Homotopy> are_homotopic(const DigraphMap& f, const DigraphMap& g,
                                      Budget& budget);

/* Finite domains make the weak relation coincide with the strong one. */
bool are_weakly_homotopic(const DigraphMap& f, const DigraphMap& g,
                          Budget& budget);

/* Every map reachable from f by single steps (assignment vectors). */
std::set<std::vector<int>> homotopy_component(const DigraphMap& f,
                                              Budget& budget);

/* Full map space partitioned into deformation classes. */
class ClassTable {
 public:
  ClassTable(DigraphPtr domain, DigraphPtr codomain,
             std::vector<std::vector<int>> maps, std::vector<int> class_of,
             std::vector<int> representative);

  const Digraph& domain() const { return *dom_; }
  const Digraph& codomain() const { return *cod_; }
  int map_count() const { return static_cast<int>(maps_.size()); }
  int class_count() const { return static_cast<int>(representative_.size()); }

  int index_of(const std::vector<int>& targets) const;  // -1 when absent
  int class_of_index(int map_index) const { return class_of_[static_cast<size_t>(map_index)]; }
  int class_of_map(const DigraphMap& m) const;
  DigraphMap map_at(int index) const;
  /* Lexicographically least member of the class. */
  DigraphMap representative(int cls) const;

 private:
  DigraphPtr dom_, cod_;
  std::vector<std::vector<int>> maps_;  // lex sorted
  std::vector<int> class_of_;
  std::vector<int> representative_;  // map indices
};

ClassTable homotopy_classes(const Digraph& g, const Digraph& h, Budget& budget);

/* The class contains a constant map (or the domain is empty). */
bool is_null_class(const ClassTable& table, int cls);

struct EquivalenceWitness {
  DigraphMap to;       // G -> H
  DigraphMap from;     // H -> G
  Homotopy back_track;     // from . to  ~ id on G
  Homotopy forward_track;  // to . from  ~ id on H
};

/* Deformation equivalence of digraphs; search over class representatives. */
std::optional<EquivalenceWitness> are_equivalent(const Digraph& g,
                                                 const Digraph& h,
                                                 Budget& budget);

/* Track from the identity to some constant map, when one exists. */
std::optional<Homotopy> is_contractible(const Digraph& g, Budget& budget);

/*
 * Extension problem: a map on all of G, a deformation of its restriction to
 * a sub-digraph X, and the question whether the deformation extends over G
 * step by step with the same orientation word.
 */
struct HepInstance {
  DigraphPtr whole;   // G
  DigraphPtr part;    // X, sub-digraph of G
  DigraphMap start;   // G -> H
  Homotopy track;     // maps X -> H; track.front() must equal start|X

  HepInstance(DigraphPtr g, DigraphPtr x, DigraphMap f0, Homotopy steps);
};

/*
 * Search for a step-by-step extension.  pad_limit 0 keeps the orientation
 * word fixed; a positive limit also allows up to that many inserted steps
 * whose restriction to X is stationary (free orientation).
 */
std::optional<Homotopy> check_hep(const HepInstance& inst, Budget& budget,
                                  int pad_limit = 0);

}  // namespace diho

#endif
