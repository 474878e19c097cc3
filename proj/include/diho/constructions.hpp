#ifndef DIHO_CONSTRUCTIONS_HPP
#define DIHO_CONSTRUCTIONS_HPP

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "diho/map.hpp"

namespace diho {

struct Warning {
  std::string code;
  std::string detail;
};

/* A built digraph together with its canonical maps, looked up by name. */
struct ConstructionResult {
  Digraph result;
  std::vector<std::pair<std::string, DigraphMap>> maps;
  std::vector<Warning> warnings;
  const DigraphMap& map(const std::string& name) const;
};

/* Vertex-wise relabeling; must be injective on the vertex set. */
Digraph relabel(const Digraph& g, const std::function<Label(const Label&)>& fn);
/* Copy of g with every vertex v renamed Base(v). */
Digraph with_base_labels(const Digraph& g);

/* Edges move in one coordinate at a time. */
Digraph box_product(const Digraph& g, const Digraph& h);
/* Edges move in both coordinates at once. */
Digraph tensor_product(const Digraph& g, const Digraph& h);
/* Coordinate projections of a Pair-labeled product. */
std::pair<DigraphMap, DigraphMap> pair_projections(DigraphPtr product,
                                                   DigraphPtr g, DigraphPtr h);
/* u -> Pair(u, at), the box slice over a fixed second coordinate. */
DigraphMap box_slice(DigraphPtr g, DigraphPtr h, const Label& at);

/* Shared labels merge. */
Digraph digraph_union(const Digraph& g, const Digraph& h);
Digraph digraph_intersection(const Digraph& g, const Digraph& h);

/* Part i is tagged Pair(i, -); inclusions are named inc0, inc1, ... */
ConstructionResult disjoint_union(const std::vector<Digraph>& parts);

/*
 * Glue vertices of one ambient digraph along the equivalence closure of the
 * given pairs.  Merged vertices become Class{...}; singletons keep their
 * label.  Loops arising from merged edges are dropped.  When gluing breaks
 * the edge-compatibility condition (some representatives of adjacent classes
 * are neither equal nor adjacent) an INCOMPATIBLE_RELATION warning is
 * recorded and the construction still proceeds.  Canonical map: "quotient".
 */
ConstructionResult identification(const Digraph& ambient,
                                  const std::vector<std::pair<Label, Label>>& pairs);

/* Collapse a sub-digraph to one adjoined Star point. Canonical map: "quotient". */
ConstructionResult quotient(const Digraph& g, const Digraph& x);

/*
 * Mapping cylinder of f: G -> H.  Vertices Cyl(g) and Base(h); edges are H
 * on the base, G mirrored on the cylinder slice, and fibers
 * Cyl(g) -> Base(f(g)).  Maps: "base" (H in), "top" (G in), "crush" (onto H).
 */
ConstructionResult mapping_cylinder(const DigraphMap& f);
/* Extension edges between the Cyl slice and the base, through f. */
Digraph cylinder_extension(const DigraphMap& f);
/* Cylinder plus its extension.  Maps: "base", "top", "crush". */
ConstructionResult extended_mapping_cylinder(const DigraphMap& f);

/* Cone: G mirrored on Cone(-) plus a terminal Apex.  Map: "top". */
ConstructionResult cone(const Digraph& g);
/* Edges between the boundary of x in h and a cone point standing in for x. */
Digraph cone_extension(const Digraph& x, const Digraph& h);
/* cone(x) together with its extension inside h; shared Apex.  Map: "top". */
ConstructionResult extended_cone(const Digraph& x, const Digraph& h);

/*
 * Cofiber of f: G -> H built clause by clause: base copy of H, middle copy
 * of G, one Apex; glue fibers Base(f(g)) -> Mid(g); extension edges through
 * f in both directions; cone edges from Mid and from the image to Apex; and
 * boundary edges between Apex and the non-image neighbors of the image.
 * Maps: "base", "mid".
 */
ConstructionResult paper_cofiber(const DigraphMap& f);

/* Glue H1 and H2 along the images of a shared domain.  Maps: "inc0", "inc1". */
ConstructionResult pushout(const DigraphMap& f1, const DigraphMap& f2);
/* Pushout of a point against the cylinder top; the collapsed slice is Star.
 * Map: "base". */
ConstructionResult categorical_cofiber(const DigraphMap& f);

/* Reduced cylinder: source slice Src(v), glued image slice on Base labels. */
Digraph reduced_cylinder(const DigraphMap& f);

/*
 * Tube between two maps f, g with the same signature: both reduced
 * cylinders share one Src copy of the domain, plus extension edges from all
 * of Base(H) through f and through g.  Map: "src".
 */
ConstructionResult mapping_tube(const DigraphMap& f, const DigraphMap& g);
/* The tube glued onto the full codomain (Base labels).  Maps: "base", "src". */
ConstructionResult mapping_tube_union(const DigraphMap& f, const DigraphMap& g);

/* Cylinder and cofiber glued along the image slice only, or along all of H. */
enum class GatGlue { Image, Base };
ConstructionResult gat(const DigraphMap& f, GatGlue glue);

}  // namespace diho

#endif
