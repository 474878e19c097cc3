#ifndef DIHO_MAP_HPP
#define DIHO_MAP_HPP

#include <map>
#include <vector>

#include "diho/digraph.hpp"

namespace diho {

/*
 * Total vertex assignment between two digraphs.  Validity (every edge
 * collapsed or carried to an edge) is a separate check, so invalid
 * assignments can be inspected and reported.
 */
class DigraphMap {
 public:
  DigraphMap(DigraphPtr domain, DigraphPtr codomain,
             const std::map<Label, Label>& assignment);
  DigraphMap(DigraphPtr domain, DigraphPtr codomain, std::vector<int> targets);

  static DigraphMap identity(DigraphPtr g);
  static DigraphMap constant(DigraphPtr domain, DigraphPtr codomain,
                             const Label& target);

  const Digraph& domain() const { return *dom_; }
  const Digraph& codomain() const { return *cod_; }
  const DigraphPtr& domain_ptr() const { return dom_; }
  const DigraphPtr& codomain_ptr() const { return cod_; }

  int apply_index(int v) const { return targets_[static_cast<size_t>(v)]; }
  Label apply(const Label& v) const;
  const std::vector<int>& targets() const { return targets_; }

  bool is_constant() const;

  bool same_signature(const DigraphMap& o) const {
    return domain() == o.domain() && codomain() == o.codomain();
  }
  bool operator==(const DigraphMap& o) const {
    return same_signature(o) && targets_ == o.targets_;
  }

  /* Full assignment in label order, rendered "a>b;c>d;". */
  std::string describe() const;

 private:
  DigraphPtr dom_, cod_;
  std::vector<int> targets_;
};

/* Every edge is collapsed (equal images) or mapped onto a codomain edge. */
bool validate_map(const DigraphMap& m);

/* g after f; signatures must chain. */
DigraphMap compose(const DigraphMap& g, const DigraphMap& f);

/* Restriction to a sub-digraph of the domain. */
DigraphMap restrict_map(const DigraphMap& m, DigraphPtr x);

bool is_identity(const DigraphMap& m);

}  // namespace diho

#endif
