#ifndef DIHO_LIMITS_HPP
#define DIHO_LIMITS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace diho::limits {

/*
 * Finite diagram of finite token sets with at most one function per ordered
 * pair of objects.  Identities are always present; the hom table is closed
 * under composition (enforced at build time).  Objects are kept sorted by
 * name; tokens sorted per object.
 */
class FiniteSystem {
 public:
  int object_count() const { return static_cast<int>(names_.size()); }
  const std::string& object_name(int i) const { return names_[static_cast<size_t>(i)]; }
  int object_index(const std::string& name) const;  // -1 when absent
  const std::vector<std::string>& tokens(int obj) const { return tokens_[static_cast<size_t>(obj)]; }

  bool has_hom(int src, int dst) const;
  /* Token-index map src -> dst. */
  const std::vector<int>& hom(int src, int dst) const;
  const std::map<std::pair<int, int>, std::vector<int>>& homs() const { return homs_; }

  friend class SystemBuilder;

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<std::string>> tokens_;
  std::map<std::pair<int, int>, std::vector<int>> homs_;  // identities included
};

class SystemBuilder {
 public:
  SystemBuilder& add_object(const std::string& name,
                            std::vector<std::string> tokens);
  SystemBuilder& add_morphism(const std::string& src, const std::string& dst,
                              const std::map<std::string, std::string>& fn);
  /* Adds identities, rejects duplicate homs, non-identity self-maps, and
   * hom tables that are not closed under composition. */
  FiniteSystem build() const;

 private:
  std::vector<std::pair<std::string, std::vector<std::string>>> objects_;
  std::vector<std::tuple<std::string, std::string, std::map<std::string, std::string>>> mors_;
};

struct SystemReport {
  bool common_sources = true;  // every object pair dominated by one source
  std::vector<std::pair<std::string, std::string>> missing_sources;
  bool all_surjective = true;
  std::vector<std::pair<std::string, std::string>> non_surjective;
  bool all_nonempty = true;
  std::vector<std::string> empty_objects;
};

SystemReport validate_system(const FiniteSystem& s);

/* One token index per object, compatible with every hom. */
using LimitElement = std::vector<int>;

std::vector<LimitElement> inverse_limit(const FiniteSystem& s);

/* sub must be a subsystem of s: same token sets, homs drawn from s. */
void require_subsystem(const FiniteSystem& sub, const FiniteSystem& s);

/* Every object of s receives a morphism from some object of sub. */
bool is_cofinal(const FiniteSystem& sub, const FiniteSystem& s);

struct RestrictionReport {
  bool cofinal = false;
  size_t whole_count = 0;
  size_t sub_count = 0;
  bool injective = false;
  bool surjective = false;
  bool bijective() const { return injective && surjective; }
};

/* Forget the coordinates outside sub and compare the two limits. */
RestrictionReport restriction_check(const FiniteSystem& sub,
                                    const FiniteSystem& s);

/*
 * For a finite chain with surjective steps and nonempty objects, produce a
 * limit element by chasing least preimages up the chain.  Rejects systems
 * that are not linearly ordered by their hom table.
 */
LimitElement sequence_limit_witness(const FiniteSystem& s);

struct ClosureResult {
  /* Per ordered object pair, every function solving f(a(z)) = b(z) for some
   * common source Z with legs a, b in the base system. */
  std::map<std::pair<int, int>, std::vector<std::vector<int>>> homs;
  bool at_most_one = true;      // no pair carries two distinct solutions
  bool all_onto = true;         // every solution is surjective
  bool base_embeds = true;      // base homs reappear among the solutions
  bool common_sources = true;   // inherited pair domination
};

/* Requires every pair dominated and every base morphism surjective. */
ClosureResult closure_category(const FiniteSystem& s);

}  // namespace diho::limits

#endif
