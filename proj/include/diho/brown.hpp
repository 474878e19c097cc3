#ifndef DIHO_BROWN_HPP
#define DIHO_BROWN_HPP

#include <map>
#include <string>
#include <vector>

#include "diho/constructions.hpp"
#include "diho/homotopy.hpp"

namespace diho::brown {

/* Deformation classes of maps into one fixed target, memoized per domain. */
class Representable {
 public:
  explicit Representable(Digraph z) : z_(share(std::move(z))) {}
  const Digraph& target() const { return *z_; }
  const DigraphPtr& target_ptr() const { return z_; }
  const ClassTable& classes_for(const Digraph& k, Budget& budget);

 private:
  DigraphPtr z_;
  std::map<std::string, ClassTable> memo_;
};

/* Class of u . f among maps domain(f) -> target. */
int yoneda_class(Representable& rep, const DigraphMap& u, const DigraphMap& f,
                 Budget& budget);

struct AdditivityReport {
  size_t whole_classes = 0;
  size_t tuple_count = 0;  // product over the parts
  bool injective = false;
  bool surjective = false;
  bool bijective() const { return injective && surjective; }
};

/* Classes out of a disjoint union against per-part class tuples. */
AdditivityReport audit_additivity(const Digraph& z,
                                  const std::vector<Digraph>& parts,
                                  Budget& budget);

struct MayerVietorisReport {
  size_t union_classes = 0;
  size_t fibered_pairs = 0;
  bool pairs_agree = true;  // restrictions always land in the fibered set
  bool onto = false;
  std::vector<std::pair<int, int>> missed;
};

/* Restrict classes on g1 u g2 to the two pieces and compare against pairs
 * agreeing on the intersection. */
MayerVietorisReport audit_mayer_vietoris(const Digraph& z, const Digraph& g1,
                                         const Digraph& g2, Budget& budget);

struct CofiberReport {
  size_t cofiber_classes = 0;
  size_t codomain_classes = 0;
  size_t domain_classes = 0;
  bool forward_null = true;      // pulling any cofiber class through f is null
  bool backward_complete = true; // null-pulling classes all lift to the cofiber
  std::vector<int> unliftable;
};

CofiberReport audit_cofiber(const Digraph& z, const DigraphMap& f,
                            Budget& budget);

/* The two overlapping thirds of the chain
 * (g disjoint h) -> (g union h) -> cofiber -> cofiber of the inclusion. */
struct ChainReport {
  CofiberReport first;
  CofiberReport second;
};

ChainReport audit_cofiber_chain(const Digraph& z, const Digraph& g,
                                const Digraph& h, Budget& budget);

struct AttachmentRecord {
  int tube = 0;
  int test_index = 0;
  std::map<std::string, std::string> f, g;  // test vertex -> stage vertex
  bool extended = true;
  std::string word;  // certificate word through the tube
};

struct StageState {
  DigraphPtr y;
  DigraphPtr z;
  std::vector<int> u_targets;  // vertex-wise, in y's label order
  std::vector<Digraph> tests;
  std::vector<AttachmentRecord> log;
  int next_tube = 0;

  DigraphMap u() const { return DigraphMap(y, z, u_targets); }
};

struct BaseReport {
  StageState state;
  std::vector<size_t> class_counts;  // per test
  bool surjective = false;  // every class reached by u on its own copy
};

/* Stage one: adjoin one disjoint copy of each test per class of maps into
 * the target, mapped down by the class representative. */
BaseReport base_step(const Digraph& y0, const DigraphMap& u0, const Digraph& z,
                     const std::vector<Digraph>& tests, Budget& budget);

struct StepReport {
  StageState state;
  int attached = 0;
  int failed = 0;
  std::vector<AttachmentRecord> failures;
  bool postcondition_ok = true;  // attached pairs merge, certificates replay
};

/*
 * One tower step: for every pair of map classes out of a test digraph that
 * agree after composing with u but differ upstairs, glue a tube between
 * them and extend u over it.  Tubes whose extension search fails are rolled
 * back and logged.  Every attached pair is re-checked by replaying its
 * two-step certificate through the shared source slice.
 */
StepReport inductive_step(const StageState& in, Budget& budget);

std::string format_stage(const StageState& s);
StageState parse_stage(const std::string& text);

}  // namespace diho::brown

#endif
