#ifndef NCHOPF_POSETS_HPP_
#define NCHOPF_POSETS_HPP_

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "nchopf/linalg.hpp"
#include "nchopf/report.hpp"
#include "nchopf/setcomp.hpp"

namespace nchopf {

// The relation handed to a poset builder is not antisymmetric (or the
// generating relation has a cycle). what() names a witness.
class PosetCycleError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct MoebiusValue {
  Integer value;
  // False when x is not below y; value is then 0.
  bool comparable;
};

struct PosetStructure {
  bool ranked = false;
  // Length of the longest chain from a minimal element up to each element.
  std::vector<int> rank;
  bool eulerian = false;
  std::string eulerian_witness;
  bool boolean_downsets = false;
  std::string boolean_witness;
};

// An explicit finite poset on labelled elements, stored with its full order
// relation and its cover relation.
class FinitePoset {
 public:
  // leq(i, j) must be a partial order on the indices; reflexivity is
  // assumed. Throws PosetCycleError on a pair i != j related both ways.
  static FinitePoset from_predicate(
      std::vector<std::string> labels,
      const std::function<bool(std::size_t, std::size_t)>& leq);
  // Order generated by the given relations (i below j) under reflexive
  // transitive closure. Throws PosetCycleError when they contain a cycle.
  static FinitePoset from_relations(
      std::vector<std::string> labels,
      const std::vector<std::pair<std::size_t, std::size_t>>& relations);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<std::size_t> index_of(const std::string& label) const;

  bool leq(std::size_t i, std::size_t j) const { return below_[j][i]; }
  // Sorted pairs (i, j) with j covering i.
  const std::vector<std::pair<std::size_t, std::size_t>>& covers() const {
    return covers_;
  }
  // Elements covered by i, ascending.
  std::vector<std::size_t> lower_covers(std::size_t i) const;
  std::vector<std::size_t> upset(std::size_t i) const { return up_[i]; }
  std::vector<std::size_t> downset(std::size_t i) const;
  // Connected components of the cover graph, each ascending.
  std::vector<std::vector<std::size_t>> components() const;

  MoebiusValue moebius(std::size_t x, std::size_t y) const;

  // Ranked when every cover raises the longest-chain height by one.
  // Eulerian: every interval [x, y] with x < y has as many elements of
  // even rank as of odd rank. Boolean: every principal down-set is a
  // boolean lattice.
  PosetStructure structure() const;
  // True when the given elements (an order ideal, filter or component)
  // form a boolean lattice under the induced order.
  bool is_boolean_lattice(const std::vector<std::size_t>& elements) const;

  // One node per element, one edge per cover (lower -> upper), elements of
  // equal height grouped with rank=same.
  std::string to_dot(const std::string& name) const;
  // {"elements": [...], "covers": [[lower, upper], ...], "ranks": [...]}
  std::string to_json() const;

 private:
  void finish();

  std::vector<std::string> labels_;
  // below_[j][i] is true when i <= j.
  std::vector<std::vector<bool>> below_;
  std::vector<std::vector<std::size_t>> up_;
  std::vector<std::pair<std::size_t, std::size_t>> covers_;
  std::vector<int> height_;
};

namespace posets {

// Named orders on combinatorial objects, elements in canonical-string order.
FinitePoset star_partitions(int n);
FinitePoset refinement_partitions(int n);
FinitePoset star_compositions(int n);
FinitePoset refinement_compositions(int n);
FinitePoset sharp_class(const Composition& alpha);
// All set compositions of [n] under <=_#; one component per class.
FinitePoset sharp_compositions(int n);

// Phi -> reverse_complement(Phi) maps the alpha class onto the class of
// reversed alpha and preserves <=_# in both directions.
CheckResult reversal_complement_isomorphism(const Composition& alpha);

// Set-partition <=_* order, 0 <= n <= max_n.
Report verify_partition_orders(int max_n);
// Set-composition <=_* components and <=_# isomorphisms, n <= max_n.
Report verify_composition_orders(int max_n);

}  // namespace posets
}  // namespace nchopf

#endif  // NCHOPF_POSETS_HPP_
