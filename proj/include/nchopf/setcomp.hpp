#ifndef NCHOPF_SETCOMP_HPP_
#define NCHOPF_SETCOMP_HPP_

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nchopf/setpart.hpp"

namespace nchopf {

// An ordered sequence of disjoint nonempty blocks covering [n]. Stored as
// the word w(Phi) (0-based): labels[i] is the part holding element i+1.
// The default ordering is therefore the lexicographic order on w(Phi).
class SetComposition {
 public:
  SetComposition() = default;

  static SetComposition from_blocks(std::vector<Block> blocks);
  // `labels[i]` is the 0-based part index of element i+1; every index in
  // [0, max] must occur.
  static SetComposition from_labels(std::span<const int> labels);
  // Parses "(b1|b2|...)"; part order is kept, entries sorted per part.
  static SetComposition parse(std::string_view text);

  int size() const { return static_cast<int>(labels_.size()); }
  int length() const { return length_; }
  bool empty() const { return labels_.empty(); }

  int part_of(int element) const { return labels_[element - 1]; }
  std::vector<Block> blocks() const;

  std::string str() const;

  friend auto operator<=>(const SetComposition&,
                          const SetComposition&) = default;
  friend bool operator==(const SetComposition&,
                         const SetComposition&) = default;

 private:
  std::vector<std::uint8_t> labels_;
  int length_ = 0;
};

// An integer composition: the ordered part sizes of a set composition.
struct Composition {
  std::vector<int> parts;

  int size() const;
  std::string str() const;
  // Accepts "2,1,2" or "(2,1,2)".
  static Composition parse(std::string_view text);

  friend auto operator<=>(const Composition&, const Composition&) = default;
  friend bool operator==(const Composition&, const Composition&) = default;
};

namespace setcomp {

// All set compositions of [n], sorted by canonical string; cached per n.
const std::vector<SetComposition>& enumerate(int n);
std::vector<SetComposition> enumerate_by_length(int n, int k);

// Pseudo-meet: intersections Phi_i & Psi_j, i outer and j inner, with the
// empty ones dropped. Not commutative.
SetComposition wedge(const SetComposition& phi, const SetComposition& psi);
// Least common coarsening.
SetComposition vee(const SetComposition& phi, const SetComposition& psi);
// Refinement: each part of phi lies in a part of psi, and consecutive parts
// of phi land in the same or the next part of psi.
bool leq(const SetComposition& phi, const SetComposition& psi);

SetComposition concat(const SetComposition& phi, const SetComposition& psi);
std::vector<Block> restrict(const SetComposition& phi,
                            std::span<const int> subset);
SetComposition standardize(const std::vector<Block>& blocks);
std::vector<Block> raise(const SetComposition& phi,
                         std::span<const int> subset);

// Delta(gamma): position i goes to part #{distinct values below gamma_i}+1.
SetComposition delta_of_sequence(std::span<const int> gamma);

Composition alpha(const SetComposition& phi);
// A(Phi): forget the order of the parts.
SetPartition forget(const SetComposition& phi);
// Set compositions with part sizes `a`, sorted.
std::vector<SetComposition> with_alpha(const Composition& a);

std::vector<SetComposition> atomic_split(const SetComposition& phi);
bool is_atomic(const SetComposition& phi);

// <=_*: merge adjacent parts Phi_i, Phi_{i+1} when max Phi_i < min Phi_{i+1}.
std::vector<SetComposition> star_covers(const SetComposition& phi);
bool star_leq(const SetComposition& phi, const SetComposition& psi);
std::vector<SetComposition> star_upset(const SetComposition& phi);
std::vector<SetComposition> star_downset(const SetComposition& phi);

// <=_#: equal alpha, and each atomic factor of phi is the standardization of
// the matching run of consecutive parts of psi.
bool sharp_leq(const SetComposition& phi, const SetComposition& psi);
std::vector<SetComposition> sharp_upset(const SetComposition& phi);
// l(alpha(phi)) - l(phi^!); the minimal elements of each alpha class
// have rank 0.
int sharp_rank(const SetComposition& phi);

// Interleavings of the parts of phi with the parts of psi shifted by |phi|,
// each operand keeping its order. Sorted; binom(l(phi)+l(psi), l(phi)) terms.
std::vector<SetComposition> shifted_shuffle(const SetComposition& phi,
                                            const SetComposition& psi);

// w(Phi), 1-based.
std::vector<int> word(const SetComposition& phi);
std::strong_ordering word_lex_cmp(const SetComposition& phi,
                                  const SetComposition& psi);

// Reverse the parts and complement every entry x -> n+1-x.
SetComposition reverse_complement(const SetComposition& phi);

}  // namespace setcomp
}  // namespace nchopf

#endif  // NCHOPF_SETCOMP_HPP_
