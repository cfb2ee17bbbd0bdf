#ifndef NCHOPF_SETPART_HPP_
#define NCHOPF_SETPART_HPP_

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nchopf/errors.hpp"

namespace nchopf {

// A block is a strictly increasing list of positive integers.
using Block = std::vector<int>;

// A set partition of [n] in canonical form: blocks ordered by their minimum,
// entries ascending. Stored as a restricted growth string, so equality,
// ordering and hashing are cheap and canonical.
class SetPartition {
 public:
  SetPartition() = default;

  // Validates that the blocks partition {1..n} and canonicalizes.
  static SetPartition from_blocks(std::vector<Block> blocks);
  // `labels[i]` is the 0-based block index of element i+1; any labelling
  // is accepted and renumbered by first occurrence.
  static SetPartition from_labels(std::span<const int> labels);
  // Parses "{b1|b2|...}" with comma-separated entries per block.
  static SetPartition parse(std::string_view text);

  int size() const { return static_cast<int>(labels_.size()); }
  int length() const { return length_; }
  bool empty() const { return labels_.empty(); }

  // 0-based block index of `element` (1-based), blocks ordered by minimum.
  int block_of(int element) const { return labels_[element - 1]; }
  std::vector<Block> blocks() const;

  std::string str() const;

  friend auto operator<=>(const SetPartition&, const SetPartition&) = default;
  friend bool operator==(const SetPartition&, const SetPartition&) = default;

 private:
  std::vector<std::uint8_t> labels_;
  int length_ = 0;
};

namespace setpart {

// All partitions of [n], sorted by canonical string. The returned list is
// computed once per n and shared.
const std::vector<SetPartition>& enumerate(int n);
std::vector<SetPartition> enumerate_by_length(int n, int k);

SetPartition meet(const SetPartition& a, const SetPartition& b);
SetPartition join(const SetPartition& a, const SetPartition& b);
// Refinement order: every block of `a` lies inside a block of `b`.
bool leq(const SetPartition& a, const SetPartition& b);

// a|b: the blocks of b are shifted up by |a| and appended.
SetPartition concat(const SetPartition& a, const SetPartition& b);

// Blocks of `a` intersected with `subset`, empty blocks dropped. The result
// is a partition of `subset` (not standardized).
std::vector<Block> restrict(const SetPartition& a, std::span<const int> subset);
// Order-preserving relabelling of a partition of any finite set onto [k].
SetPartition standardize(const std::vector<Block>& blocks);
// Inverse of standardize onto the support `subset` (|subset| == |a|).
std::vector<Block> raise(const SetPartition& a, std::span<const int> subset);

// The split A^!: maximal factorization into atomic pieces under |.
// The empty partition has the empty factorization.
std::vector<SetPartition> atomic_split(const SetPartition& a);
bool is_atomic(const SetPartition& a);
// w(A): letter i is j when i lies in the j-th atomic factor (1-based).
std::vector<int> split_word(const SetPartition& a);

// Total order on all set partitions: size, then length, then split_word.
std::strong_ordering cmp_atoms(const SetPartition& a, const SetPartition& b);
// Order by number of atomic factors, then lexicographically on the
// factor sequence with letters compared by cmp_atoms.
std::strong_ordering cmp_length_lex(const SetPartition& a,
                                    const SetPartition& b);

// A^! is strictly smaller than each of its nontrivial rotations.
bool is_lyndon(const SetPartition& a);

// Partitions covering `a` in the <=_* order: merge two blocks when every
// entry of one is below every entry of the other.
std::vector<SetPartition> star_covers(const SetPartition& a);
bool star_leq(const SetPartition& a, const SetPartition& b);
// {b : a <=_* b}, sorted.
std::vector<SetPartition> star_upset(const SetPartition& a);
// {b : b <=_* a}, sorted.
std::vector<SetPartition> star_downset(const SetPartition& a);
// Entries that are not the maximum of their block.
std::vector<int> phi_set(const SetPartition& a);

}  // namespace setpart
}  // namespace nchopf

#endif  // NCHOPF_SETPART_HPP_
