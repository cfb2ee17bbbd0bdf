#ifndef NCHOPF_REALIZATION_HPP_
#define NCHOPF_REALIZATION_HPP_

// Monomial bases realized as polynomials in non-commuting variables
// x_1..x_N. A word is the sequence of variable indices, 1-based.

#include <map>
#include <string>
#include <vector>

#include "nchopf/linalg.hpp"
#include "nchopf/report.hpp"
#include "nchopf/setcomp.hpp"
#include "nchopf/setpart.hpp"

namespace nchopf {

using Word = std::vector<int>;

struct WordPolynomial {
  int nVars = 0;
  std::map<Word, Integer> terms;
  // Set when the realization needed more distinct letters than nVars.
  bool degenerate = false;

  void add_term(const Word& w, const Integer& c);
  Integer coefficient(const Word& w) const;
  std::string str() const;

  friend bool operator==(const WordPolynomial& a, const WordPolynomial& b) {
    return a.nVars == b.nVars && a.terms == b.terms;
  }
};

template <class Index>
struct Reexpansion {
  Element<Index> element;
  // False when some word's coefficient differs from the rest of its
  // pattern class; `witness` then names that word.
  bool exact = true;
  std::string witness;
  // nVars smaller than the degree of some word, so patterns with too many
  // distinct letters are invisible.
  bool lossy = false;
};

namespace realization {

WordPolynomial realize_m(const SetPartition& a, int nVars);
WordPolynomial realize_M(const SetComposition& phi, int nVars);
WordPolynomial realize(const Element<SetPartition>& x, int nVars);
WordPolynomial realize(const Element<SetComposition>& x, int nVars);

WordPolynomial word_mul(const WordPolynomial& p, const WordPolynomial& q);
WordPolynomial permute_letters(const WordPolynomial& p,
                               const std::vector<int>& perm);

// Positions grouped by equal letters, blocks ordered by first position.
SetPartition letter_pattern(const Word& w);
// Positions grouped by equal letters, parts ordered by letter value.
SetComposition value_pattern(const Word& w);

Reexpansion<SetPartition> reexpand_m(const WordPolynomial& p);
Reexpansion<SetComposition> reexpand_M(const WordPolynomial& p);

bool quasisym_check(const WordPolynomial& p);
bool symmetric_check(const WordPolynomial& p);

// Product structure constants against the word oracle, realization round
// trips, letter-permutation invariance, quasi-symmetry and the theta sum.
Report verify_oracle(int max_partition_grade, int max_composition_grade);

}  // namespace realization
}  // namespace nchopf

#endif  // NCHOPF_REALIZATION_HPP_
