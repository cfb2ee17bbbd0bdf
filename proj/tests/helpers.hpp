#ifndef NCHOPF_TESTS_HELPERS_HPP_
#define NCHOPF_TESTS_HELPERS_HPP_

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "nchopf/linalg.hpp"
#include "nchopf/setcomp.hpp"
#include "nchopf/setpart.hpp"

namespace testing {

using nchopf::Basis;
using nchopf::Element;
using nchopf::Integer;
using nchopf::SetComposition;
using nchopf::SetPartition;

inline SetPartition P(const std::string& s) { return SetPartition::parse(s); }
inline SetComposition C(const std::string& s) {
  return SetComposition::parse(s);
}

inline constexpr unsigned kSeed = 20240611u;

// Uniform over restricted growth strings built letter by letter (not uniform
// over partitions, which is fine for property checks).
inline SetPartition random_partition(std::mt19937& rng, int n) {
  std::vector<int> labels;
  int top = -1;
  for (int i = 0; i < n; ++i) {
    std::uniform_int_distribution<int> d(0, top + 1);
    labels.push_back(d(rng));
    top = std::max(top, labels.back());
  }
  return SetPartition::from_labels(labels);
}

inline SetComposition random_composition(std::mt19937& rng, int n) {
  const SetPartition a = random_partition(rng, n);
  std::vector<int> order(a.length());
  for (int i = 0; i < a.length(); ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<int> labels(n);
  for (int x = 1; x <= n; ++x) labels[x - 1] = order[a.block_of(x)];
  return SetComposition::from_labels(labels);
}

inline std::vector<int> random_subset(std::mt19937& rng, int size, int span) {
  std::vector<int> all(span);
  for (int i = 0; i < span; ++i) all[i] = i + 1;
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(size);
  std::sort(all.begin(), all.end());
  return all;
}

// A random homogeneous element with up to `terms` terms, coefficients in
// [-3, 3].
template <class Index, class Gen>
Element<Index> random_element(std::mt19937& rng, Basis b, int grade, int terms,
                              Gen gen) {
  Element<Index> x(b);
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (int t = 0; t < terms; ++t) x.add_term(gen(rng, grade), coeff(rng));
  return x;
}

}  // namespace testing

#endif  // NCHOPF_TESTS_HELPERS_HPP_
