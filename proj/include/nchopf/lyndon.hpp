#ifndef NCHOPF_LYNDON_HPP_
#define NCHOPF_LYNDON_HPP_

#include <algorithm>
#include <compare>
#include <cstddef>
#include <span>
#include <vector>

namespace nchopf {

// Lexicographic comparison where a proper prefix is strictly smaller.
template <class T, class Cmp>
std::strong_ordering lex_compare(std::span<const T> u, std::span<const T> v,
                                 Cmp cmp) {
  const std::size_t n = std::min(u.size(), v.size());
  for (std::size_t i = 0; i < n; ++i) {
    const std::strong_ordering c = cmp(u[i], v[i]);
    if (c != std::strong_ordering::equal) return c;
  }
  return u.size() <=> v.size();
}

// Strictly smaller than every nontrivial cyclic rotation. Periodic words
// and the empty word are not Lyndon.
template <class T, class Cmp>
bool is_lyndon_word(std::span<const T> word, Cmp cmp) {
  const std::size_t n = word.size();
  if (n == 0) return false;
  std::vector<T> rotated(word.begin(), word.end());
  for (std::size_t shift = 1; shift < n; ++shift) {
    for (std::size_t i = 0; i < n; ++i) rotated[i] = word[(i + shift) % n];
    if (lex_compare<T>(word, rotated, cmp) != std::strong_ordering::less)
      return false;
  }
  return true;
}

// Duval's algorithm: the unique factorization into a lexicographically
// nonincreasing sequence of Lyndon words.
template <class T, class Cmp>
std::vector<std::vector<T>> lyndon_factorize(std::span<const T> word,
                                             Cmp cmp) {
  std::vector<std::vector<T>> factors;
  const std::size_t n = word.size();
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i + 1;
    std::size_t k = i;
    while (j < n) {
      const std::strong_ordering c = cmp(word[k], word[j]);
      if (c == std::strong_ordering::greater) break;
      k = (c == std::strong_ordering::less) ? i : k + 1;
      ++j;
    }
    while (i <= k) {
      factors.emplace_back(word.begin() + i, word.begin() + i + (j - k));
      i += j - k;
    }
  }
  return factors;
}

}  // namespace nchopf

#endif  // NCHOPF_LYNDON_HPP_
