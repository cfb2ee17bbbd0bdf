#ifndef NCHOPF_SRC_SUBSETS_HPP_
#define NCHOPF_SRC_SUBSETS_HPP_

#include <numeric>
#include <span>
#include <vector>

namespace nchopf::detail {

// Calls f(S, complement) for every k-subset S of {1..n}, both ascending,
// in lexicographic order of S.
template <class F>
void for_each_k_subset(int n, int k, F&& f) {
  if (k < 0 || k > n) return;
  std::vector<int> s(k);
  std::iota(s.begin(), s.end(), 1);
  std::vector<int> c;
  c.reserve(n - k);
  for (;;) {
    c.clear();
    for (int x = 1, i = 0; x <= n; ++x) {
      if (i < k && s[i] == x) ++i;
      else c.push_back(x);
    }
    f(std::span<const int>(s), std::span<const int>(c));
    int i = k - 1;
    while (i >= 0 && s[i] == n - k + i + 1) --i;
    if (i < 0) return;
    ++s[i];
    for (int j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
  }
}

}  // namespace nchopf::detail

#endif  // NCHOPF_SRC_SUBSETS_HPP_
