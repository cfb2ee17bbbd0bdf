#ifndef NCHOPF_ENUMERATE_HPP_
#define NCHOPF_ENUMERATE_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "nchopf/linalg.hpp"
#include "nchopf/report.hpp"

namespace nchopf {

// Power series in q with polynomial coefficients in t, truncated after
// q^order. coeff(n, r) is the coefficient of q^n t^r.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int order);

  static TruncatedSeries one(int order);
  // c * t^r * q^n.
  static TruncatedSeries monomial(int order, int n, int r, Integer c = 1);

  int order() const { return order_; }
  Integer coeff(int n, int r) const;
  // Highest t power stored at q^n (-1 when that coefficient is zero).
  int t_degree(int n) const;
  // Sum over r of coeff(n, r).
  Integer at_t_one(int n) const;

  void add(int n, int r, const Integer& c);

  TruncatedSeries& operator+=(const TruncatedSeries& o);
  TruncatedSeries& operator-=(const TruncatedSeries& o);
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) {
    return a += b;
  }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) {
    return a -= b;
  }
  friend TruncatedSeries operator*(const TruncatedSeries& a,
                                   const TruncatedSeries& b);
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);

  // Multiplicative inverse; the q^0 coefficient must be 1 or -1.
  TruncatedSeries inverse() const;
  TruncatedSeries pow(unsigned e) const;

 private:
  void trim();

  int order_;
  // coeffs_[n][r], trailing zeros trimmed.
  std::vector<std::vector<Integer>> coeffs_;
};

// rows[k][i] for 0 <= i, k <= nMax.
struct CountTable {
  std::string name;
  std::vector<std::vector<Integer>> rows;

  Integer total(int k) const;
};

namespace enumerate {

Integer bell(int n);
// n >= 0 and 1 <= k <= n, plus stirling2(0, 0) = 1; std::out_of_range
// otherwise.
Integer stirling2(int n, int k);
Integer ordered_bell(int n);
Integer factorial(int n);

// Atomic set partitions of [k] with i blocks.
CountTable atomic_counts(int nMax);
// Atomic set compositions of [k] with i parts.
CountTable comp_atomic_counts(int nMax);
// Lyndon set partitions of [k] with i blocks.
CountTable lyndon_counts(int nMax);
// Permutations of [n] (the (1^n) class) by <=_# rank, rows[n][r].
CountTable sharp_rank_counts(int nMax);

// Tab-separated: a header "k total 1 2 ... nMax", then one row per k.
std::string table_tsv(const CountTable& t);
CountTable table_by_name(std::string_view name, int nMax);

// g(x) / (t + g(x) - t g(x)) with g(x) = sum over k >= 0 of k! x^k.
TruncatedSeries permutation_rank_series(int order);

// Identities named "i" .. "vi"; `order` is the q truncation (for "vi", the
// largest n). One check per identity plus its table sanity check.
Report series_identity_check(std::string_view which, int order);
// All six at truncation q^8 for partitions, q^7 for compositions and
// n <= 5 for the rank series, or the given bounds.
Report verify_series(int partition_order = 8, int composition_order = 7,
                     int rank_order = 5);

}  // namespace enumerate
}  // namespace nchopf

#endif  // NCHOPF_ENUMERATE_HPP_
