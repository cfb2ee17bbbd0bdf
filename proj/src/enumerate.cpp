#include "nchopf/enumerate.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "nchopf/posets.hpp"
#include "nchopf/setcomp.hpp"
#include "nchopf/setpart.hpp"

namespace nchopf {

TruncatedSeries::TruncatedSeries(int order)
    : order_(order), coeffs_(static_cast<std::size_t>(order + 1)) {
  if (order < 0) throw std::invalid_argument("negative truncation order");
}

TruncatedSeries TruncatedSeries::one(int order) {
  return monomial(order, 0, 0, 1);
}

TruncatedSeries TruncatedSeries::monomial(int order, int n, int r, Integer c) {
  TruncatedSeries s(order);
  s.add(n, r, c);
  return s;
}

Integer TruncatedSeries::coeff(int n, int r) const {
  if (n < 0 || n > order_ || r < 0) return 0;
  const auto& row = coeffs_[n];
  return static_cast<std::size_t>(r) < row.size() ? row[r] : Integer(0);
}

int TruncatedSeries::t_degree(int n) const {
  if (n < 0 || n > order_) return -1;
  return static_cast<int>(coeffs_[n].size()) - 1;
}

Integer TruncatedSeries::at_t_one(int n) const {
  Integer s = 0;
  if (n >= 0 && n <= order_)
    for (const auto& c : coeffs_[n]) s += c;
  return s;
}

void TruncatedSeries::add(int n, int r, const Integer& c) {
  if (n < 0 || r < 0) throw std::invalid_argument("negative exponent");
  if (n > order_ || c == 0) return;
  auto& row = coeffs_[n];
  if (row.size() <= static_cast<std::size_t>(r)) row.resize(r + 1);
  row[r] += c;
  trim();
}

void TruncatedSeries::trim() {
  for (auto& row : coeffs_)
    while (!row.empty() && row.back() == 0) row.pop_back();
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
  const int top = std::min(order_, o.order_);
  order_ = top;
  coeffs_.resize(top + 1);
  for (int n = 0; n <= top; ++n) {
    auto& row = coeffs_[n];
    const auto& other = o.coeffs_[n];
    if (row.size() < other.size()) row.resize(other.size());
    for (std::size_t r = 0; r < other.size(); ++r) row[r] += other[r];
  }
  trim();
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
  TruncatedSeries neg = o;
  for (auto& row : neg.coeffs_)
    for (auto& c : row) c = -c;
  return *this += neg;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries out(std::min(a.order_, b.order_));
  for (int n = 0; n <= out.order_; ++n)
    for (int m = 0; n + m <= out.order_; ++m) {
      const auto& x = a.coeffs_[n];
      const auto& y = b.coeffs_[m];
      if (x.empty() || y.empty()) continue;
      auto& row = out.coeffs_[n + m];
      if (row.size() < x.size() + y.size() - 1)
        row.resize(x.size() + y.size() - 1);
      for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j) row[i + j] += x[i] * y[j];
    }
  out.trim();
  return out;
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
  return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
}

TruncatedSeries TruncatedSeries::inverse() const {
  const auto& c0 = coeffs_[0];
  if (c0.size() != 1 || (c0[0] != 1 && c0[0] != -1))
    throw std::domain_error("series constant term is not a unit");
  const Integer u = c0[0];
  // inv = u * (1 - u*s)^{-1} expanded degree by degree.
  TruncatedSeries inv(order_);
  inv.add(0, 0, u);
  for (int n = 1; n <= order_; ++n) {
    std::vector<Integer> acc;
    for (int k = 1; k <= n; ++k) {
      const auto& x = coeffs_[k];
      const auto& y = inv.coeffs_[n - k];
      if (x.empty() || y.empty()) continue;
      if (acc.size() < x.size() + y.size() - 1)
        acc.resize(x.size() + y.size() - 1);
      for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j) acc[i + j] += x[i] * y[j];
    }
    for (std::size_t r = 0; r < acc.size(); ++r) inv.add(n, r, -u * acc[r]);
  }
  return inv;
}

TruncatedSeries TruncatedSeries::pow(unsigned e) const {
  TruncatedSeries result = one(order_);
  TruncatedSeries base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Integer CountTable::total(int k) const {
  Integer s = 0;
  for (const auto& c : rows.at(k)) s += c;
  return s;
}

namespace enumerate {

Integer factorial(int n) {
  Integer f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

Integer stirling2(int n, int k) {
  if (n == 0 && k == 0) return 1;
  if (n < 0 || k < 1 || k > n)
    throw std::out_of_range("stirling2(" + std::to_string(n) + ", " +
                            std::to_string(k) + ") needs 1 <= k <= n");
  std::vector<Integer> row{1};  // row n = 1, entries k = 1..n
  for (int m = 2; m <= n; ++m) {
    std::vector<Integer> next(m);
    for (int j = 1; j <= m; ++j) {
      const Integer left = j >= 2 ? row[j - 2] : Integer(0);
      const Integer same = j <= m - 1 ? row[j - 1] : Integer(0);
      next[j - 1] = left + j * same;
    }
    row = std::move(next);
  }
  return row[k - 1];
}

Integer bell(int n) {
  if (n < 0) throw std::out_of_range("bell of a negative number");
  // B_{m+1} = sum over k of binom(m, k) B_k.
  std::vector<Integer> b{1};
  for (int m = 0; m < n; ++m) {
    Integer s = 0;
    Integer binom = 1;
    for (int k = 0; k <= m; ++k) {
      s += binom * b[k];
      binom = binom * (m - k) / (k + 1);
    }
    b.push_back(s);
  }
  return b[n];
}

Integer ordered_bell(int n) {
  if (n == 0) return 1;
  Integer s = 0;
  for (int k = 1; k <= n; ++k) s += factorial(k) * stirling2(n, k);
  return s;
}

namespace {

CountTable empty_table(std::string name, int nMax) {
  CountTable t{std::move(name), {}};
  t.rows.assign(nMax + 1, std::vector<Integer>(nMax + 1, 0));
  return t;
}

}  // namespace

CountTable atomic_counts(int nMax) {
  CountTable t = empty_table("atomic", nMax);
  for (int k = 1; k <= nMax; ++k)
    for (const auto& a : setpart::enumerate(k))
      if (setpart::is_atomic(a)) t.rows[k][a.length()] += 1;
  return t;
}

CountTable comp_atomic_counts(int nMax) {
  CountTable t = empty_table("comp_atomic", nMax);
  for (int k = 1; k <= nMax; ++k)
    for (const auto& a : setcomp::enumerate(k))
      if (setcomp::is_atomic(a)) t.rows[k][a.length()] += 1;
  return t;
}

CountTable lyndon_counts(int nMax) {
  CountTable t = empty_table("lyndon", nMax);
  for (int k = 1; k <= nMax; ++k)
    for (const auto& a : setpart::enumerate(k))
      if (setpart::is_lyndon(a)) t.rows[k][a.length()] += 1;
  return t;
}

CountTable sharp_rank_counts(int nMax) {
  CountTable t = empty_table("sharp_rank", nMax);
  for (int n = 0; n <= nMax; ++n) {
    const FinitePoset p = posets::sharp_class(Composition{std::vector<int>(n, 1)});
    for (int r : p.structure().rank) t.rows[n][r] += 1;
  }
  return t;
}

std::string table_tsv(const CountTable& t) {
  const int nMax = static_cast<int>(t.rows.size()) - 1;
  std::string out = "k\ttotal";
  for (int i = 0; i <= nMax; ++i) out += "\t" + std::to_string(i);
  out += "\n";
  for (int k = 0; k <= nMax; ++k) {
    out += std::to_string(k) + "\t" + t.total(k).str();
    for (const auto& c : t.rows[k]) out += "\t" + c.str();
    out += "\n";
  }
  return out;
}

CountTable table_by_name(std::string_view name, int nMax) {
  if (name == "atomic") return atomic_counts(nMax);
  if (name == "comp_atomic") return comp_atomic_counts(nMax);
  if (name == "lyndon") return lyndon_counts(nMax);
  if (name == "sharp_rank") return sharp_rank_counts(nMax);
  throw std::invalid_argument("unknown table '" + std::string(name) +
                              "' (atomic, comp_atomic, lyndon, sharp_rank)");
}

TruncatedSeries permutation_rank_series(int order) {
  TruncatedSeries g(order);
  for (int k = 0; k <= order; ++k) g.add(k, 0, factorial(k));
  const TruncatedSeries t = TruncatedSeries::monomial(order, 0, 1);
  return g * (t + g - t * g).inverse();
}

namespace {

// First differing coefficient, as "q^n t^r: lhs a, rhs b".
std::string first_difference(const TruncatedSeries& lhs,
                             const TruncatedSeries& rhs) {
  for (int n = 0; n <= std::min(lhs.order(), rhs.order()); ++n) {
    const int top = std::max(lhs.t_degree(n), rhs.t_degree(n));
    for (int r = 0; r <= top; ++r)
      if (lhs.coeff(n, r) != rhs.coeff(n, r))
        return "q^" + std::to_string(n) + " t^" + std::to_string(r) +
               ": lhs " + lhs.coeff(n, r).str() + ", rhs " +
               rhs.coeff(n, r).str();
  }
  return {};
}

CheckResult compare(const std::string& name, int order,
                    const TruncatedSeries& lhs, const TruncatedSeries& rhs) {
  CheckResult r{name, order};
  r.witness = first_difference(lhs, rhs);
  r.ok = r.witness.empty();
  return r;
}

// 1 / (1 - sum of table[k][i] t^i q^k), or with t set to 1.
TruncatedSeries geometric(const CountTable& t, int order, bool graded) {
  TruncatedSeries s(order);
  const int top = std::min<int>(order, static_cast<int>(t.rows.size()) - 1);
  for (int k = 1; k <= top; ++k)
    for (std::size_t i = 0; i < t.rows[k].size(); ++i)
      s.add(k, graded ? static_cast<int>(i) : 0, t.rows[k][i]);
  return (TruncatedSeries::one(order) - s).inverse();
}

// Product of (1 - t^i q^k)^(-table[k][i]), or with t set to 1.
TruncatedSeries euler_product(const CountTable& t, int order, bool graded) {
  TruncatedSeries s = TruncatedSeries::one(order);
  const int top = std::min<int>(order, static_cast<int>(t.rows.size()) - 1);
  for (int k = 1; k <= top; ++k)
    for (std::size_t i = 0; i < t.rows[k].size(); ++i) {
      const Integer& e = t.rows[k][i];
      if (e == 0) continue;
      const TruncatedSeries factor =
          TruncatedSeries::one(order) -
          TruncatedSeries::monomial(order, k, graded ? static_cast<int>(i) : 0);
      s = s * factor.pow(static_cast<unsigned>(e)).inverse();
    }
  return s;
}

TruncatedSeries stirling_series(int order, bool graded, bool ordered) {
  TruncatedSeries s = TruncatedSeries::one(order);
  for (int n = 1; n <= order; ++n)
    for (int r = 1; r <= n; ++r) {
      Integer c = stirling2(n, r);
      if (ordered) c *= factorial(r);
      s.add(n, graded ? r : 0, c);
    }
  return s;
}

CheckResult table_sanity(const std::string& name, const CountTable& t,
                         int order, bool compositions) {
  CheckResult r{name, order};
  for (int k = 1; k <= order && r.ok; ++k) {
    Integer direct = 0;
    if (compositions) {
      for (const auto& a : setcomp::enumerate(k))
        if (setcomp::is_atomic(a)) direct += 1;
    } else if (t.name == "lyndon") {
      for (const auto& a : setpart::enumerate(k))
        if (setpart::is_lyndon(a)) direct += 1;
    } else {
      for (const auto& a : setpart::enumerate(k))
        if (setpart::is_atomic(a)) direct += 1;
    }
    if (direct != t.total(k)) {
      r.ok = false;
      r.witness = "k=" + std::to_string(k) + ": rows sum to " +
                  t.total(k).str() + ", direct count " + direct.str();
    }
  }
  return r;
}

}  // namespace

Report series_identity_check(std::string_view which, int order) {
  Report report;
  if (which == "i" || which == "ii") {
    const CountTable a = atomic_counts(order);
    const bool graded = which == "i";
    report.push_back(compare("enumerate.identity_" + std::string(which), order,
                             geometric(a, order, graded),
                             stirling_series(order, graded, false)));
    report.push_back(table_sanity("enumerate.atomic_table", a, order, false));
  } else if (which == "iii" || which == "iv") {
    const CountTable b = lyndon_counts(order);
    const bool graded = which == "iii";
    report.push_back(compare("enumerate.identity_" + std::string(which), order,
                             euler_product(b, order, graded),
                             stirling_series(order, graded, false)));
    report.push_back(table_sanity("enumerate.lyndon_table", b, order, false));
  } else if (which == "v") {
    const CountTable c = comp_atomic_counts(order);
    report.push_back(compare("enumerate.identity_v", order,
                             geometric(c, order, true),
                             stirling_series(order, true, true)));
    report.push_back(
        table_sanity("enumerate.comp_atomic_table", c, order, true));
  } else if (which == "vi") {
    // Elements of rank r are counted by the coefficient of x^n t^(n-r).
    const CountTable ranks = sharp_rank_counts(order);
    TruncatedSeries counted(order);
    for (int n = 0; n <= order; ++n)
      for (int r = 0; r <= n; ++r) counted.add(n, n - r, ranks.rows[n][r]);
    report.push_back(compare("enumerate.identity_vi", order, counted,
                             permutation_rank_series(order)));
    CheckResult agree{"enumerate.sharp_rank_formula", order};
    for (int n = 0; n <= order && agree.ok; ++n) {
      const Composition ones{std::vector<int>(n, 1)};
      const auto cls = setcomp::with_alpha(ones);
      const FinitePoset p = posets::sharp_class(ones);
      const auto rank = p.structure().rank;
      for (std::size_t i = 0; i < cls.size(); ++i)
        if (rank[i] != setcomp::sharp_rank(cls[i])) {
          agree.ok = false;
          agree.witness = cls[i].str();
          break;
        }
    }
    report.push_back(agree);
  } else {
    throw std::invalid_argument("unknown identity '" + std::string(which) +
                                "' (i, ii, iii, iv, v, vi)");
  }
  return report;
}

Report verify_series(int partition_order, int composition_order,
                     int rank_order) {
  Report report;
  for (const char* w : {"i", "ii", "iii", "iv"})
    append(report, series_identity_check(w, partition_order));
  append(report, series_identity_check("v", composition_order));
  append(report, series_identity_check("vi", rank_order));
  return report;
}

}  // namespace enumerate
}  // namespace nchopf
