#include <doctest.h>

#include "helpers.hpp"
#include "nchopf/enumerate.hpp"

using namespace nchopf;
using namespace nchopf::enumerate;

namespace {

Integer power(Integer b, int e) {
  Integer r = 1;
  while (e-- > 0) r *= b;
  return r;
}

Integer binomial(int n, int k) {
  Integer r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

// k! S(n, k) = sum over j of (-1)^(k-j) C(k, j) j^n.
Integer surjections(int n, int k) {
  Integer s = 0;
  for (int j = 0; j <= k; ++j) {
    const Integer term = binomial(k, j) * power(j, n);
    s += (k - j) % 2 == 0 ? term : Integer(-term);
  }
  return s;
}

}  // namespace

TEST_CASE("classical numbers") {
  CHECK(bell(4) == 15);
  CHECK(bell(0) == 1);
  CHECK(stirling2(4, 2) == 7);
  CHECK(stirling2(0, 0) == 1);
  CHECK(ordered_bell(3) == 13);
  CHECK(factorial(5) == 120);
  CHECK_THROWS_AS(stirling2(3, 0), std::out_of_range);
  CHECK_THROWS_AS(stirling2(2, 3), std::out_of_range);
  CHECK_THROWS_AS(bell(-1), std::out_of_range);
}

TEST_CASE("Stirling numbers against inclusion-exclusion") {
  for (int n = 1; n <= 12; ++n) {
    Integer b = 0, ob = 0;
    for (int k = 1; k <= n; ++k) {
      CHECK(stirling2(n, k) * factorial(k) == surjections(n, k));
      b += stirling2(n, k);
      ob += surjections(n, k);
    }
    CHECK(bell(n) == b);
    CHECK(ordered_bell(n) == ob);
  }
}

TEST_CASE("atomic and Lyndon tables") {
  const CountTable a = atomic_counts(4);
  CHECK(a.total(1) == 1);
  CHECK(a.total(2) == 1);
  CHECK(a.total(3) == 2);
  CHECK(a.total(4) == 6);
  CHECK(a.rows[3][2] == 1);
  CHECK(comp_atomic_counts(2).total(2) == 2);
  CHECK(lyndon_counts(2).total(2) == 1);
  CHECK(table_by_name("lyndon", 3).name == "lyndon");
  CHECK_THROWS_AS(table_by_name("nope", 3), std::invalid_argument);
}

TEST_CASE("TSV rendering") {
  const std::string tsv = table_tsv(atomic_counts(2));
  CHECK(tsv == "k\ttotal\t0\t1\t2\n0\t0\t0\t0\t0\n1\t1\t0\t1\t0\n2\t1\t0\t1\t0\n");
}

TEST_CASE("truncated series arithmetic") {
  const int order = 6;
  const TruncatedSeries one = TruncatedSeries::one(order);
  const TruncatedSeries q = TruncatedSeries::monomial(order, 1, 0);
  const TruncatedSeries t = TruncatedSeries::monomial(order, 0, 1);
  // 1 / (1 - q) = sum q^n.
  const TruncatedSeries geo = (one - q).inverse();
  for (int n = 0; n <= order; ++n) CHECK(geo.coeff(n, 0) == 1);
  CHECK(geo * (one - q) == one);
  // (1 + tq)^3.
  const TruncatedSeries cube = (one + t * q).pow(3);
  CHECK(cube.coeff(2, 2) == 3);
  CHECK(cube.coeff(3, 3) == 1);
  CHECK(cube.t_degree(4) == -1);
  CHECK(cube.at_t_one(1) == 3);
  // Beyond the truncation nothing survives.
  CHECK(q.pow(7).coeff(6, 0) == 0);
  CHECK_THROWS(TruncatedSeries(order).inverse());
}

TEST_CASE("series inverse on random input") {
  std::mt19937 rng(testing::kSeed + 30);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int trial = 0; trial < 20; ++trial) {
    TruncatedSeries s = TruncatedSeries::one(5);
    for (int n = 1; n <= 5; ++n)
      for (int r = 0; r <= 2; ++r) s.add(n, r, d(rng));
    CHECK(s * s.inverse() == TruncatedSeries::one(5));
  }
}

TEST_CASE("generating function identities") {
  for (const char* which : {"i", "ii", "iii", "iv", "v", "vi"}) {
    for (const auto& r : series_identity_check(which, 5)) {
      INFO(which, " ", r.check, " ", r.witness);
      CHECK(r.ok);
    }
  }
  CHECK_THROWS_AS(series_identity_check("vii", 3), std::invalid_argument);
}

TEST_CASE("rank series counts elements by their reflected rank") {
  // Permutations of [3] by rank: one of rank 0, two of rank 1, three of
  // rank 2. The series puts these at t^3, t^2, t^1.
  const CountTable ranks = sharp_rank_counts(3);
  CHECK(ranks.rows[3][0] == 1);
  CHECK(ranks.rows[3][1] == 2);
  CHECK(ranks.rows[3][2] == 3);
  const TruncatedSeries f = permutation_rank_series(3);
  CHECK(f.coeff(3, 1) == 3);
  CHECK(f.coeff(3, 2) == 2);
  CHECK(f.coeff(3, 3) == 1);
  CHECK(f.coeff(2, 1) == 1);
  CHECK(f.coeff(2, 2) == 1);
  const TruncatedSeries g = permutation_rank_series(6);
  for (int n = 0; n <= 6; ++n) CHECK(g.at_t_one(n) == factorial(n));
}

TEST_CASE("indexing the rank series by the plain rank does not match") {
  const int order = 4;
  const CountTable ranks = sharp_rank_counts(order);
  TruncatedSeries plain(order);
  for (int n = 0; n <= order; ++n)
    for (int r = 0; r <= n; ++r) plain.add(n, r, ranks.rows[n][r]);
  CHECK_FALSE(plain == permutation_rank_series(order));
}
