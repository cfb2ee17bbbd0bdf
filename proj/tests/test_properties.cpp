#include <doctest.h>

#include "helpers.hpp"
#include "nchopf/ncqsym.hpp"
#include "nchopf/ncsym.hpp"

using namespace nchopf;
using testing::kSeed;
using testing::random_composition;
using testing::random_element;
using testing::random_partition;

namespace {

int grade(std::mt19937& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

}  // namespace

TEST_CASE("random m products agree with the filtering definition") {
  std::mt19937 rng(kSeed + 100);
  for (int trial = 0; trial < 60; ++trial) {
    const SetPartition a = random_partition(rng, grade(rng, 0, 4));
    const SetPartition b = random_partition(rng, grade(rng, 0, 4));
    INFO(a.str(), " * ", b.str());
    CHECK(ncsym::m_mul(a, b) == ncsym::m_mul_by_meet(a, b));
  }
}

TEST_CASE("random M products agree with the wedge filter") {
  std::mt19937 rng(kSeed + 101);
  for (int trial = 0; trial < 40; ++trial) {
    const SetComposition a = random_composition(rng, grade(rng, 0, 3));
    const SetComposition b = random_composition(rng, grade(rng, 0, 4));
    INFO(a.str(), " * ", b.str());
    CHECK(ncqsym::M_mul(a, b) == ncqsym::M_mul_by_wedge(a, b));
  }
}

TEST_CASE("products of random elements are associative") {
  std::mt19937 rng(kSeed + 102);
  for (int trial = 0; trial < 25; ++trial) {
    for (Basis b : {Basis::m, Basis::p, Basis::q, Basis::w}) {
      const auto x = random_element<SetPartition>(rng, b, grade(rng, 0, 2), 3,
                                                  random_partition);
      const auto y = random_element<SetPartition>(rng, b, grade(rng, 0, 2), 3,
                                                  random_partition);
      const auto z = random_element<SetPartition>(rng, b, grade(rng, 0, 2), 3,
                                                  random_partition);
      CHECK(ncsym::mul(ncsym::mul(x, y), z) == ncsym::mul(x, ncsym::mul(y, z)));
    }
    for (Basis b : {Basis::M, Basis::Q, Basis::W, Basis::V}) {
      const auto x = random_element<SetComposition>(rng, b, grade(rng, 0, 2), 3,
                                                    random_composition);
      const auto y = random_element<SetComposition>(rng, b, grade(rng, 0, 2), 3,
                                                    random_composition);
      const auto z = random_element<SetComposition>(rng, b, grade(rng, 0, 2), 3,
                                                    random_composition);
      CHECK(ncqsym::mul(ncqsym::mul(x, y), z) ==
            ncqsym::mul(x, ncqsym::mul(y, z)));
    }
  }
}

TEST_CASE("product is bilinear") {
  std::mt19937 rng(kSeed + 103);
  std::uniform_int_distribution<int> coeff(-5, 5);
  for (int trial = 0; trial < 30; ++trial) {
    const int g = grade(rng, 1, 3);
    const auto x = random_element<SetPartition>(rng, Basis::m, g, 3, random_partition);
    const auto y = random_element<SetPartition>(rng, Basis::m, g, 3, random_partition);
    const auto z = random_element<SetPartition>(rng, Basis::m, grade(rng, 1, 2), 3,
                                                random_partition);
    const Integer a = coeff(rng), b = coeff(rng);
    CHECK(ncsym::mul(a * x + b * y, z) ==
          a * ncsym::mul(x, z) + b * ncsym::mul(y, z));
    CHECK(ncsym::mul(z, a * x + b * y) ==
          a * ncsym::mul(z, x) + b * ncsym::mul(z, y));
  }
}

TEST_CASE("antipode reverses products") {
  std::mt19937 rng(kSeed + 104);
  for (int trial = 0; trial < 20; ++trial) {
    const SetPartition a = random_partition(rng, grade(rng, 1, 2));
    const SetPartition b = random_partition(rng, grade(rng, 1, 2));
    const ncsym::Elt x(Basis::m, a), y(Basis::m, b);
    CHECK(ncsym::antipode(ncsym::mul(x, y)) ==
          ncsym::mul(ncsym::antipode(y), ncsym::antipode(x)));

    const SetComposition p = random_composition(rng, grade(rng, 1, 2));
    const SetComposition q = random_composition(rng, grade(rng, 1, 2));
    const ncqsym::Elt u(Basis::W, p), v(Basis::W, q);
    CHECK(ncqsym::antipode(ncqsym::mul(u, v)) ==
          ncqsym::mul(ncqsym::antipode(v), ncqsym::antipode(u)));
  }
}

TEST_CASE("the antipode squares to the identity on commutative-side duals") {
  // w is commutative, so S^2 = id there.
  std::mt19937 rng(kSeed + 105);
  for (int trial = 0; trial < 20; ++trial) {
    const auto x = random_element<SetPartition>(rng, Basis::w, grade(rng, 1, 4), 3,
                                                random_partition);
    CHECK(ncsym::antipode(ncsym::antipode(x)) == x);
  }
}

TEST_CASE("basis conversions round trip") {
  std::mt19937 rng(kSeed + 106);
  for (int trial = 0; trial < 40; ++trial) {
    const int g = grade(rng, 0, 5);
    const auto x = random_element<SetPartition>(rng, Basis::m, g, 4, random_partition);
    for (Basis b : {Basis::p, Basis::q})
      CHECK(ncsym::convert(ncsym::convert(x, b), Basis::m) == x);
    const auto y = random_element<SetComposition>(rng, Basis::W, grade(rng, 0, 4), 4,
                                                  random_composition);
    for (Basis b : {Basis::V, Basis::Qdual})
      CHECK(ncqsym::convert(ncqsym::convert(y, b), Basis::W) == y);
  }
}

TEST_CASE("pairing is compatible with products and coproducts") {
  std::mt19937 rng(kSeed + 107);
  for (int trial = 0; trial < 30; ++trial) {
    const SetPartition a = random_partition(rng, grade(rng, 0, 3));
    const SetPartition b = random_partition(rng, grade(rng, 0, 3));
    const SetPartition c = random_partition(rng, a.size() + b.size());
    const ncsym::Elt lhs = ncsym::mul(ncsym::Elt(Basis::w, a), ncsym::Elt(Basis::w, b));
    const ncsym::Tens cop = ncsym::comul(ncsym::Elt(Basis::m, c));
    CHECK(ncsym::pair(ncsym::Elt(Basis::m, c), lhs) ==
          cop.coefficient({a, b}));
  }
}

TEST_CASE("parse and str are inverse") {
  std::mt19937 rng(kSeed + 108);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = grade(rng, 0, 9);
    const SetPartition a = random_partition(rng, n);
    CHECK(SetPartition::parse(a.str()) == a);
    const SetComposition phi = random_composition(rng, n);
    CHECK(SetComposition::parse(phi.str()) == phi);
    const auto x = random_element<SetComposition>(rng, Basis::Q, n, 3,
                                                  random_composition);
    const AnyElement back = element_from_json(to_json(x));
    REQUIRE(back.compositions);
    CHECK(*back.compositions == x);
  }
}
