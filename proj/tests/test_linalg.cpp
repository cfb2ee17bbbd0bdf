#include <doctest.h>

#include "helpers.hpp"
#include "nchopf/linalg.hpp"

using namespace nchopf;
using testing::C;
using testing::P;

TEST_CASE("basis names round trip") {
  for (Basis b : {Basis::m, Basis::p, Basis::q, Basis::w, Basis::qdual,
                  Basis::M, Basis::Q, Basis::W, Basis::V, Basis::Qdual})
    CHECK(parse_basis(basis_name(b)) == b);
  CHECK(is_partition_basis(Basis::qdual));
  CHECK_FALSE(is_partition_basis(Basis::V));
  CHECK_THROWS_AS(parse_basis("x"), ParseError);
}

TEST_CASE("elements never store zero coefficients") {
  Element<SetPartition> x(Basis::m);
  x.add_term(P("{1|2}"), 2);
  x.add_term(P("{1|2}"), -2);
  CHECK(x.is_zero());
  x.add_term(P("{1}"), 0);
  CHECK(x.size() == 0);
  CHECK(to_text(x) == "0");
}

TEST_CASE("vector space operations") {
  const Element<SetPartition> a(Basis::m, P("{1|2}"));
  const Element<SetPartition> b(Basis::m, P("{1,2}"), 3);
  const auto s = a + b;
  CHECK(s.coefficient(P("{1,2}")) == 3);
  CHECK((s - b) == a);
  CHECK((-a).coefficient(P("{1|2}")) == -1);
  CHECK((Integer(0) * s).is_zero());
  CHECK(s.grade() == 2);
  CHECK_FALSE((s + Element<SetPartition>(Basis::m, P("{1}"))).grade());
  CHECK_FALSE(Element<SetPartition>(Basis::m).grade());
  CHECK_THROWS_AS(a + Element<SetPartition>(Basis::p, P("{1}")), BasisMismatch);
  CHECK(a.relabel(Basis::w).basis() == Basis::w);
}

TEST_CASE("text rendering sorts terms by canonical string") {
  Element<SetPartition> x(Basis::m);
  x.add_term(P("{1|2}"), 1);
  x.add_term(P("{1,2}"), 2);
  CHECK(to_text(x) == "2 m_{1,2} + m_{1|2}");
  CHECK(to_text(-Element<SetComposition>(Basis::W, C("(1|2)"))) == "-W_(1|2)");
  Element<SetComposition> y(Basis::M);
  y.add_term(C("(2|1)"), -3);
  y.add_term(C("(1|2)"), 1);
  CHECK(to_text(y) == "M_(1|2) - 3 M_(2|1)");
}

TEST_CASE("tensor rendering puts the unit as 1 and sorts by left grade") {
  const Element<SetPartition> one(Basis::m, P("{}"));
  const Element<SetPartition> a(Basis::m, P("{1}"));
  const Tensor<SetPartition> t = tensor(a, one) + tensor(one, a);
  CHECK(to_text(t) == "m_{1} (x) 1 + 1 (x) m_{1}");
  CHECK(t.coefficient({P("{1}"), P("{}")}) == 1);
}

TEST_CASE("JSON round trip, including big coefficients") {
  Element<SetPartition> x(Basis::q);
  x.add_term(P("{1,3|2}"), 2);
  Integer big = 1;
  for (int i = 0; i < 30; ++i) big *= 10;
  x.add_term(P("{1|2|3}"), -big);
  const std::string text = to_json(x);
  CHECK(text.find("\"-1000000000000000000000000000000\"") != std::string::npos);
  const AnyElement back = element_from_json(text);
  REQUIRE(back.partitions);
  CHECK(*back.partitions == x);
  CHECK(back.basis() == Basis::q);

  const Element<SetComposition> y(Basis::V, C("(2|1,3)"), 5);
  CHECK(to_json(y) == R"j({"basis":"V","terms":{"(2|1,3)":5}})j");
  REQUIRE(element_from_json(to_json(y)).compositions);
  CHECK(*element_from_json(to_json(y)).compositions == y);
}

TEST_CASE("malformed JSON is a parse error") {
  CHECK_THROWS_AS(element_from_json("{"), ParseError);
  CHECK_THROWS_AS(element_from_json("[]"), ParseError);
  CHECK_THROWS_AS(element_from_json(R"j({"basis":"z","terms":{}})j"), ParseError);
  CHECK_THROWS_AS(element_from_json(R"j({"basis":"m","terms":{"{1|1}":1}})j"),
                  ParseError);
}

TEST_CASE("basis vectors from text") {
  const AnyElement a = basis_vector(Basis::w, "{1,2}");
  REQUIRE(a.partitions);
  CHECK(a.partitions->coefficient(P("{1,2}")) == 1);
  const AnyElement b = basis_vector(Basis::Q, "(2|1)");
  REQUIRE(b.compositions);
  CHECK_THROWS_AS(basis_vector(Basis::Q, "{1}"), ParseError);
}

TEST_CASE("pairing is the Kronecker pairing on monomials") {
  Element<SetPartition> x(Basis::m);
  x.add_term(P("{1|2}"), 2);
  x.add_term(P("{1,2}"), 3);
  Element<SetPartition> y(Basis::w);
  y.add_term(P("{1|2}"), 5);
  y.add_term(P("{1}"), 7);
  CHECK(pairing(x, y) == 10);
  CHECK_THROWS_AS(pairing(y, x), BasisMismatch);
  CHECK_THROWS_AS(pairing(x, x), BasisMismatch);
  const Tensor<SetPartition> t = tensor(x, x);
  const Tensor<SetPartition> u = tensor(y, y);
  CHECK(pairing(t, u) == 100);
}

TEST_CASE("tensor product and linear extension") {
  auto twice = [](const SetPartition& a) {
    return Element<SetPartition>(Basis::p, a, 2);
  };
  Element<SetPartition> x(Basis::m);
  x.add_term(P("{1}"), 1);
  x.add_term(P("{1|2}"), -1);
  const auto y = linear_extend<SetPartition>(x, Basis::p, twice);
  CHECK(y.basis() == Basis::p);
  CHECK(y.coefficient(P("{1|2}")) == -2);

  auto concat = [](const SetPartition& a, const SetPartition& b) {
    return Element<SetPartition>(Basis::m, setpart::concat(a, b));
  };
  const auto z = bilinear_extend<SetPartition>(x, x, Basis::m, concat);
  CHECK(z.coefficient(P("{1|2|3}")) == -2);
  CHECK(z.coefficient(P("{1|2|3|4}")) == 1);
}

TEST_CASE("exact rank") {
  CHECK(exact_rank({}) == 0);
  CHECK(exact_rank({{1, 2}, {2, 4}}) == 1);
  CHECK(exact_rank({{0, 1}, {1, 0}}) == 2);
  CHECK(exact_rank({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}) == 2);
  CHECK(exact_rank({{2, 0, 0}, {0, 3, 0}, {0, 0, 5}}) == 3);
  CHECK(exact_rank({{0, 0}, {0, 0}}) == 0);

  // Random integer matrices built as a product of thin factors have
  // rank at most the inner dimension.
  std::mt19937 rng(testing::kSeed + 3);
  std::uniform_int_distribution<int> d(-4, 4);
  for (int trial = 0; trial < 30; ++trial) {
    const int inner = 1 + trial % 4;
    std::vector<std::vector<Integer>> a(6, std::vector<Integer>(inner));
    std::vector<std::vector<Integer>> b(inner, std::vector<Integer>(6));
    for (auto& row : a)
      for (auto& v : row) v = d(rng);
    for (auto& row : b)
      for (auto& v : row) v = d(rng);
    std::vector<std::vector<Integer>> prod(6, std::vector<Integer>(6, 0));
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j)
        for (int k = 0; k < inner; ++k) prod[i][j] += a[i][k] * b[k][j];
    CHECK(exact_rank(prod) <= inner);
    CHECK(exact_rank(prod) <= exact_rank(a));
  }
}
