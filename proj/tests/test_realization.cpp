#include <doctest.h>

#include "helpers.hpp"
#include "nchopf/ncqsym.hpp"
#include "nchopf/ncsym.hpp"
#include "nchopf/realization.hpp"

using namespace nchopf;
using namespace nchopf::realization;
using testing::C;
using testing::P;

namespace {

WordPolynomial poly(int vars, std::initializer_list<Word> words) {
  WordPolynomial p;
  p.nVars = vars;
  for (const auto& w : words) p.add_term(w, 1);
  return p;
}

}  // namespace

TEST_CASE("monomial realization") {
  CHECK(realize_m(P("{1|2}"), 2) == poly(2, {{1, 2}, {2, 1}}));
  CHECK(realize_m(P("{1,3|2}"), 3).terms.size() == 6);
  CHECK(realize_m(P("{1,2}"), 2) == poly(2, {{1, 1}, {2, 2}}));
  const WordPolynomial none = realize_m(P("{1|2|3}"), 2);
  CHECK(none.terms.empty());
  CHECK(none.degenerate);
  CHECK(realize_m(P("{}"), 3) == poly(3, {{}}));
}

TEST_CASE("quasi-monomial realization") {
  CHECK(realize_M(C("(2|1)"), 2) == poly(2, {{2, 1}}));
  CHECK(realize_M(C("(1|2)"), 3) == poly(3, {{1, 2}, {1, 3}, {2, 3}}));
  CHECK(realize_M(C("(1,2)"), 3).terms.size() == 3);
}

TEST_CASE("text form of word polynomials") {
  CHECK(poly(2, {{1, 2}, {2, 1}}).str() == "x1x2 + x2x1");
  WordPolynomial p;
  p.add_term({1}, -2);
  CHECK(p.str() == "-2 x1");
  CHECK(WordPolynomial{}.str() == "0");
}

TEST_CASE("letter and value patterns") {
  CHECK(letter_pattern({3, 1, 3, 2}) == P("{1,3|2|4}"));
  CHECK(value_pattern({3, 1, 3, 2}) == C("(2|4|1,3)"));
  CHECK(value_pattern({5, 5}) == C("(1,2)"));
}

TEST_CASE("symmetry tests") {
  CHECK_FALSE(quasisym_check(poly(3, {{1, 2}})));
  CHECK(quasisym_check(poly(3, {})));
  CHECK(quasisym_check(realize_M(C("(2|1,3)"), 4)));
  CHECK(symmetric_check(realize_m(P("{1,3|2}"), 3)));
  CHECK_FALSE(symmetric_check(realize_M(C("(1|2)"), 2)));
  CHECK(quasisym_check(realize_m(P("{1|2}"), 3)));
}

TEST_CASE("re-expansion in the monomial basis") {
  WordPolynomial p = realize_m(P("{1|2}"), 3);
  for (const auto& [w, c] : realize_m(P("{1,2}"), 3).terms) p.add_term(w, 3 * c);
  const Reexpansion<SetPartition> r = reexpand_m(p);
  CHECK(r.exact);
  CHECK_FALSE(r.lossy);
  ncsym::Elt expected(Basis::m);
  expected.add_term(P("{1|2}"), 1);
  expected.add_term(P("{1,2}"), 3);
  CHECK(r.element == expected);

  WordPolynomial broken = realize_m(P("{1|2}"), 3);
  broken.add_term({1, 2}, 1);
  const auto bad = reexpand_m(broken);
  CHECK_FALSE(bad.exact);
  CHECK_FALSE(bad.witness.empty());
}

TEST_CASE("few variables are flagged as lossy") {
  const auto r = reexpand_M(realize_M(C("(1|2)"), 1));
  CHECK(r.exact);
  CHECK(r.element.is_zero());
  const auto s = reexpand_M(realize(ncqsym::Elt(Basis::M, C("(1)")), 1));
  CHECK_FALSE(s.lossy);
}

TEST_CASE("realization is multiplicative") {
  for (int n = 0; n <= 4; ++n)
    for (int a = 0; a <= n; ++a)
      for (const auto& x : setpart::enumerate(a))
        for (const auto& y : setpart::enumerate(n - a)) {
          const WordPolynomial lhs = word_mul(realize_m(x, n), realize_m(y, n));
          CHECK(lhs == realize(ncsym::m_mul(x, y), n));
        }
  for (int n = 0; n <= 4; ++n)
    for (int a = 0; a <= n; ++a)
      for (const auto& x : setcomp::enumerate(a))
        for (const auto& y : setcomp::enumerate(n - a)) {
          const WordPolynomial lhs = word_mul(realize_M(x, n), realize_M(y, n));
          CHECK(lhs == realize(ncqsym::M_mul(x, y), n));
        }
  CHECK_THROWS_AS(word_mul(poly(2, {}), poly(3, {})), SizeMismatch);
  CHECK_THROWS_AS(realize(ncsym::Elt(Basis::p, P("{1}")), 2), BasisMismatch);
}

TEST_CASE("monomials are invariant under letter permutations") {
  const WordPolynomial p = realize_m(P("{1,3|2}"), 3);
  CHECK(permute_letters(p, {2, 3, 1}) == p);
  const WordPolynomial q = realize_M(C("(1|2)"), 3);
  CHECK_FALSE(permute_letters(q, {3, 2, 1}) == q);
}

TEST_CASE("oracle report") {
  const Report r = verify_oracle(4, 3);
  CHECK_FALSE(r.empty());
  for (const auto& c : r) {
    INFO(c.check, " ", c.grade, " ", c.witness);
    CHECK(c.ok);
  }
}
