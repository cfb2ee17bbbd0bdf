#include <doctest.h>

#include "helpers.hpp"
#include "nchopf/enumerate.hpp"
#include "nchopf/setcomp.hpp"

using namespace nchopf;
using testing::C;
using testing::P;

TEST_CASE("set composition text keeps part order") {
  const SetComposition phi = C("(3,4|2|1,5)");
  CHECK(phi.size() == 5);
  CHECK(phi.length() == 3);
  CHECK(phi.str() == "(3,4|2|1,5)");
  CHECK(C("(1,2)") != C("(2|1)"));
  CHECK(C("(2,1)").str() == "(1,2)");
  CHECK(C("()").empty());
  CHECK_THROWS_AS(C("(1|1)"), ParseError);
  CHECK_THROWS_AS(C("{1|2}"), ParseError);
}

TEST_CASE("composition enumeration counts") {
  CHECK(setcomp::enumerate(3).size() == 13);
  REQUIRE(setcomp::enumerate(1).size() == 1);
  CHECK(setcomp::enumerate(1)[0] == C("(1)"));
  CHECK(setcomp::enumerate_by_length(4, 2).size() == 14);
  for (int n = 0; n <= 6; ++n)
    CHECK(Integer(setcomp::enumerate(n).size()) == enumerate::ordered_bell(n));
}

TEST_CASE("wedge drops empty intersections and is not commutative") {
  CHECK(setcomp::wedge(C("(1,2|3)"), C("(1,3|2)")) == C("(1|2|3)"));
  CHECK(setcomp::wedge(C("(1,3|2)"), C("(1,2|3)")) == C("(1|3|2)"));
  for (const auto& phi : setcomp::enumerate(4))
    CHECK(setcomp::wedge(phi, phi) == phi);
}

TEST_CASE("wedge lies below its left operand but not always its right") {
  bool right_fails = false;
  for (int n = 0; n <= 4; ++n)
    for (const auto& phi : setcomp::enumerate(n))
      for (const auto& psi : setcomp::enumerate(n)) {
        const SetComposition w = setcomp::wedge(phi, psi);
        CHECK(setcomp::leq(w, phi));
        if (!setcomp::leq(w, psi)) right_fails = true;
        CHECK(setcomp::forget(w) ==
              setpart::meet(setcomp::forget(phi), setcomp::forget(psi)));
      }
  CHECK(right_fails);
}

TEST_CASE("vee") {
  CHECK(setcomp::vee(C("(1|2)"), C("(2|1)")) == C("(1,2)"));
  CHECK(setcomp::vee(C("(1|2|3)"), C("(1|2,3)")) == C("(1|2,3)"));
  for (const auto& phi : setcomp::enumerate(3)) CHECK(setcomp::vee(phi, phi) == phi);
}

TEST_CASE("composition refinement order") {
  CHECK(setcomp::leq(C("(1|2|3)"), C("(1,2|3)")));
  CHECK(setcomp::leq(C("(2|1|3)"), C("(1,2|3)")));
  CHECK_FALSE(setcomp::leq(C("(2|1|3)"), C("(1|2,3)")));
  for (const auto& phi : setcomp::enumerate(4))
    CHECK(setcomp::leq(phi, C("(1,2,3,4)")));

  // 13 elements, one maximum, the six permutations are the minimal ones.
  const auto& all = setcomp::enumerate(3);
  int minimal = 0, maximal = 0;
  for (const auto& a : all) {
    bool has_below = false, has_above = false;
    for (const auto& b : all) {
      if (a == b) continue;
      if (setcomp::leq(b, a)) has_below = true;
      if (setcomp::leq(a, b)) has_above = true;
    }
    if (!has_below) {
      ++minimal;
      CHECK(a.length() == 3);
    }
    if (!has_above) ++maximal;
  }
  CHECK(minimal == 6);
  CHECK(maximal == 1);
}

TEST_CASE("composition concatenation, raise and standardize") {
  CHECK(setcomp::concat(C("(1,3|2)"), C("(1|2)")) == C("(1,3|2|4|5)"));
  CHECK(setcomp::standardize({{1, 5, 6}, {2}}) == C("(1,3,4|2)"));
  std::mt19937 rng(testing::kSeed + 1);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = std::uniform_int_distribution<int>(0, 6)(rng);
    const SetComposition phi = testing::random_composition(rng, n);
    const auto s = testing::random_subset(rng, n, n + 3);
    CHECK(setcomp::standardize(setcomp::raise(phi, s)) == phi);
  }
}

TEST_CASE("sequence pattern") {
  const std::vector<int> gamma{2, 1, 1, 7, 9, 1, 2, 7};
  CHECK(setcomp::delta_of_sequence(gamma) == C("(2,3,6|1,7|4,8|5)"));
  CHECK(setcomp::delta_of_sequence(std::vector<int>{5}) == C("(1)"));
  CHECK(setcomp::delta_of_sequence(std::vector<int>{3, 3, 3}) == C("(1,2,3)"));
}

TEST_CASE("alpha and forget") {
  CHECK(setcomp::alpha(C("(3,4|2|1,5)")) == Composition{{2, 1, 2}});
  CHECK(setcomp::forget(C("(2|1,3)")) == P("{1,3|2}"));
  std::mt19937 rng(testing::kSeed + 2);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = std::uniform_int_distribution<int>(0, 6)(rng);
    const SetComposition a = testing::random_composition(rng, n);
    const SetComposition b = testing::random_composition(rng, n);
    CHECK(setcomp::forget(setcomp::wedge(a, b)) ==
          setpart::meet(setcomp::forget(a), setcomp::forget(b)));
  }
}

TEST_CASE("forget, alpha and concatenation are compatible") {
  for (int n = 0; n <= 3; ++n)
    for (int k = 0; n + k <= 6 && k <= 3; ++k)
      for (const auto& a : setcomp::enumerate(n))
        for (const auto& b : setcomp::enumerate(k)) {
          const SetComposition ab = setcomp::concat(a, b);
          CHECK(setcomp::forget(ab) ==
                setpart::concat(setcomp::forget(a), setcomp::forget(b)));
          Composition joined = setcomp::alpha(a);
          const auto tail = setcomp::alpha(b).parts;
          joined.parts.insert(joined.parts.end(), tail.begin(), tail.end());
          CHECK(setcomp::alpha(ab) == joined);
        }
}

TEST_CASE("composition atomic split") {
  CHECK(setcomp::atomic_split(C("(1|2|3)")) ==
        std::vector<SetComposition>{C("(1)"), C("(1)"), C("(1)")});
  CHECK(setcomp::atomic_split(C("(2|1|3)")) ==
        std::vector<SetComposition>{C("(2|1)"), C("(1)")});
  CHECK(setcomp::atomic_split(C("(1,2)")) ==
        std::vector<SetComposition>{C("(1,2)")});
  CHECK(setcomp::atomic_split(C("()")).empty());
}

TEST_CASE("star order on compositions") {
  CHECK(setcomp::star_covers(C("(1|2|3)")) ==
        std::vector<SetComposition>{C("(1,2|3)"), C("(1|2,3)")});
  CHECK(setcomp::star_covers(C("(3|2|1)")).empty());
  CHECK(setcomp::star_leq(C("(1|2)"), C("(1,2)")));
  CHECK_FALSE(setcomp::star_leq(C("(2|1)"), C("(1,2)")));
}

TEST_CASE("sharp order examples") {
  CHECK(setcomp::sharp_leq(C("(1,3,4|2|5,6|7)"), C("(1,5,6|2|3,7|4)")));
  CHECK_FALSE(setcomp::sharp_leq(C("(1,3,4|2|5,6|7)"), C("(1,2,4|5|3,6|7)")));
  CHECK_FALSE(setcomp::sharp_leq(C("(1,2,4|5|3,6|7)"), C("(1,3,4|2|5,6|7)")));
  const SetComposition bottom = C("(1,2,3|4|5,6|7)");
  for (const auto& psi : setcomp::with_alpha(Composition{{3, 1, 2, 1}}))
    CHECK(setcomp::sharp_leq(bottom, psi));
  CHECK_FALSE(setcomp::sharp_leq(C("(1|2)"), C("(1,2)")));
}

TEST_CASE("sharp order is a partial order inside each class") {
  for (int n = 0; n <= 4; ++n) {
    const auto& all = setcomp::enumerate(n);
    for (const auto& a : all)
      for (const auto& b : all) {
        if (setcomp::sharp_leq(a, b)) {
          CHECK(setcomp::alpha(a) == setcomp::alpha(b));
          if (a != b) CHECK_FALSE(setcomp::sharp_leq(b, a));
        }
      }
    for (const auto& a : all) CHECK(setcomp::sharp_leq(a, a));
  }
}

TEST_CASE("shifted shuffle") {
  CHECK(setcomp::shifted_shuffle(C("(1)"), C("(1)")) ==
        std::vector<SetComposition>{C("(1|2)"), C("(2|1)")});
  const auto six = setcomp::shifted_shuffle(C("(1,3|2)"), C("(1|2)"));
  const std::vector<SetComposition> expected{
      C("(1,3|2|4|5)"), C("(1,3|4|2|5)"), C("(1,3|4|5|2)"),
      C("(4|1,3|2|5)"), C("(4|1,3|5|2)"), C("(4|5|1,3|2)")};
  CHECK(std::is_permutation(six.begin(), six.end(), expected.begin(),
                            expected.end()));
  CHECK(setcomp::shifted_shuffle(C("(2|1)"), C("()")) ==
        std::vector<SetComposition>{C("(2|1)")});
}

TEST_CASE("word order") {
  CHECK(setcomp::word(C("(2|1,3)")) == std::vector<int>{2, 1, 2});
  CHECK(setcomp::word_lex_cmp(C("(1|2)"), C("(1|2)")) ==
        std::strong_ordering::equal);
  // Every shuffle of the atomic factors is at least the original.
  for (int n = 0; n <= 4; ++n)
    for (const auto& phi : setcomp::enumerate(n)) {
      std::vector<SetComposition> shuffles{SetComposition{}};
      for (const auto& f : setcomp::atomic_split(phi)) {
        std::vector<SetComposition> next;
        for (const auto& s : shuffles)
          for (const auto& g : setcomp::shifted_shuffle(s, f)) next.push_back(g);
        shuffles = std::move(next);
      }
      for (const auto& g : shuffles)
        CHECK(setcomp::word_lex_cmp(phi, g) != std::strong_ordering::greater);
    }
}

TEST_CASE("reverse complement") {
  CHECK(setcomp::reverse_complement(C("(1,2|3)")) == C("(1|2,3)"));
  for (const auto& phi : setcomp::enumerate(4))
    CHECK(setcomp::reverse_complement(setcomp::reverse_complement(phi)) == phi);
}
