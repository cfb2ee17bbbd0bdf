#include <doctest.h>

#include <json.hpp>

#include "helpers.hpp"
#include "nchopf/posets.hpp"

using namespace nchopf;
using testing::C;
using testing::P;

namespace {

FinitePoset chain(int length) {
  std::vector<std::string> labels;
  for (int i = 0; i <= length; ++i) labels.push_back(std::to_string(i));
  return FinitePoset::from_predicate(
      labels, [](std::size_t i, std::size_t j) { return i <= j; });
}

FinitePoset boolean_lattice(int bits) {
  std::vector<std::string> labels;
  for (int s = 0; s < (1 << bits); ++s) labels.push_back(std::to_string(s));
  return FinitePoset::from_predicate(
      labels, [](std::size_t i, std::size_t j) { return (i & j) == i; });
}

std::size_t at(const FinitePoset& p, const std::string& label) {
  const auto i = p.index_of(label);
  REQUIRE(i.has_value());
  return *i;
}

}  // namespace

TEST_CASE("chains") {
  const FinitePoset c = chain(3);
  CHECK(c.covers().size() == 3);
  CHECK(c.moebius(0, 1).value == -1);
  CHECK(c.moebius(0, 2).value == 0);
  CHECK_FALSE(c.moebius(2, 0).comparable);
  const PosetStructure s = c.structure();
  CHECK(s.ranked);
  CHECK(s.rank == std::vector<int>{0, 1, 2, 3});
  CHECK_FALSE(s.eulerian);
  CHECK(chain(1).structure().eulerian);
  CHECK_FALSE(chain(2).structure().eulerian);
}

TEST_CASE("boolean lattices") {
  const FinitePoset b = boolean_lattice(3);
  CHECK(b.covers().size() == 12);
  CHECK(b.moebius(0, 7).value == -1);
  CHECK(b.moebius(0, 3).value == 1);
  const PosetStructure s = b.structure();
  CHECK(s.ranked);
  CHECK(s.eulerian);
  CHECK(s.boolean_downsets);
  std::vector<std::size_t> all(8);
  for (std::size_t i = 0; i < 8; ++i) all[i] = i;
  CHECK(b.is_boolean_lattice(all));
  CHECK_FALSE(chain(2).is_boolean_lattice({0, 1, 2}));
  CHECK(chain(1).is_boolean_lattice({0, 1}));
}

TEST_CASE("Moebius function satisfies its defining recursion") {
  const FinitePoset p = posets::refinement_partitions(4);
  for (std::size_t x = 0; x < p.size(); ++x)
    for (std::size_t y = 0; y < p.size(); ++y) {
      if (!p.leq(x, y)) continue;
      Integer total = 0;
      for (std::size_t z = 0; z < p.size(); ++z)
        if (p.leq(x, z) && p.leq(z, y)) total += p.moebius(x, z).value;
      CHECK(total == (x == y ? 1 : 0));
    }
  const std::size_t bottom = at(p, "{1|2|3|4}");
  const std::size_t top = at(p, "{1,2,3,4}");
  CHECK(p.moebius(bottom, top).value == -6);
}

TEST_CASE("relations and cycles") {
  const FinitePoset p =
      FinitePoset::from_relations({"a", "b", "c", "d"}, {{0, 1}, {1, 2}, {0, 3}});
  CHECK(p.leq(0, 2));
  CHECK_FALSE(p.leq(3, 2));
  CHECK(p.covers().size() == 3);
  CHECK(p.components().size() == 1);
  try {
    FinitePoset::from_relations({"a", "b", "c"}, {{0, 1}, {1, 2}, {2, 0}});
    FAIL("expected a cycle");
  } catch (const PosetCycleError& e) {
    CHECK(std::string(e.what()).find('a') != std::string::npos);
  }
  CHECK_THROWS_AS(FinitePoset::from_predicate(
                      {"x", "y"}, [](std::size_t, std::size_t) { return true; }),
                  PosetCycleError);
}

TEST_CASE("star order on partitions of [3]") {
  const FinitePoset p = posets::star_partitions(3);
  CHECK(p.size() == 5);
  CHECK(p.covers().size() == 5);
  CHECK(p.moebius(at(p, "{1|2|3}"), at(p, "{1,2,3}")).value == 1);
  CHECK(p.components().size() == 1);
  CHECK(p.leq(at(p, "{1|2|3}"), at(p, "{1,3|2}")));
  CHECK_FALSE(p.leq(at(p, "{1,3|2}"), at(p, "{1,2,3}")));
}

TEST_CASE("star order on partitions has the expected shape") {
  for (int n = 0; n <= 5; ++n) {
    const FinitePoset p = posets::star_partitions(n);
    const PosetStructure s = p.structure();
    CHECK(s.ranked);
    CHECK(s.boolean_downsets);
    CHECK(s.eulerian);
    // The rank of A is the size of its phi set.
    for (std::size_t i = 0; i < p.size(); ++i) {
      const SetPartition a = P(p.labels()[i]);
      CHECK(s.rank[i] == static_cast<int>(setpart::phi_set(a).size()));
    }
  }
}

TEST_CASE("refinement orders") {
  CHECK(posets::refinement_compositions(3).size() == 13);
  const FinitePoset p = posets::refinement_partitions(3);
  CHECK(p.size() == 5);
  CHECK(p.covers().size() == 6);
  CHECK_FALSE(p.structure().boolean_downsets);
}

TEST_CASE("star order on compositions splits into boolean pieces") {
  for (int n = 1; n <= 4; ++n) {
    const FinitePoset p = posets::star_compositions(n);
    for (const auto& comp : p.components()) CHECK(p.is_boolean_lattice(comp));
  }
  const FinitePoset p = posets::star_compositions(3);
  CHECK(p.upset(at(p, "(3|2|1)")).size() == 1);
}

TEST_CASE("sharp classes") {
  CHECK(posets::sharp_class(Composition{{2, 2}}).size() == 6);
  CHECK(posets::sharp_class(Composition{{3, 1}}).size() == 4);
  const FinitePoset p = posets::sharp_class(Composition{{1, 1, 1}});
  CHECK(p.size() == 6);
  // (1|2|3) has every factor a singleton, so it sits below all of them.
  const std::size_t bottom = at(p, "(1|2|3)");
  for (std::size_t j = 0; j < p.size(); ++j) CHECK(p.leq(bottom, j));
  const FinitePoset all = posets::sharp_compositions(3);
  CHECK(all.size() == 13);
  CHECK(all.components().size() == 4);
}

TEST_CASE("sharp order agrees with the pairwise predicate") {
  const FinitePoset p = posets::sharp_compositions(4);
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < p.size(); ++j)
      CHECK(p.leq(i, j) == setcomp::sharp_leq(C(p.labels()[i]), C(p.labels()[j])));
}

TEST_CASE("reversal-complement symmetry of sharp classes") {
  for (const auto& alpha :
       {Composition{{1, 2}}, Composition{{2, 1, 1}}, Composition{{1, 3}},
        Composition{{2, 2}}})
    CHECK(posets::reversal_complement_isomorphism(alpha).ok);
}

TEST_CASE("DOT output") {
  const FinitePoset empty =
      FinitePoset::from_relations({}, std::vector<std::pair<std::size_t, std::size_t>>{});
  const std::string dot = empty.to_dot("empty");
  CHECK(dot.find("digraph \"empty\" {") == 0);
  CHECK(dot.find("->") == std::string::npos);
  const std::string star = posets::star_partitions(3).to_dot("star");
  CHECK(star.find("\"{1|2|3}\" -> \"{1,2|3}\";") != std::string::npos);
  CHECK(star.find("rankdir=BT;") != std::string::npos);
  CHECK(star.back() == '\n');
}

TEST_CASE("JSON output") {
  const auto j = nlohmann::json::parse(chain(1).to_json());
  CHECK(j["elements"] == nlohmann::json{"0", "1"});
  CHECK(j["covers"] == nlohmann::json::parse(R"j([["0","1"]])j"));
  CHECK(j["ranks"] == nlohmann::json{0, 1});
}

TEST_CASE("poset checks pass at small sizes") {
  for (const auto& r : posets::verify_partition_orders(5)) {
    INFO(r.check, " ", r.grade, " ", r.witness);
    CHECK(r.ok);
  }
  for (const auto& r : posets::verify_composition_orders(4)) {
    INFO(r.check, " ", r.grade, " ", r.witness);
    CHECK(r.ok);
  }
}
