#include <doctest.h>

#include <random>

#include "artin/classify.hpp"
#include "artin/errors.hpp"
#include "artin/hierarchy.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace artin;

namespace {

VertexMask mask_of(const LabeledGraph& g, std::initializer_list<const char*> names) {
  VertexMask m = 0;
  for (const char* n : names) m |= VertexMask{1} << g.require_index(n);
  return m;
}

bool separates(const LabeledGraph& g, const Decomposition& d) {
  const VertexMask p1 = d.part1 & ~d.part2, p2 = d.part2 & ~d.part1;
  for (VertexMask comp : components(g, (d.part1 | d.part2) & ~d.intersection))
    if ((comp & p1) && (comp & p2)) return false;
  return true;
}

}  // namespace

TEST_CASE("decompositions match brute-force enumeration") {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 120; ++k) {
    const auto g = testutil::random_graph(rng, 2 + k % 6, 0.5, {3, 4});
    CAPTURE(serialize_graph(g));
    const auto fast = admissible_decompositions(g, false);
    std::set<std::pair<VertexMask, VertexMask>> got;
    for (const auto& d : fast) {
      CHECK(got.insert({d.part1, d.part2}).second);
      CHECK(d.intersection == (d.part1 & d.part2));
      CHECK(is_admissible(g, full_mask(g), d));
      CHECK(separates(g, d));
    }
    CHECK(got == oracle::brute_decompositions(g, full_mask(g)));

    for (const auto& d : admissible_decompositions(g, true))
      CHECK(is_twistless_decomposition(g, d));
  }
}

TEST_CASE("every edge is covered by some part") {
  const auto g = testutil::octahedron(4);
  for (const auto& d : admissible_decompositions(g, false))
    for (const auto& e : g.edges()) {
      const VertexMask bits = (VertexMask{1} << e.u) | (VertexMask{1} << e.v);
      CHECK(((d.part1 & bits) == bits || (d.part2 & bits) == bits));
    }
}

TEST_CASE("octahedron decomposes over its equator") {
  const auto g = testutil::octahedron(4);
  const auto ds = admissible_decompositions(g, true);
  REQUIRE(ds.size() == 3);
  CHECK(ds[0].intersection == mask_of(g, {"c1", "c2", "c3", "c4"}));
  CHECK(ds[0].part1 == mask_of(g, {"c1", "c2", "c3", "c4", "v1"}));
  CHECK(ds[0].part2 == mask_of(g, {"c1", "c2", "c3", "c4", "v2"}));
}

TEST_CASE("K3 has no twistless decomposition") {
  const auto g = testutil::complete(3, 3);
  CHECK(admissible_decompositions(g, true).empty());
  for (const auto& d : admissible_decompositions(g, false))
    CHECK(std::popcount(d.intersection) == 2);
}

TEST_CASE("5-cycle splits over non-adjacent pairs and their complements") {
  const auto g = testutil::cycle(5, 4);
  const auto ds = admissible_decompositions(g, true);
  // Five non-adjacent pairs, and five triples leaving two non-adjacent vertices.
  REQUIRE(ds.size() == 10);
  for (std::size_t i = 0; i < ds.size(); ++i)
    CHECK(std::popcount(ds[i].intersection) == (i < 5 ? 2 : 3));
  const Decomposition want{mask_of(g, {"p1", "p2", "p3"}), mask_of(g, {"p1", "p3", "p4", "p5"}),
                           mask_of(g, {"p1", "p3"})};
  CHECK(std::find(ds.begin(), ds.end(), want) != ds.end());
}

TEST_CASE("connected-parts reading drops disconnected parts") {
  // Square a b c d with a pendant e at a: over {a, c}, the part {a, c, e}
  // leaves c isolated.
  const auto g =
      parse_graph("vertices a b c d e; edge a b 3; edge b c 3; edge c d 3; edge a d 3; edge a e 3");
  const auto relaxed = admissible_decompositions(g, full_mask(g), {true, false});
  const auto strict = admissible_decompositions(g, full_mask(g), {true, true});
  CHECK(strict.size() < relaxed.size());
  for (const auto& d : strict) {
    CHECK(oracle::brute_connected(g, d.part1));
    CHECK(oracle::brute_connected(g, d.part2));
  }
}

TEST_CASE("hierarchy: octahedron, K4, 5-cycle") {
  const auto oct = testutil::octahedron(4);
  const auto r = find_twistless_hierarchy(oct);
  REQUIRE(r.status == HierarchyStatus::Found);
  REQUIRE(r.tree);
  CHECK(r.tree->depth() == 1);
  CHECK(r.tree->leaves() == std::vector<VertexMask>{mask_of(oct, {"c1", "c2", "c3", "c4", "v1"}),
                                                    mask_of(oct, {"c1", "c2", "c3", "c4", "v2"})});
  CHECK(validate_hierarchy(oct, *r.tree));

  const auto k4 = find_twistless_hierarchy(testutil::complete(4, 3));
  REQUIRE(k4.status == HierarchyStatus::Found);
  CHECK(k4.tree->leaf());
  CHECK(k4.explored == 1);

  CHECK(find_twistless_hierarchy(testutil::cycle(5, 4)).status == HierarchyStatus::NoneDefinitive);
}

TEST_CASE("hierarchy search agrees with plain recursion") {
  std::mt19937_64 rng(17);
  for (int k = 0; k < 60; ++k) {
    const auto g = testutil::random_graph(rng, 3 + k % 4, 0.7, {4});
    CAPTURE(serialize_graph(g));
    const auto r = find_twistless_hierarchy(g);
    CHECK(r.status != HierarchyStatus::Exhausted);
    CHECK((r.status == HierarchyStatus::Found) == oracle::brute_has_hierarchy(g, full_mask(g)));
    if (r.tree) CHECK(validate_hierarchy(g, *r.tree));
  }
}

TEST_CASE("hierarchy search is deterministic") {
  const auto g = testutil::octahedron(5);
  const auto a = find_twistless_hierarchy(g);
  const auto b = find_twistless_hierarchy(g);
  REQUIRE(a.tree);
  CHECK(*a.tree == *b.tree);
  CHECK(a.explored == b.explored);
}

TEST_CASE("budget") {
  const auto g = testutil::octahedron(4);
  CHECK_THROWS_AS(find_twistless_hierarchy(g, 0), Error);
  const auto r = find_twistless_hierarchy(g, 1);
  CHECK(r.status == HierarchyStatus::Exhausted);
  CHECK_FALSE(r.tree);
  CHECK(find_twistless_hierarchy(g, 3).status == HierarchyStatus::Found);
}

TEST_CASE("validation rejects broken trees") {
  const auto g = testutil::octahedron(4);
  auto tree = *find_twistless_hierarchy(g).tree;
  auto swapped = tree;
  std::swap(swapped.children[0], swapped.children[1]);
  CHECK_FALSE(validate_hierarchy(g, swapped));
  auto leaf = tree;
  leaf.decomposition.reset();
  leaf.children.clear();
  CHECK_FALSE(validate_hierarchy(g, leaf));
}
