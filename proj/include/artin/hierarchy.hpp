#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "artin/graph.hpp"

namespace artin {

/// Gamma = Gamma1 u Gamma2 as induced subgraphs of the ambient graph; all
/// masks refer to ambient vertex indices.
struct Decomposition {
  VertexMask part1 = 0;
  VertexMask part2 = 0;
  VertexMask intersection = 0;

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/// Intersection nonempty, not a vertex and not an edge.
bool is_twistless_decomposition(const LabeledGraph& g, const Decomposition& d);
/// Both parts proper, union is `within`, no edge joins the private parts.
bool is_admissible(const LabeledGraph& g, VertexMask within, const Decomposition& d);

struct DecompositionOptions {
  bool twistless_only = false;
  /// Also require both parts to induce connected subgraphs.
  bool connected_parts = false;
};

/// Every admissible decomposition of the subgraph induced on `within`, one
/// per unordered pair: part1 holds the private vertex of smallest index.
/// Ordered by intersection size, then intersection, then part1.
std::vector<Decomposition> admissible_decompositions(const LabeledGraph& g,
                                                     VertexMask within,
                                                     DecompositionOptions opts = {});
std::vector<Decomposition> admissible_decompositions(const LabeledGraph& g,
                                                     bool twistless_only);

struct HierarchyTree {
  VertexMask graph = 0;
  /// Set on internal nodes; leaves are twistless stars.
  std::optional<Decomposition> decomposition;
  std::vector<HierarchyTree> children;

  bool leaf() const { return !decomposition.has_value(); }
  std::size_t depth() const;
  std::vector<VertexMask> leaves() const;

  friend bool operator==(const HierarchyTree&, const HierarchyTree&) = default;
};

/// Checks every node: leaves are twistless stars, internal decompositions
/// are admissible and twistless for their node and the children match.
bool validate_hierarchy(const LabeledGraph& g, const HierarchyTree& tree);

constexpr std::size_t kDefaultHierarchyBudget = 100'000;

enum class HierarchyStatus { Found, Exhausted, NoneDefinitive };

struct HierarchyResult {
  HierarchyStatus status = HierarchyStatus::NoneDefinitive;
  std::optional<HierarchyTree> tree;
  /// Distinct subgraphs decided.
  std::size_t explored = 0;
};

/// Depth-first search over twistless decompositions, memoized on vertex
/// subsets. `budget` bounds the number of distinct subgraphs explored and
/// must be positive.
HierarchyResult find_twistless_hierarchy(const LabeledGraph& g,
                                         std::size_t budget = kDefaultHierarchyBudget,
                                         DecompositionOptions opts = {});

const char* to_string(HierarchyStatus s);

}  // namespace artin
