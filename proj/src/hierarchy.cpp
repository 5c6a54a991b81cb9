#include "artin/hierarchy.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "artin/classify.hpp"
#include "artin/errors.hpp"

namespace artin {

namespace {

LabeledGraph induced(const LabeledGraph& g, VertexMask mask) {
  const auto idx = mask_to_indices(mask);
  return induced_subgraph(g, std::span<const std::size_t>(idx));
}

bool lex_less(VertexMask a, VertexMask b) {
  return mask_to_indices(a) < mask_to_indices(b);
}

bool induces_connected(const LabeledGraph& g, VertexMask mask) {
  return mask != 0 && components(g, mask).size() == 1;
}

}  // namespace

bool is_twistless_decomposition(const LabeledGraph& g, const Decomposition& d) {
  const int k = std::popcount(d.intersection);
  if (k == 0 || k == 1) return false;
  if (k == 2) {
    const auto idx = mask_to_indices(d.intersection);
    return !g.adjacent(idx[0], idx[1]);
  }
  return true;
}

bool is_admissible(const LabeledGraph& g, VertexMask within, const Decomposition& d) {
  if ((d.part1 | d.part2) != within) return false;
  if (d.part1 == within || d.part2 == within) return false;
  if ((d.part1 & d.part2) != d.intersection) return false;
  const VertexMask p1 = d.part1 & ~d.part2;
  const VertexMask p2 = d.part2 & ~d.part1;
  if (p1 == 0 || p2 == 0) return false;
  for (std::size_t u : mask_to_indices(p1))
    for (std::size_t v : mask_to_indices(p2))
      if (g.adjacent(u, v)) return false;
  return true;
}

std::vector<Decomposition> admissible_decompositions(const LabeledGraph& g,
                                                     VertexMask within,
                                                     DecompositionOptions opts) {
  std::vector<VertexMask> separators;
  // All submasks of `within`, the empty one included.
  for (VertexMask c = within;; c = (c - 1) & within) {
    if (c != within) separators.push_back(c);
    if (c == 0) break;
  }
  std::sort(separators.begin(), separators.end(), [](VertexMask a, VertexMask b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    if (pa != pb) return pa < pb;
    return lex_less(a, b);
  });

  std::vector<Decomposition> out;
  for (VertexMask c : separators) {
    const auto comps = components(g, within & ~c);
    if (comps.size() < 2) continue;
    const std::size_t rest = comps.size() - 1;
    if (rest >= 63) throw Error("too many components to split");
    std::vector<Decomposition> here;
    // comps[0] holds the smallest private vertex and always goes to part1.
    for (std::uint64_t bits = 0; bits + 1 < (std::uint64_t{1} << rest); ++bits) {
      VertexMask g1 = comps[0], g2 = 0;
      for (std::size_t i = 0; i < rest; ++i)
        ((bits >> i) & 1 ? g1 : g2) |= comps[i + 1];
      Decomposition d{g1 | c, g2 | c, c};
      if (opts.twistless_only && !is_twistless_decomposition(g, d)) continue;
      if (opts.connected_parts &&
          !(induces_connected(g, d.part1) && induces_connected(g, d.part2)))
        continue;
      here.push_back(d);
    }
    std::sort(here.begin(), here.end(), [](const Decomposition& a, const Decomposition& b) {
      return lex_less(a.part1, b.part1);
    });
    out.insert(out.end(), here.begin(), here.end());
  }
  return out;
}

std::vector<Decomposition> admissible_decompositions(const LabeledGraph& g,
                                                     bool twistless_only) {
  return admissible_decompositions(g, full_mask(g), {twistless_only, false});
}

std::size_t HierarchyTree::depth() const {
  std::size_t d = 0;
  for (const auto& c : children) d = std::max(d, c.depth() + 1);
  return d;
}

std::vector<VertexMask> HierarchyTree::leaves() const {
  if (leaf()) return {graph};
  std::vector<VertexMask> out;
  for (const auto& c : children) {
    auto sub = c.leaves();
    out.insert(out.end(), sub.begin(), sub.end());
  }
  return out;
}

bool validate_hierarchy(const LabeledGraph& g, const HierarchyTree& tree) {
  if (tree.graph == 0 || (tree.graph & ~full_mask(g)) != 0) return false;
  if (tree.leaf()) return tree.children.empty() && is_twistless_star(induced(g, tree.graph));
  const Decomposition& d = *tree.decomposition;
  if (!is_admissible(g, tree.graph, d) || !is_twistless_decomposition(g, d)) return false;
  if (tree.children.size() != 2) return false;
  if (tree.children[0].graph != d.part1 || tree.children[1].graph != d.part2) return false;
  return validate_hierarchy(g, tree.children[0]) && validate_hierarchy(g, tree.children[1]);
}

namespace {

struct BudgetExhausted {};

class HierarchySearch {
 public:
  HierarchySearch(const LabeledGraph& g, std::size_t budget, DecompositionOptions opts)
      : g_(g), budget_(budget), opts_(opts) {
    opts_.twistless_only = true;
  }

  bool solve(VertexMask mask) {
    if (auto it = memo_.find(mask); it != memo_.end()) return it->second.found;
    if (expanded_ >= budget_) throw BudgetExhausted{};
    ++expanded_;
    Entry e;
    if (is_twistless_star(induced(g_, mask))) {
      e.found = true;
    } else {
      for (const auto& d : admissible_decompositions(g_, mask, opts_))
        if (solve(d.part1) && solve(d.part2)) {
          e.found = true;
          e.via = d;
          break;
        }
    }
    memo_[mask] = e;
    return e.found;
  }

  HierarchyTree build(VertexMask mask) const {
    const Entry& e = memo_.at(mask);
    HierarchyTree t;
    t.graph = mask;
    if (e.via) {
      t.decomposition = e.via;
      t.children.push_back(build(e.via->part1));
      t.children.push_back(build(e.via->part2));
    }
    return t;
  }

  std::size_t explored() const { return expanded_; }

 private:
  struct Entry {
    bool found = false;
    std::optional<Decomposition> via;
  };

  const LabeledGraph& g_;
  std::size_t budget_;
  DecompositionOptions opts_;
  std::unordered_map<VertexMask, Entry> memo_;
  std::size_t expanded_ = 0;
};

}  // namespace

HierarchyResult find_twistless_hierarchy(const LabeledGraph& g, std::size_t budget,
                                         DecompositionOptions opts) {
  if (budget == 0) throw Error("hierarchy budget must be positive");
  HierarchyResult r;
  if (g.size() == 0) return r;
  HierarchySearch search(g, budget, opts);
  try {
    if (search.solve(full_mask(g))) {
      r.status = HierarchyStatus::Found;
      r.tree = search.build(full_mask(g));
    } else {
      r.status = HierarchyStatus::NoneDefinitive;
    }
  } catch (const BudgetExhausted&) {
    r.status = HierarchyStatus::Exhausted;
  }
  r.explored = search.explored();
  return r;
}

const char* to_string(HierarchyStatus s) {
  switch (s) {
    case HierarchyStatus::Found:
      return "found";
    case HierarchyStatus::Exhausted:
      return "exhausted";
    case HierarchyStatus::NoneDefinitive:
      return "none";
  }
  return "none";
}

}  // namespace artin
