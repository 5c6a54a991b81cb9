#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace artin {

/// An off-diagonal Coxeter matrix entry: an integer m >= 2 or infinity.
class Label {
 public:
  static Label finite(int m);
  static Label infinity() { return Label(kInf); }

  bool is_infinite() const { return m_ == kInf; }
  bool is_finite() const { return m_ != kInf; }
  /// Throws artin::Error on an infinite label.
  int value() const;

  std::string to_string() const;

  friend bool operator==(Label, Label) = default;

 private:
  static constexpr int kInf = 0;
  explicit Label(int m) : m_(m) {}
  int m_;
};

/// Which pairs are stored as edges. Presentation graphs store every finite
/// pair (absent = infinity); Coxeter graphs store every pair with m >= 3
/// including infinity (absent = 2).
enum class Convention { Presentation, Coxeter };

std::string_view to_string(Convention c);

struct Edge {
  std::size_t u;
  std::size_t v;
  Label label;
};

/// A Coxeter matrix over named vertices together with the convention used to
/// present it as a graph. The full matrix is stored, so changing the
/// convention never changes the group.
class LabeledGraph {
 public:
  LabeledGraph(std::vector<std::string> vertices, Convention convention);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& vertices() const { return names_; }
  const std::string& name(std::size_t i) const { return names_[i]; }
  std::optional<std::size_t> index_of(std::string_view name) const;
  /// Like index_of, but throws UnknownVertex.
  std::size_t require_index(std::string_view name) const;

  Convention convention() const { return convention_; }

  Label label(std::size_t i, std::size_t j) const;
  void set_label(std::size_t i, std::size_t j, Label m);

  /// Raw Coxeter entry with 0 for infinity and 1 on the diagonal.
  int entry(std::size_t i, std::size_t j) const { return m_[i * size() + j]; }

  /// Adjacency in the presentation graph: the pair has a finite label.
  bool adjacent(std::size_t i, std::size_t j) const {
    return i != j && entry(i, j) != 0;
  }
  /// Whether the pair is a stored edge under this graph's convention.
  bool is_edge(std::size_t i, std::size_t j) const;

  /// Stored edges with u < v, sorted by (u, v).
  std::vector<Edge> edges() const;

  friend bool operator==(const LabeledGraph&, const LabeledGraph&) = default;

 private:
  std::vector<std::string> names_;
  Convention convention_;
  std::vector<int> m_;
};

/// A vertex permutation: image[i] is the image of vertex i.
struct GraphAutomorphism {
  std::vector<std::size_t> image;

  bool is_identity() const;
  GraphAutomorphism compose(const GraphAutomorphism& inner) const;
  GraphAutomorphism inverse() const;

  friend bool operator==(const GraphAutomorphism&,
                         const GraphAutomorphism&) = default;
  friend auto operator<=>(const GraphAutomorphism&,
                          const GraphAutomorphism&) = default;
};

LabeledGraph parse_graph(std::string_view text);
/// DSL text that parse_graph maps back to an equal graph.
std::string serialize_graph(const LabeledGraph& g);

LabeledGraph convert(const LabeledGraph& g, Convention target);

LabeledGraph induced_subgraph(const LabeledGraph& g,
                              std::span<const std::string> vs);
/// Index variant; vertices keep the order they have in g.
LabeledGraph induced_subgraph(const LabeledGraph& g,
                              std::span<const std::size_t> vs);

bool is_label_preserving(const LabeledGraph& g, const GraphAutomorphism& s);

/// Every label-preserving vertex permutation, in lexicographic order of the
/// image vectors. The identity always comes first.
std::vector<GraphAutomorphism> graph_automorphisms(const LabeledGraph& g);

/// Reorder the vertex list: vertex i moves to position image[i], keeping its
/// name and labels.
LabeledGraph permute_vertices(const LabeledGraph& g,
                              const GraphAutomorphism& perm);

/// Parse "(a b)(c d e)" or "(a b),(c d)" into a permutation of g's vertices.
GraphAutomorphism parse_cycles(const LabeledGraph& g, std::string_view text);
std::string format_cycles(const LabeledGraph& g, const GraphAutomorphism& s);

// Presentation-graph connectivity helpers over a vertex bitmask.
using VertexMask = std::uint64_t;

VertexMask full_mask(const LabeledGraph& g);
/// Connected components of the presentation graph restricted to `within`.
std::vector<VertexMask> components(const LabeledGraph& g, VertexMask within);
bool is_connected(const LabeledGraph& g);

std::vector<std::size_t> mask_to_indices(VertexMask mask);
VertexMask indices_to_mask(std::span<const std::size_t> indices);

}  // namespace artin
