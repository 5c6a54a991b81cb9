#pragma once

#include <cstddef>
#include <cstdint>
#include <variant>
#include <vector>

#include "artin/graph.hpp"
#include "artin/group_table.hpp"
#include "artin/word.hpp"

namespace artin {

/// Left normal form Delta^delta_power x1 ... xr. Each factor is a W element
/// (the positive lift of its reduced words), never the identity and never
/// the longest element.
struct NormalForm {
  long delta_power = 0;
  std::vector<Element> factors;

  /// Canonical length r.
  std::size_t canonical_length() const { return factors.size(); }

  friend bool operator==(const NormalForm&, const NormalForm&) = default;
  friend auto operator<=>(const NormalForm&, const NormalForm&) = default;
};

constexpr std::size_t kMaxWordLength = 10'000;

/// Garside structure of a spherical Artin group with the simple elements
/// identified with W. Immutable once built.
class GarsideStructure {
 public:
  /// Throws NotSpherical.
  explicit GarsideStructure(const LabeledGraph& g);

  const LabeledGraph& graph() const { return graph_; }
  const GroupTable& table() const { return table_; }
  std::size_t rank() const { return graph_.size(); }

  Element delta() const { return delta_; }
  std::uint64_t left_descents(Element x) const {
    return left_desc_[static_cast<std::size_t>(x)];
  }
  std::uint64_t right_descents(Element x) const {
    return right_desc_[static_cast<std::size_t>(x)];
  }
  /// Conjugation by Delta on simples: w0 x w0.
  Element tau(Element x) const { return tau_[static_cast<std::size_t>(x)]; }

  /// Every left descent of v is a right descent of u.
  bool is_left_weighted(Element u, Element v) const {
    return (left_descents(v) & ~right_descents(u)) == 0;
  }

  /// Throws artin::Error for words over kMaxWordLength letters.
  NormalForm normal_form(const Word& w) const;
  /// Delta powers first, then a reduced word of each factor.
  Word to_word(const NormalForm& nf) const;
  /// A reduced positive word for a simple element.
  Word simple_word(Element x) const;
  Word delta_word() const { return simple_word(delta_); }

  bool equal(const Word& u, const Word& v) const;

  /// In-place right multiplication of a normal form by a generator power.
  void multiply_right(NormalForm& nf, const Letter& l) const;

 private:
  void append_simple(NormalForm& nf, Element s) const;
  void left_weight(Element& u, Element& v) const;

  LabeledGraph graph_;
  GroupTable table_;
  Element delta_;
  std::vector<std::uint64_t> left_desc_;
  std::vector<std::uint64_t> right_desc_;
  std::vector<Element> tau_;
};

NormalForm normal_form(const LabeledGraph& g, const Word& w);
bool equal(const LabeledGraph& g, const Word& u, const Word& v);

/// The Garside element of A[D_n] as the product of blocks
/// (t1..t(n-2) t(n-1) tn t(n-2)..t1)(t2 .. t2)...(t(n-2) t(n-1) tn t(n-2))(t(n-1) tn),
/// over the generators of catalog::type_D(n). Requires n >= 4.
Word delta_word_Dn(std::size_t n);

/// s -> s^-1 on every generator.
struct GlobalInversion {};
using WordAutomorphism = std::variant<GraphAutomorphism, GlobalInversion>;

/// Letterwise image. Throws InvalidAutomorphism for a graph permutation
/// that is not label-preserving.
Word apply_automorphism(const LabeledGraph& g, const WordAutomorphism& kind,
                        const Word& w);

/// The graph automorphism of D_n exchanging the fork tips t(n-1) and tn.
GraphAutomorphism fork_swap_Dn(std::size_t n);

/// For a graph of type [D_n]: u v^-1 lies in the center, i.e. is a power of
/// Delta (n even) or of Delta^2 (n odd). Throws artin::Error for other types.
bool equal_mod_center(const GarsideStructure& gs, const Word& u, const Word& v);
bool equal_mod_center(const LabeledGraph& g, const Word& u, const Word& v);

}  // namespace artin
