#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "artin/classify.hpp"
#include "artin/graph.hpp"

namespace artin {

using Element = std::int32_t;

/// Matrices of the simple reflections in the simple-root basis: generator s
/// acts by x -> x - 2 B(x, alpha_s) alpha_s with B the cosine form.
template <typename Scalar = double>
std::vector<DenseMatrix<Scalar>> reflection_generators(const LabeledGraph& g) {
  const DenseMatrix<Scalar> b = gram_matrix<Scalar>(g);
  const auto n = b.rows();
  std::vector<DenseMatrix<Scalar>> out;
  for (Eigen::Index i = 0; i < n; ++i) {
    DenseMatrix<Scalar> s = DenseMatrix<Scalar>::Identity(n, n);
    s.row(i) -= Scalar(2) * b.row(i);
    out.push_back(std::move(s));
  }
  return out;
}

/// An enumerated finite group. Element 0 is the identity. Generators are
/// indexed in the order they were supplied (for Coxeter groups: the vertex
/// order of the defining graph). Right and left multiplication by generators
/// is always tabulated; the full multiplication table is optional.
class GroupTable {
 public:
  /// Build from a full multiplication table (row-major, size x size) and the
  /// element indices of the generators.
  static GroupTable from_dense(std::size_t size, std::vector<Element> mul,
                               std::vector<std::string> gen_names,
                               std::vector<Element> gens);
  /// Build from right multiplication by generators only: right[x * ngens + k]
  /// is x * gens[k]. Element 0 must be the identity.
  static GroupTable from_right_table(std::size_t size, std::vector<Element> right,
                                     std::vector<std::string> gen_names,
                                     std::vector<Element> gens);

  std::size_t size() const { return size_; }
  std::size_t generator_count() const { return gens_.size(); }
  const std::vector<std::string>& generator_names() const { return names_; }
  std::optional<std::size_t> generator_index(const std::string& name) const;
  Element generator(std::size_t k) const { return gens_[k]; }

  Element right_mul_gen(Element x, std::size_t k) const {
    return right_[static_cast<std::size_t>(x) * gens_.size() + k];
  }
  Element left_mul_gen(Element x, std::size_t k) const {
    return left_[static_cast<std::size_t>(x) * gens_.size() + k];
  }
  Element inverse(Element x) const { return inv_[static_cast<std::size_t>(x)]; }
  /// Word length over the generators (distance in the right Cayley graph).
  int length(Element x) const { return length_[static_cast<std::size_t>(x)]; }

  Element multiply(Element x, Element y) const;
  bool has_dense_table() const { return !mul_.empty(); }
  /// Tabulate the full product; a no-op when already present.
  void materialize_dense_table();

  /// A shortest word of generator indices whose product is x.
  std::vector<std::size_t> word(Element x) const;
  Element evaluate(const std::vector<std::size_t>& word) const;

 private:
  friend GroupTable enumerate_group(const LabeledGraph&, std::size_t);
  GroupTable() = default;
  void finish_from_right_table();

  std::size_t size_ = 0;
  std::vector<std::string> names_;
  std::vector<Element> gens_;
  std::vector<Element> right_;
  std::vector<Element> left_;
  std::vector<Element> inv_;
  std::vector<int> length_;
  std::vector<Element> parent_;
  std::vector<std::uint8_t> parent_gen_;
  std::vector<Element> bfs_order_;
  std::vector<Element> mul_;
};

constexpr std::size_t kDefaultGroupSizeBound = 1'000'000;
constexpr std::size_t kDenseTableLimit = 4096;

/// Enumerate W for a spherical graph by closing the reflection
/// representation. Matrices are keyed on a 1e-6 grid. Throws NotSpherical or
/// SizeBoundExceeded. Groups up to kDenseTableLimit elements get the full
/// multiplication table.
GroupTable enumerate_group(const LabeledGraph& g,
                           std::size_t size_bound = kDefaultGroupSizeBound);

/// The unique element of maximal length (the longest element w0).
Element longest_element(const GroupTable& t);

/// A permutation of element indices.
struct GroupAutomorphism {
  std::vector<Element> image;

  Element operator()(Element x) const {
    return image[static_cast<std::size_t>(x)];
  }
  bool is_identity() const;
  GroupAutomorphism compose(const GroupAutomorphism& inner) const;
  GroupAutomorphism power(std::size_t k) const;
  /// Order as a permutation.
  std::size_t order() const;

  friend bool operator==(const GroupAutomorphism&,
                         const GroupAutomorphism&) = default;
};

GroupAutomorphism identity_automorphism(const GroupTable& t);
/// conj_g: x -> g x g^-1.
GroupAutomorphism inner_automorphism(const GroupTable& t, Element g);
/// Checks bijectivity and phi(x s) = phi(x) phi(s) for every x and generator s.
bool is_automorphism(const GroupTable& t, const GroupAutomorphism& phi);

/// Extend generator k -> generator sigma(k) along the Cayley graph. Throws
/// InvalidAutomorphism if the assignment does not respect the relations
/// (sigma not label-preserving).
GroupAutomorphism induced_automorphism(const GroupTable& t,
                                       const GraphAutomorphism& sigma);
/// The global inversion s -> s^-1 descends to the identity on a Coxeter group.
GroupAutomorphism induced_inversion(const GroupTable& t);

}  // namespace artin
