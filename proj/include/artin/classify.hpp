#pragma once

#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "artin/graph.hpp"

namespace artin {

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// Cosine matrix of the Coxeter matrix: 1 on the diagonal, -cos(pi/m)
/// off it, with m = infinity giving -1.
template <typename Scalar = double>
DenseMatrix<Scalar> gram_matrix(const LabeledGraph& g) {
  const auto n = static_cast<Eigen::Index>(g.size());
  DenseMatrix<Scalar> b = DenseMatrix<Scalar>::Identity(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const int m = g.entry(static_cast<std::size_t>(i),
                            static_cast<std::size_t>(j));
      const Scalar value =
          m == 0 ? Scalar(-1)
                 : -std::cos(std::numbers::pi_v<Scalar> / Scalar(m));
      b(i, j) = value;
      b(j, i) = value;
    }
  return b;
}

/// Leading principal minors, smallest first.
template <typename Derived>
std::vector<typename Derived::Scalar> leading_minors(
    const Eigen::MatrixBase<Derived>& a) {
  std::vector<typename Derived::Scalar> out;
  for (Eigen::Index k = 1; k <= a.rows(); ++k)
    out.push_back(a.topLeftCorner(k, k).determinant());
  return out;
}

/// Sylvester's criterion with an absolute tolerance on each minor.
template <typename Derived>
bool is_positive_definite(const Eigen::MatrixBase<Derived>& a,
                          double tolerance = 1e-9) {
  for (auto minor : leading_minors(a))
    if (!(minor > tolerance)) return false;
  return true;
}

struct ClassificationReport {
  bool is_large = false;
  bool is_free_of_infinity = false;
  bool is_xxxl = false;
  std::optional<bool> is_hyperbolic_type;
  std::optional<std::vector<std::string>> spherical_type;
  bool is_twistless = false;
  bool is_twistless_star = false;
  std::size_t vertex_count = 0;

  friend bool operator==(const ClassificationReport&,
                         const ClassificationReport&) = default;
};

bool is_large(const LabeledGraph& g);
bool is_free_of_infinity(const LabeledGraph& g);
bool is_xxxl(const LabeledGraph& g);
/// Defined only for large-type graphs: no triangle labelled (3,3,3).
std::optional<bool> is_hyperbolic_type(const LabeledGraph& g);

/// Irreducible finite types of the components of the Coxeter graph, one name
/// per component in order of each component's first vertex ("A1", "A5",
/// "B3", "D6", "E7", "F4", "H3", "I2(7)"). Rank-2 components are always
/// reported as I2(m). Returns nullopt if any component is not of finite type.
std::optional<std::vector<std::string>> spherical_type(const LabeledGraph& g);

/// Connected, no cut vertex, and no edge whose removal together with both
/// endpoints disconnects what remains. Computed on presentation adjacency.
bool is_twistless(const LabeledGraph& g);
/// Some vertex is adjacent to all others, and the graph is twistless.
bool is_twistless_star(const LabeledGraph& g);

ClassificationReport classify(const LabeledGraph& g);

/// Classical order of an irreducible finite Coxeter group by catalog name.
std::size_t classical_order(const std::string& type_name);

}  // namespace artin
