#pragma once

#include <cstddef>

#include "artin/graph.hpp"

// Standard Coxeter graphs of the finite irreducible types. Vertices are named
// t1..tn along the diagram; for D_n the fork tips are t(n-1) and tn, both
// attached to t(n-2).
namespace artin::catalog {

LabeledGraph type_A(std::size_t n);
/// t(n-1)-tn carries the label 4.
LabeledGraph type_B(std::size_t n);
LabeledGraph type_D(std::size_t n);
/// E6, E7, E8: path t1..t(n-1) with tn attached to t3.
LabeledGraph type_E(std::size_t n);
LabeledGraph type_F4();
/// H3, H4: t1-t2 carries the label 5.
LabeledGraph type_H(std::size_t n);
/// Two vertices a, b with label m.
LabeledGraph dihedral(int m);

}  // namespace artin::catalog
