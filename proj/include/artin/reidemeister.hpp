#pragma once

#include <cstddef>
#include <vector>

#include "artin/group_table.hpp"

namespace artin {

/// A partition of element indices. Each class is sorted; classes are ordered
/// by their smallest element, which is the canonical representative.
using Partition = std::vector<std::vector<Element>>;

Partition conjugacy_classes(const GroupTable& t);

/// Orbits of x . g = x g phi(x)^-1. Generator moves suffice since this is a
/// group action.
Partition twisted_classes(const GroupTable& t, const GroupAutomorphism& phi);

std::size_t reidemeister_number(const GroupTable& t,
                                const GroupAutomorphism& phi);

/// Count conjugacy classes of G x| <c> (c of order ord(phi), acting as phi)
/// that meet the coset G c. Equals reidemeister_number by the coset
/// correspondence; computed without touching twisted orbits.
std::size_t reidemeister_via_coset(const GroupTable& t,
                                   const GroupAutomorphism& phi);

}  // namespace artin
