#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "artin/garside.hpp"

namespace artin {

struct IdentityCheck {
  std::string name;
  bool passed = false;
};

/// A random freely unreduced word of length in [1, max_length].
Word random_word(std::mt19937_64& rng, std::size_t rank, std::size_t max_length);

/// Relations among Delta, the fork swap zeta, the global inversion chi and
/// the abelianization for A[D_n], checked by normal forms on `samples`
/// random words. Requires n >= 4.
std::vector<IdentityCheck> check_dn_identities(std::size_t n, std::size_t samples = 100,
                                               std::uint64_t seed = 1);

}  // namespace artin
