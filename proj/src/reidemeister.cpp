#include "artin/reidemeister.hpp"

#include <algorithm>
#include <map>

#include "artin/torus.hpp"
#include "artin/union_find.hpp"

namespace artin {

namespace {

Partition collect(DisjointSets& sets, std::size_t n) {
  std::map<std::size_t, std::vector<Element>> by_root;
  for (std::size_t x = 0; x < n; ++x)
    by_root[sets.find(x)].push_back(static_cast<Element>(x));
  Partition out;
  out.reserve(by_root.size());
  for (auto& [root, members] : by_root) out.push_back(std::move(members));
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

}  // namespace

Partition conjugacy_classes(const GroupTable& t) {
  return twisted_classes(t, identity_automorphism(t));
}

Partition twisted_classes(const GroupTable& t, const GroupAutomorphism& phi) {
  DisjointSets sets(t.size());
  for (std::size_t k = 0; k < t.generator_count(); ++k) {
    const Element twist = t.inverse(phi(t.generator(k)));
    for (std::size_t g = 0; g < t.size(); ++g) {
      const Element moved =
          t.multiply(t.left_mul_gen(static_cast<Element>(g), k), twist);
      sets.unite(g, static_cast<std::size_t>(moved));
    }
  }
  return collect(sets, t.size());
}

std::size_t reidemeister_number(const GroupTable& t,
                                const GroupAutomorphism& phi) {
  return twisted_classes(t, phi).size();
}

std::size_t reidemeister_via_coset(const GroupTable& t,
                                   const GroupAutomorphism& phi) {
  const GroupTable product = realize_finite(t, phi);
  const std::size_t k = product.size() / t.size();
  const std::size_t coset = 1 % k;
  std::size_t count = 0;
  for (const auto& cls : conjugacy_classes(product)) {
    const bool meets = std::any_of(cls.begin(), cls.end(), [&](Element e) {
      return semidirect_coordinates(t.size(), e).power == coset;
    });
    if (meets) ++count;
  }
  return count;
}

}  // namespace artin
