#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "artin/graph.hpp"
#include "artin/group_table.hpp"
#include "artin/word.hpp"

namespace artin {

/// A finite presentation. Relator letters index `generators`.
struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;

  friend bool operator==(const Presentation&, const Presentation&) = default;
};

/// Generators = vertices; one relator Pi(s,t,m) Pi(t,s,m)^-1 per finite pair.
Presentation artin_presentation(const LabeledGraph& g);

/// Pi(s, t, m): the alternating word s t s t ... of length m.
Word alternating_word(std::size_t s, std::size_t t, int m);

/// Mapping-torus presentation: add a stable letter t with t g t^-1 = phi(g)
/// for every generator g, and t^m = p when the order m is finite.
/// `images[k]` is phi(generator k) over the original generators;
/// `order` is nullopt for infinite order. The stable letter is named "t",
/// primed until it does not clash with an existing generator.
Presentation build_mapping_torus(const Presentation& p,
                                 const std::vector<Word>& images,
                                 std::optional<std::size_t> order,
                                 const std::optional<Word>& p_elt);

/// Index of the stable letter in a presentation built above.
std::size_t stable_letter(const Presentation& torus);

struct SemidirectCoordinates {
  Element element;
  std::size_t power;
};

/// (g, i) <-> i * |G| + g in the table returned by realize_finite.
inline Element semidirect_index(std::size_t group_size, Element g,
                                std::size_t power) {
  return static_cast<Element>(power * group_size + static_cast<std::size_t>(g));
}
inline SemidirectCoordinates semidirect_coordinates(std::size_t group_size,
                                                    Element e) {
  const auto u = static_cast<std::size_t>(e);
  return {static_cast<Element>(u % group_size), u / group_size};
}

/// G x| <c> with c of order k = ord(phi) acting by phi:
/// (g, i)(h, j) = (g phi^i(h), i + j mod k). Generators are those of G at
/// power 0 plus the stable letter (e, 1) when k > 1.
GroupTable realize_finite(const GroupTable& t, const GroupAutomorphism& phi);

}  // namespace artin
