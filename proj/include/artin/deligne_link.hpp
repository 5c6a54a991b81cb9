#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "artin/garside.hpp"

namespace artin {

enum class LinkVertexKind { Element, CosetA, CosetB };

/// A vertex of the link of the identity rank-2 coset in the Deligne complex
/// of the dihedral Artin group <a, b>: an element g, or a coset g<a> or g<b>
/// represented by its member of least |p| + r inside the ball.
struct LinkVertex {
  LinkVertexKind kind;
  NormalForm rep;
  bool boundary = false;
};

/// Finite piece of the link: every element with normal form
/// Delta^p x1..xr, p >= -1 and |p| + r <= cap, with both of its cosets.
/// The link is bipartite; element vertices have degree exactly 2.
struct LinkBall {
  int m = 0;
  std::size_t cap = 0;
  std::vector<LinkVertex> vertices;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // (element, coset)
  std::vector<std::vector<std::size_t>> adjacency;
  std::map<NormalForm, std::size_t> element_index;
  /// Set when the ball contains no cycle at all.
  bool no_loop_warning = false;

  std::size_t element_count() const { return element_index.size(); }
};

/// Throws artin::Error for m < 3.
LinkBall build_link_ball(int m, std::size_t cap);

struct GirthReport {
  /// Shortest cycle length in the ball; nullopt if acyclic.
  std::optional<std::size_t> girth;
  /// A shortest cycle whose element vertices all lie off the boundary.
  bool exact = false;
  /// Vertex indices of a shortest cycle, in order.
  std::vector<std::size_t> witness;
};

GirthReport girth_lower_bound(const LinkBall& ball);

/// The loop traced by the prefixes of Pi(a,b,m) Pi(b,a,m)^-1, as ball vertex
/// indices. nullopt if some vertex or edge of it is missing from the ball.
std::optional<std::vector<std::size_t>> relator_loop(const LinkBall& ball);

/// The syllable word a^n1 b^n2 ... read off a cycle of the ball, one syllable
/// per element vertex. Throws artin::Error if the cycle is malformed.
Word loop_word(const LinkBall& ball, const std::vector<std::size_t>& cycle);

/// "element <word>" / "coset_a <word>" / "coset_b <word>".
std::string vertex_label(const LinkBall& ball, std::size_t v);
/// One "u v" pair of vertex indices per line, preceded by a vertex legend.
std::string edge_list_text(const LinkBall& ball);

}  // namespace artin
