#include "artin/deligne_link.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <queue>
#include <sstream>

#include "artin/catalog.hpp"
#include "artin/errors.hpp"
#include "artin/torus.hpp"
#include "artin/union_find.hpp"

namespace artin {

namespace {

constexpr std::size_t kGenA = 0;
constexpr std::size_t kGenB = 1;

GarsideStructure dihedral_structure(int m) {
  if (m < 3) throw Error("link ball needs a finite label m >= 3");
  return GarsideStructure(catalog::dihedral(m));
}

// All normal forms with p >= -1 and |p| + r <= cap.
std::vector<NormalForm> enumerate_normal_forms(const GarsideStructure& gs,
                                               std::size_t cap) {
  std::vector<Element> simples;
  for (std::size_t x = 1; x < gs.table().size(); ++x)
    if (static_cast<Element>(x) != gs.delta()) simples.push_back(static_cast<Element>(x));

  std::vector<NormalForm> out;
  const long max_p = static_cast<long>(cap);
  for (long p = -1; p <= max_p; ++p) {
    const std::size_t abs_p = static_cast<std::size_t>(std::abs(p));
    if (abs_p > cap) continue;
    const std::size_t max_r = cap - abs_p;
    std::vector<NormalForm> layer{NormalForm{p, {}}};
    out.push_back(layer.front());
    for (std::size_t r = 1; r <= max_r; ++r) {
      std::vector<NormalForm> next;
      for (const auto& nf : layer)
        for (Element s : simples) {
          if (!nf.factors.empty() && !gs.is_left_weighted(nf.factors.back(), s))
            continue;
          NormalForm ext = nf;
          ext.factors.push_back(s);
          next.push_back(std::move(ext));
        }
      out.insert(out.end(), next.begin(), next.end());
      layer = std::move(next);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// h^-1 g is a power of the generator?
bool same_coset(const GarsideStructure& gs, const NormalForm& g,
                const NormalForm& h, std::size_t gen) {
  const NormalForm q = gs.normal_form(concat(inverse(gs.to_word(h)), gs.to_word(g)));
  long k = 0;
  if (q.delta_power < 0) {
    k = q.delta_power;
  } else if (q.delta_power == 0) {
    k = static_cast<long>(q.factors.size());
  } else {
    return false;
  }
  const Word power(static_cast<std::size_t>(std::abs(k)), Letter{gen, k < 0 ? -1 : 1});
  return gs.normal_form(power) == q;
}

}  // namespace

LinkBall build_link_ball(int m, std::size_t cap) {
  const GarsideStructure gs = dihedral_structure(m);
  LinkBall ball;
  ball.m = m;
  ball.cap = cap;

  const auto elements = enumerate_normal_forms(gs, cap);
  for (const auto& nf : elements) {
    const bool boundary =
        static_cast<std::size_t>(std::abs(nf.delta_power)) + nf.canonical_length() == cap;
    ball.element_index.emplace(nf, ball.vertices.size());
    ball.vertices.push_back({LinkVertexKind::Element, nf, boundary});
  }

  const std::size_t n = elements.size();
  ball.adjacency.assign(n, {});
  for (std::size_t gen : {kGenA, kGenB}) {
    DisjointSets cosets(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (cosets.find(i) != cosets.find(j) &&
            same_coset(gs, elements[i], elements[j], gen))
          cosets.unite(i, j);
    // Representative: the member of least |p| + r, ties broken by normal form.
    auto size_of = [&](std::size_t i) {
      return static_cast<std::size_t>(std::abs(elements[i].delta_power)) +
             elements[i].canonical_length();
    };
    std::map<std::size_t, std::size_t> best;
    for (std::size_t i = 0; i < n; ++i) {
      auto [it, fresh] = best.emplace(cosets.find(i), i);
      if (!fresh && size_of(i) < size_of(it->second)) it->second = i;
    }
    std::map<std::size_t, std::size_t> coset_vertex;
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t root = cosets.find(i);
      auto it = coset_vertex.find(root);
      if (it == coset_vertex.end()) {
        it = coset_vertex.emplace(root, ball.vertices.size()).first;
        ball.vertices.push_back(
            {gen == kGenA ? LinkVertexKind::CosetA : LinkVertexKind::CosetB,
             elements[best.at(root)], false});
        ball.adjacency.emplace_back();
      }
      ball.edges.emplace_back(i, it->second);
      ball.adjacency[i].push_back(it->second);
      ball.adjacency[it->second].push_back(i);
    }
  }
  std::sort(ball.edges.begin(), ball.edges.end());

  // A forest has |E| = |V| - #components.
  DisjointSets conn(ball.vertices.size());
  for (const auto& [u, v] : ball.edges) conn.unite(u, v);
  ball.no_loop_warning =
      ball.edges.size() == ball.vertices.size() - conn.set_count();
  return ball;
}

GirthReport girth_lower_bound(const LinkBall& ball) {
  const std::size_t n = ball.vertices.size();
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  GirthReport report;
  std::size_t best = kNone;

  for (std::size_t src = 0; src < n; ++src) {
    std::vector<std::size_t> dist(n, kNone), parent(n, kNone);
    dist[src] = 0;
    std::queue<std::size_t> q;
    q.push(src);
    while (!q.empty()) {
      const std::size_t u = q.front();
      q.pop();
      if (2 * dist[u] + 1 > best) break;
      for (std::size_t w : ball.adjacency[u]) {
        if (dist[w] == kNone) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          q.push(w);
          continue;
        }
        if (w == parent[u]) continue;
        const std::size_t len = dist[u] + dist[w] + 1;
        if (len > best) continue;
        // Closed walk src..u w..src; keep it only if it is a simple cycle.
        std::vector<std::size_t> left, right;
        for (std::size_t x = u; x != kNone; x = parent[x]) left.push_back(x);
        for (std::size_t x = w; x != kNone; x = parent[x]) right.push_back(x);
        std::vector<std::size_t> a(left.begin(), left.end() - 1);
        std::vector<std::size_t> b(right.begin(), right.end() - 1);
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        std::vector<std::size_t> common;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                              std::back_inserter(common));
        if (!common.empty()) continue;
        std::vector<std::size_t> cycle(left.rbegin(), left.rend());
        cycle.insert(cycle.end(), right.begin(), right.end() - 1);
        const bool interior = std::none_of(cycle.begin(), cycle.end(), [&](std::size_t v) {
          return ball.vertices[v].boundary;
        });
        if (len < best || (interior && !report.exact)) {
          best = len;
          report.witness = std::move(cycle);
          report.exact = interior;
        }
      }
    }
  }
  if (best != kNone) report.girth = best;
  return report;
}

std::optional<std::vector<std::size_t>> relator_loop(const LinkBall& ball) {
  const GarsideStructure gs = dihedral_structure(ball.m);
  const Word relator = concat(alternating_word(kGenA, kGenB, ball.m),
                              inverse(alternating_word(kGenB, kGenA, ball.m)));
  std::vector<std::size_t> loop;
  Word prefix;
  for (std::size_t i = 0; i < relator.size(); ++i) {
    auto it = ball.element_index.find(gs.normal_form(prefix));
    if (it == ball.element_index.end()) return std::nullopt;
    const std::size_t element = it->second;
    const auto kind =
        relator[i].gen == kGenA ? LinkVertexKind::CosetA : LinkVertexKind::CosetB;
    std::optional<std::size_t> coset;
    for (std::size_t c : ball.adjacency[element])
      if (ball.vertices[c].kind == kind) coset = c;
    if (!coset) return std::nullopt;
    loop.push_back(element);
    loop.push_back(*coset);
    prefix.push_back(relator[i]);
  }
  // The next element vertex must be in the last coset.
  const auto& last = ball.adjacency[loop.back()];
  if (std::find(last.begin(), last.end(), loop.front()) == last.end())
    return std::nullopt;
  return loop;
}

Word loop_word(const LinkBall& ball, const std::vector<std::size_t>& cycle) {
  if (cycle.size() < 2 || cycle.size() % 2 != 0)
    throw Error("cycle must have even positive length");
  const GarsideStructure gs = dihedral_structure(ball.m);
  // Rotate so the cycle starts at an element vertex.
  std::vector<std::size_t> c = cycle;
  if (ball.vertices[c.front()].kind != LinkVertexKind::Element)
    std::rotate(c.begin(), c.begin() + 1, c.end());

  Word out;
  for (std::size_t i = 0; i < c.size(); i += 2) {
    const auto& g = ball.vertices[c[i]];
    const auto& coset = ball.vertices[c[i + 1]];
    const auto& h = ball.vertices[c[(i + 2) % c.size()]];
    if (g.kind != LinkVertexKind::Element || h.kind != LinkVertexKind::Element ||
        coset.kind == LinkVertexKind::Element)
      throw Error("cycle does not alternate element and coset vertices");
    const std::size_t gen = coset.kind == LinkVertexKind::CosetA ? kGenA : kGenB;
    const NormalForm q =
        gs.normal_form(concat(inverse(gs.to_word(g.rep)), gs.to_word(h.rep)));
    // q = gen^k; recover k from the normal form.
    long k = q.delta_power < 0 ? q.delta_power : static_cast<long>(q.factors.size());
    if (gs.normal_form(Word(static_cast<std::size_t>(std::abs(k)),
                            Letter{gen, k < 0 ? -1 : 1})) != q || k == 0)
      throw Error("consecutive elements are not related by a generator power");
    for (long j = 0; j < std::abs(k); ++j) out.push_back({gen, k < 0 ? -1 : 1});
  }
  return out;
}

std::string vertex_label(const LinkBall& ball, std::size_t v) {
  static const std::vector<std::string> names{"a", "b"};
  const GarsideStructure gs = dihedral_structure(ball.m);
  const auto& vx = ball.vertices.at(v);
  std::string word = format_word(freely_reduce(gs.to_word(vx.rep)), names);
  if (word.empty()) word = "1";
  switch (vx.kind) {
    case LinkVertexKind::Element:
      return "element " + word;
    case LinkVertexKind::CosetA:
      return "coset_a " + word;
    case LinkVertexKind::CosetB:
      return "coset_b " + word;
  }
  return word;
}

std::string edge_list_text(const LinkBall& ball) {
  std::ostringstream out;
  out << "# m " << ball.m << " cap " << ball.cap << '\n';
  for (std::size_t v = 0; v < ball.vertices.size(); ++v)
    out << "# " << v << ' ' << vertex_label(ball, v)
        << (ball.vertices[v].boundary ? " boundary" : "") << '\n';
  for (const auto& [u, v] : ball.edges) out << u << ' ' << v << '\n';
  return out.str();
}

}  // namespace artin
