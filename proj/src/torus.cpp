#include "artin/torus.hpp"

#include <algorithm>

#include "artin/errors.hpp"

namespace artin {

Word alternating_word(std::size_t s, std::size_t t, int m) {
  Word w;
  for (int i = 0; i < m; ++i) w.push_back({i % 2 == 0 ? s : t, 1});
  return w;
}

Presentation artin_presentation(const LabeledGraph& g) {
  Presentation p;
  p.generators = g.vertices();
  for (std::size_t s = 0; s < g.size(); ++s)
    for (std::size_t t = s + 1; t < g.size(); ++t) {
      const int m = g.entry(s, t);
      if (m == 0) continue;
      p.relators.push_back(
          concat(alternating_word(s, t, m), inverse(alternating_word(t, s, m))));
    }
  return p;
}

namespace {

void check_word(const Word& w, std::size_t gen_count, const char* what) {
  for (const Letter& l : w)
    if (l.gen >= gen_count || (l.exp != 1 && l.exp != -1))
      throw Error(std::string(what) + " uses an unknown generator");
}

}  // namespace

Presentation build_mapping_torus(const Presentation& p,
                                 const std::vector<Word>& images,
                                 std::optional<std::size_t> order,
                                 const std::optional<Word>& p_elt) {
  const std::size_t n = p.generators.size();
  if (images.size() != n)
    throw Error("need one automorphism image per generator");
  for (const Word& w : images) check_word(w, n, "automorphism image");
  if (order) {
    if (*order == 0) throw Error("order must be positive");
    if (!p_elt) throw Error("finite order requires the element p with phi^m = conj_p");
    check_word(*p_elt, n, "p");
  }

  Presentation out = p;
  std::string stable = "t";
  while (std::find(out.generators.begin(), out.generators.end(), stable) !=
         out.generators.end())
    stable += '\'';
  out.generators.push_back(stable);
  const std::size_t t = n;

  for (std::size_t g = 0; g < n; ++g) {
    Word r{{t, 1}, {g, 1}, {t, -1}};
    r = concat(r, inverse(images[g]));
    out.relators.push_back(std::move(r));
  }
  if (order) {
    Word r(*order, Letter{t, 1});
    out.relators.push_back(concat(r, inverse(*p_elt)));
  }
  return out;
}

std::size_t stable_letter(const Presentation& torus) {
  if (torus.generators.empty()) throw Error("empty presentation");
  return torus.generators.size() - 1;
}

GroupTable realize_finite(const GroupTable& t, const GroupAutomorphism& phi) {
  if (!is_automorphism(t, phi)) throw InvalidAutomorphism("phi is not an automorphism");
  const std::size_t n = t.size();
  const std::size_t k = phi.order();
  std::vector<GroupAutomorphism> powers{identity_automorphism(t)};
  for (std::size_t i = 1; i < k; ++i) powers.push_back(phi.compose(powers.back()));

  std::vector<std::string> names = t.generator_names();
  std::vector<Element> gens;
  for (std::size_t s = 0; s < t.generator_count(); ++s) gens.push_back(t.generator(s));
  if (k > 1) {
    std::string stable = "t";
    while (std::find(names.begin(), names.end(), stable) != names.end()) stable += '\'';
    names.push_back(stable);
    gens.push_back(semidirect_index(n, 0, 1));
  }

  // (g, i)(h, 0) = (g phi^i(h), i) and (g, i)(1, 1) = (g, i + 1).
  const std::size_t size = n * k;
  std::vector<Element> right;
  right.reserve(size * gens.size());
  for (std::size_t a = 0; a < size; ++a) {
    const auto [g, i] = semidirect_coordinates(n, static_cast<Element>(a));
    for (std::size_t s = 0; s < t.generator_count(); ++s)
      right.push_back(semidirect_index(n, t.multiply(g, powers[i](t.generator(s))), i));
    if (k > 1) right.push_back(semidirect_index(n, g, (i + 1) % k));
  }
  GroupTable out = GroupTable::from_right_table(size, std::move(right), std::move(names),
                                                std::move(gens));
  if (size <= kDenseTableLimit) out.materialize_dense_table();
  return out;
}

}  // namespace artin
