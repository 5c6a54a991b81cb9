#include "artin/identities.hpp"

#include "artin/catalog.hpp"
#include "artin/errors.hpp"

namespace artin {

Word random_word(std::mt19937_64& rng, std::size_t rank, std::size_t max_length) {
  std::uniform_int_distribution<std::size_t> len(1, max_length), gen(0, rank - 1);
  std::bernoulli_distribution sign(0.5);
  Word w(len(rng));
  for (Letter& l : w) l = {gen(rng), sign(rng) ? 1 : -1};
  return w;
}

std::vector<IdentityCheck> check_dn_identities(std::size_t n, std::size_t samples,
                                               std::uint64_t seed) {
  if (n < 4) throw Error("D_n needs n >= 4");
  const LabeledGraph g = catalog::type_D(n);
  const GarsideStructure gs(g);
  const Word delta = delta_word_Dn(n);
  const Word delta_inv = inverse(delta);
  const WordAutomorphism zeta = fork_swap_Dn(n);
  const WordAutomorphism chi = GlobalInversion{};
  std::vector<IdentityCheck> out;
  auto check = [&](std::string name, bool ok) { out.push_back({std::move(name), ok}); };
  auto conj = [&](const Word& w) { return concat(concat(delta, w), delta_inv); };
  auto t = [&](std::size_t i) { return g.name(i); };

  const NormalForm nf = gs.normal_form(delta);
  check("Delta word is the Garside element", nf.delta_power == 1 && nf.factors.empty());
  check("Delta word has length n(n-1)", delta.size() == n * (n - 1));

  for (std::size_t i = 0; i < n; ++i) {
    const Word ti{{i, 1}};
    if (n % 2 == 0) {
      check("Delta " + t(i) + " = " + t(i) + " Delta",
            gs.equal(concat(delta, ti), concat(ti, delta)));
      continue;
    }
    std::size_t image = i;
    if (i == n - 2) image = n - 1;
    if (i == n - 1) image = n - 2;
    check("Delta " + t(i) + " Delta^-1 = " + t(image),
          gs.equal(conj(ti), Word{{image, 1}}));
    const Word d2 = concat(delta, delta);
    check("Delta^2 " + t(i) + " = " + t(i) + " Delta^2",
          gs.equal(concat(d2, ti), concat(ti, d2)));
  }

  std::mt19937_64 rng(seed);
  bool zeta2 = true, chi2 = true, commute = true, zeta_inner = true;
  bool chi_abel = true, conj_abel = true;
  for (std::size_t k = 0; k < samples; ++k) {
    const Word w = random_word(rng, n, 12);
    const Word x = random_word(rng, n, 6);
    const Word zw = apply_automorphism(g, zeta, w);
    const Word cw = apply_automorphism(g, chi, w);
    zeta2 = zeta2 && gs.equal(apply_automorphism(g, zeta, zw), w);
    chi2 = chi2 && gs.equal(apply_automorphism(g, chi, cw), w);
    commute = commute && gs.equal(apply_automorphism(g, chi, zw),
                                  apply_automorphism(g, zeta, cw));
    if (n % 2 == 1) zeta_inner = zeta_inner && gs.equal(zw, conj(w));
    chi_abel = chi_abel && abelianized_sum(cw) == -abelianized_sum(w);
    conj_abel = conj_abel &&
                abelianized_sum(concat(concat(x, w), inverse(x))) == abelianized_sum(w);
  }
  check("zeta^2 = id", zeta2);
  check("chi^2 = id", chi2);
  check("zeta chi = chi zeta", commute);
  if (n % 2 == 1) check("zeta(w) = Delta w Delta^-1", zeta_inner);
  check("xi(chi(w)) = -xi(w)", chi_abel);
  check("xi is conjugation invariant", conj_abel);
  return out;
}

}  // namespace artin
