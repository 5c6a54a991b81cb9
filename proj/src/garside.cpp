#include "artin/garside.hpp"

#include <algorithm>

#include "artin/catalog.hpp"
#include "artin/classify.hpp"
#include "artin/errors.hpp"

namespace artin {

GarsideStructure::GarsideStructure(const LabeledGraph& g)
    : graph_(g), table_(enumerate_group(g)), delta_(longest_element(table_)) {
  if (g.size() > 64) throw Error("rank too large");
  const std::size_t n = table_.size();
  left_desc_.resize(n);
  right_desc_.resize(n);
  tau_.resize(n);
  for (std::size_t x = 0; x < n; ++x) {
    const auto e = static_cast<Element>(x);
    std::uint64_t l = 0, r = 0;
    for (std::size_t k = 0; k < rank(); ++k) {
      if (table_.length(table_.left_mul_gen(e, k)) < table_.length(e))
        l |= std::uint64_t{1} << k;
      if (table_.length(table_.right_mul_gen(e, k)) < table_.length(e))
        r |= std::uint64_t{1} << k;
    }
    left_desc_[x] = l;
    right_desc_[x] = r;
    tau_[x] = table_.multiply(table_.multiply(delta_, e), delta_);
  }
}

void GarsideStructure::left_weight(Element& u, Element& v) const {
  while (true) {
    const std::uint64_t movable = left_descents(v) & ~right_descents(u);
    if (movable == 0) return;
    const auto k = static_cast<std::size_t>(__builtin_ctzll(movable));
    u = table_.right_mul_gen(u, k);
    v = table_.left_mul_gen(v, k);
  }
}

void GarsideStructure::append_simple(NormalForm& nf, Element s) const {
  if (s == 0) return;
  auto& f = nf.factors;
  f.push_back(s);
  // Right-to-left passes; one pass suffices in theory, repeat until stable.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = f.size() - 1; i > 0; --i) {
      if (is_left_weighted(f[i - 1], f[i])) continue;
      left_weight(f[i - 1], f[i]);
      changed = true;
    }
  }
  // In a left-weighted sequence, Delta factors lead and identities trail.
  std::size_t lead = 0;
  while (lead < f.size() && f[lead] == delta_) ++lead;
  nf.delta_power += static_cast<long>(lead);
  f.erase(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(lead));
  while (!f.empty() && f.back() == 0) f.pop_back();
}

void GarsideStructure::multiply_right(NormalForm& nf, const Letter& l) const {
  if (l.gen >= rank()) throw Error("generator index out of range");
  if (l.exp > 0) {
    append_simple(nf, table_.generator(l.gen));
    return;
  }
  // s^-1 = Delta^-1 (w0 s), and x Delta^-1 = Delta^-1 tau(x).
  nf.delta_power -= 1;
  for (Element& x : nf.factors) x = tau(x);
  append_simple(nf, table_.right_mul_gen(delta_, l.gen));
}

NormalForm GarsideStructure::normal_form(const Word& w) const {
  if (w.size() > kMaxWordLength)
    throw Error("word longer than " + std::to_string(kMaxWordLength) + " letters");
  NormalForm nf;
  for (const Letter& l : w) multiply_right(nf, l);
  return nf;
}

Word GarsideStructure::simple_word(Element x) const {
  Word out;
  for (std::size_t k : table_.word(x)) out.push_back({k, 1});
  return out;
}

Word GarsideStructure::to_word(const NormalForm& nf) const {
  const Word d = delta_word();
  const Word d_inv = inverse(d);
  Word out;
  for (long i = 0; i < std::abs(nf.delta_power); ++i)
    out = concat(out, nf.delta_power > 0 ? d : d_inv);
  for (Element x : nf.factors) out = concat(out, simple_word(x));
  return out;
}

bool GarsideStructure::equal(const Word& u, const Word& v) const {
  return normal_form(u) == normal_form(v);
}

NormalForm normal_form(const LabeledGraph& g, const Word& w) {
  return GarsideStructure(g).normal_form(w);
}

bool equal(const LabeledGraph& g, const Word& u, const Word& v) {
  return GarsideStructure(g).equal(u, v);
}

Word delta_word_Dn(std::size_t n) {
  if (n < 4) throw Error("D_n needs n >= 4");
  // 0-based: t1 = 0, ..., t(n-2) = n-3, t(n-1) = n-2, tn = n-1.
  Word out;
  for (std::size_t i = 0; i + 3 <= n; ++i) {
    for (std::size_t j = i; j <= n - 3; ++j) out.push_back({j, 1});
    out.push_back({n - 2, 1});
    out.push_back({n - 1, 1});
    for (std::size_t j = n - 3 + 1; j-- > i;) out.push_back({j, 1});
  }
  out.push_back({n - 2, 1});
  out.push_back({n - 1, 1});
  return out;
}

Word apply_automorphism(const LabeledGraph& g, const WordAutomorphism& kind,
                        const Word& w) {
  if (const auto* sigma = std::get_if<GraphAutomorphism>(&kind)) {
    if (!is_label_preserving(g, *sigma))
      throw InvalidAutomorphism("permutation is not label-preserving");
    Word out;
    out.reserve(w.size());
    for (const Letter& l : w) out.push_back({sigma->image.at(l.gen), l.exp});
    return out;
  }
  Word out;
  out.reserve(w.size());
  for (const Letter& l : w) out.push_back({l.gen, -l.exp});
  return out;
}

GraphAutomorphism fork_swap_Dn(std::size_t n) {
  if (n < 4) throw Error("D_n needs n >= 4");
  GraphAutomorphism s;
  for (std::size_t i = 0; i < n; ++i) s.image.push_back(i);
  std::swap(s.image[n - 2], s.image[n - 1]);
  return s;
}

bool equal_mod_center(const GarsideStructure& gs, const Word& u, const Word& v) {
  const auto type = spherical_type(gs.graph());
  if (!type || type->size() != 1 || type->front().front() != 'D')
    throw Error("equal_mod_center needs a graph of type D_n");
  const std::size_t n = std::stoul(type->front().substr(1));
  const NormalForm nf = gs.normal_form(concat(u, inverse(v)));
  if (!nf.factors.empty()) return false;
  return n % 2 == 0 || nf.delta_power % 2 == 0;
}

bool equal_mod_center(const LabeledGraph& g, const Word& u, const Word& v) {
  return equal_mod_center(GarsideStructure(g), u, v);
}

}  // namespace artin
