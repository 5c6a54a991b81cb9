#include "artin/group_table.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_map>

#include "artin/errors.hpp"

namespace artin {

namespace {

using Key = std::vector<long long>;

struct KeyHash {
  std::size_t operator()(const Key& k) const {
    std::size_t h = 1469598103934665603ull;
    for (long long v : k) {
      h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) +
           (h >> 2);
    }
    return h;
  }
};

Key key_of(const DenseMatrix<double>& m) {
  Key k(static_cast<std::size_t>(m.size()));
  for (Eigen::Index i = 0; i < m.size(); ++i)
    k[static_cast<std::size_t>(i)] = std::llround(m.data()[i] * 1e6);
  return k;
}

}  // namespace

std::optional<std::size_t> GroupTable::generator_index(
    const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

Element GroupTable::multiply(Element x, Element y) const {
  if (!mul_.empty())
    return mul_[static_cast<std::size_t>(x) * size_ + static_cast<std::size_t>(y)];
  for (std::size_t k : word(y)) x = right_mul_gen(x, k);
  return x;
}

std::vector<std::size_t> GroupTable::word(Element x) const {
  std::vector<std::size_t> out;
  while (x != 0) {
    out.push_back(parent_gen_[static_cast<std::size_t>(x)]);
    x = parent_[static_cast<std::size_t>(x)];
  }
  std::reverse(out.begin(), out.end());
  return out;
}

Element GroupTable::evaluate(const std::vector<std::size_t>& w) const {
  Element x = 0;
  for (std::size_t k : w) x = right_mul_gen(x, k);
  return x;
}

void GroupTable::materialize_dense_table() {
  if (!mul_.empty()) return;
  std::vector<Element> mul(size_ * size_);
  for (std::size_t x = 0; x < size_; ++x) {
    Element* row = &mul[x * size_];
    row[0] = static_cast<Element>(x);
    // BFS order guarantees the parent of y is filled in first.
    for (std::size_t i = 1; i < bfs_order_.size(); ++i) {
      const auto y = static_cast<std::size_t>(bfs_order_[i]);
      row[y] = right_mul_gen(row[parent_[y]], parent_gen_[y]);
    }
  }
  mul_ = std::move(mul);
}

// Lengths, words, inverses and left multiplication from the right table.
void GroupTable::finish_from_right_table() {
  const std::size_t ng = gens_.size();
  length_.assign(size_, -1);
  parent_.assign(size_, 0);
  parent_gen_.assign(size_, 0);
  bfs_order_.clear();
  bfs_order_.reserve(size_);
  length_[0] = 0;
  bfs_order_.push_back(0);
  for (std::size_t head = 0; head < bfs_order_.size(); ++head) {
    const Element x = bfs_order_[head];
    for (std::size_t k = 0; k < ng; ++k) {
      const Element y = right_mul_gen(x, k);
      auto& ly = length_[static_cast<std::size_t>(y)];
      if (ly >= 0) continue;
      ly = length_[static_cast<std::size_t>(x)] + 1;
      parent_[static_cast<std::size_t>(y)] = x;
      parent_gen_[static_cast<std::size_t>(y)] = static_cast<std::uint8_t>(k);
      bfs_order_.push_back(y);
    }
  }
  if (bfs_order_.size() != size_)
    throw Error("generators do not generate the group");

  if (left_.empty()) {
    // s * y: follow the word of y starting from s.
    left_.assign(size_ * ng, 0);
    for (std::size_t k = 0; k < ng; ++k) {
      left_[k] = gens_[k];
      for (std::size_t i = 1; i < size_; ++i) {
        const auto y = static_cast<std::size_t>(bfs_order_[i]);
        left_[y * ng + k] = right_mul_gen(
            left_[static_cast<std::size_t>(parent_[y]) * ng + k], parent_gen_[y]);
      }
    }
  }

  if (inv_.empty()) {
    // y = p s  =>  y^-1 = s^-1 p^-1, with s^-1 found by scanning s z = 1.
    std::vector<std::vector<std::size_t>> gen_inv_word(ng);
    for (std::size_t k = 0; k < ng; ++k)
      for (std::size_t z = 0; z < size_; ++z)
        if (left_mul_gen(static_cast<Element>(z), k) == 0) {
          gen_inv_word[k] = word(static_cast<Element>(z));
          break;
        }
    inv_.assign(size_, 0);
    for (std::size_t i = 1; i < size_; ++i) {
      const auto y = static_cast<std::size_t>(bfs_order_[i]);
      const auto& w = gen_inv_word[parent_gen_[y]];
      Element acc = inv_[static_cast<std::size_t>(parent_[y])];
      for (auto it = w.rbegin(); it != w.rend(); ++it) acc = left_mul_gen(acc, *it);
      inv_[y] = acc;
    }
  }
}

GroupTable GroupTable::from_dense(std::size_t size, std::vector<Element> mul,
                                  std::vector<std::string> gen_names,
                                  std::vector<Element> gens) {
  if (mul.size() != size * size) throw Error("multiplication table has wrong size");
  if (gen_names.size() != gens.size()) throw Error("generator name mismatch");
  if (gens.size() > 255) throw Error("too many generators");
  GroupTable t;
  t.size_ = size;
  t.names_ = std::move(gen_names);
  t.gens_ = std::move(gens);
  const std::size_t ng = t.gens_.size();
  t.right_.resize(size * ng);
  t.left_.resize(size * ng);
  for (std::size_t x = 0; x < size; ++x)
    for (std::size_t k = 0; k < ng; ++k) {
      const auto g = static_cast<std::size_t>(t.gens_[k]);
      t.right_[x * ng + k] = mul[x * size + g];
      t.left_[x * ng + k] = mul[g * size + x];
    }
  t.inv_.assign(size, -1);
  for (std::size_t x = 0; x < size; ++x)
    for (std::size_t y = 0; y < size; ++y)
      if (mul[x * size + y] == 0) {
        t.inv_[x] = static_cast<Element>(y);
        break;
      }
  t.mul_ = std::move(mul);
  t.finish_from_right_table();
  return t;
}

GroupTable GroupTable::from_right_table(std::size_t size, std::vector<Element> right,
                                        std::vector<std::string> gen_names,
                                        std::vector<Element> gens) {
  if (right.size() != size * gens.size()) throw Error("generator table has wrong size");
  if (gen_names.size() != gens.size()) throw Error("generator name mismatch");
  if (gens.size() > 255) throw Error("too many generators");
  GroupTable t;
  t.size_ = size;
  t.names_ = std::move(gen_names);
  t.gens_ = std::move(gens);
  t.right_ = std::move(right);
  t.finish_from_right_table();
  return t;
}

GroupTable enumerate_group(const LabeledGraph& g, std::size_t size_bound) {
  if (!spherical_type(g)) throw NotSpherical();
  const auto refl = reflection_generators<double>(g);
  const std::size_t ng = refl.size();
  const auto n = static_cast<Eigen::Index>(ng);

  GroupTable t;
  t.names_ = g.vertices();
  std::vector<DenseMatrix<double>> mats{DenseMatrix<double>::Identity(n, n)};
  std::unordered_map<Key, Element, KeyHash> index{{key_of(mats[0]), 0}};
  auto lookup_or_add = [&](DenseMatrix<double> m) {
    auto [it, inserted] =
        index.emplace(key_of(m), static_cast<Element>(mats.size()));
    if (inserted) {
      if (mats.size() >= size_bound)
        throw SizeBoundExceeded(size_bound, mats.size());
      mats.push_back(std::move(m));
    }
    return it->second;
  };

  for (std::size_t x = 0; x < mats.size(); ++x)
    for (std::size_t k = 0; k < ng; ++k) {
      t.right_.push_back(lookup_or_add(mats[x] * refl[k]));
    }
  t.size_ = mats.size();

  t.left_.resize(t.size_ * ng);
  for (std::size_t x = 0; x < t.size_; ++x)
    for (std::size_t k = 0; k < ng; ++k)
      t.left_[x * ng + k] = index.at(key_of(refl[k] * mats[x]));
  for (std::size_t k = 0; k < ng; ++k) t.gens_.push_back(t.right_mul_gen(0, k));

  t.finish_from_right_table();
  if (t.size_ <= kDenseTableLimit) t.materialize_dense_table();
  return t;
}

Element longest_element(const GroupTable& t) {
  Element best = 0;
  for (std::size_t x = 1; x < t.size(); ++x)
    if (t.length(static_cast<Element>(x)) > t.length(best))
      best = static_cast<Element>(x);
  return best;
}

// ---------------------------------------------------------------------------

bool GroupAutomorphism::is_identity() const {
  for (std::size_t i = 0; i < image.size(); ++i)
    if (image[i] != static_cast<Element>(i)) return false;
  return true;
}

GroupAutomorphism GroupAutomorphism::compose(
    const GroupAutomorphism& inner) const {
  GroupAutomorphism out;
  out.image.resize(image.size());
  for (std::size_t i = 0; i < image.size(); ++i) out.image[i] = (*this)(inner.image[i]);
  return out;
}

GroupAutomorphism GroupAutomorphism::power(std::size_t k) const {
  GroupAutomorphism out;
  out.image.resize(image.size());
  std::iota(out.image.begin(), out.image.end(), Element{0});
  for (std::size_t i = 0; i < k; ++i) out = compose(out);
  return out;
}

std::size_t GroupAutomorphism::order() const {
  std::size_t result = 1;
  std::vector<bool> seen(image.size(), false);
  for (std::size_t i = 0; i < image.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(image[j])) {
      seen[j] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

GroupAutomorphism identity_automorphism(const GroupTable& t) {
  GroupAutomorphism out;
  out.image.resize(t.size());
  std::iota(out.image.begin(), out.image.end(), Element{0});
  return out;
}

GroupAutomorphism inner_automorphism(const GroupTable& t, Element g) {
  GroupAutomorphism out;
  out.image.resize(t.size());
  const Element g_inv = t.inverse(g);
  for (std::size_t x = 0; x < t.size(); ++x)
    out.image[x] = t.multiply(t.multiply(g, static_cast<Element>(x)), g_inv);
  return out;
}

bool is_automorphism(const GroupTable& t, const GroupAutomorphism& phi) {
  if (phi.image.size() != t.size() || phi(0) != 0) return false;
  std::vector<bool> hit(t.size(), false);
  for (Element y : phi.image) {
    if (y < 0 || static_cast<std::size_t>(y) >= t.size() ||
        hit[static_cast<std::size_t>(y)])
      return false;
    hit[static_cast<std::size_t>(y)] = true;
  }
  for (std::size_t k = 0; k < t.generator_count(); ++k) {
    const Element img = phi(t.generator(k));
    for (std::size_t x = 0; x < t.size(); ++x) {
      const auto xe = static_cast<Element>(x);
      if (phi(t.right_mul_gen(xe, k)) != t.multiply(phi(xe), img)) return false;
    }
  }
  return true;
}

namespace {

// Extend generator k -> images[k] along the BFS tree, then check every
// Cayley edge.
GroupAutomorphism extend_on_generators(const GroupTable& t,
                                       const std::vector<Element>& images) {
  GroupAutomorphism phi;
  phi.image.assign(t.size(), -1);
  phi.image[0] = 0;
  std::vector<Element> queue{0};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Element x = queue[head];
    for (std::size_t k = 0; k < t.generator_count(); ++k) {
      const Element y = t.right_mul_gen(x, k);
      auto& slot = phi.image[static_cast<std::size_t>(y)];
      if (slot >= 0) continue;
      slot = t.multiply(phi(x), images[k]);
      queue.push_back(y);
    }
  }
  if (!is_automorphism(t, phi))
    throw InvalidAutomorphism(
        "generator assignment does not extend to an automorphism");
  return phi;
}

}  // namespace

GroupAutomorphism induced_automorphism(const GroupTable& t,
                                       const GraphAutomorphism& sigma) {
  if (sigma.image.size() != t.generator_count())
    throw InvalidAutomorphism("permutation size does not match generator count");
  std::vector<Element> images;
  for (std::size_t k = 0; k < t.generator_count(); ++k) {
    if (sigma.image[k] >= t.generator_count())
      throw InvalidAutomorphism("permutation image out of range");
    images.push_back(t.generator(sigma.image[k]));
  }
  return extend_on_generators(t, images);
}

GroupAutomorphism induced_inversion(const GroupTable& t) {
  std::vector<Element> images;
  for (std::size_t k = 0; k < t.generator_count(); ++k)
    images.push_back(t.inverse(t.generator(k)));
  return extend_on_generators(t, images);
}

}  // namespace artin
