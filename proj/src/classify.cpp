#include "artin/classify.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "artin/catalog.hpp"
#include "artin/errors.hpp"

namespace artin {

namespace {

template <typename Pred>
bool all_pairs(const LabeledGraph& g, Pred pred) {
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j)
      if (!pred(g.entry(i, j))) return false;
  return true;
}

// Coxeter-graph adjacency: m >= 3 or infinity.
bool coxeter_adjacent(const LabeledGraph& g, std::size_t i, std::size_t j) {
  return i != j && g.entry(i, j) != 2;
}

std::vector<std::vector<std::size_t>> coxeter_components(
    const LabeledGraph& g) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> seen(g.size(), false);
  for (std::size_t s = 0; s < g.size(); ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> comp{s};
    seen[s] = true;
    for (std::size_t k = 0; k < comp.size(); ++k)
      for (std::size_t w = 0; w < g.size(); ++w)
        if (!seen[w] && coxeter_adjacent(g, comp[k], w)) {
          seen[w] = true;
          comp.push_back(w);
        }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::optional<std::string> irreducible_type(
    const LabeledGraph& g, const std::vector<std::size_t>& comp) {
  const std::size_t k = comp.size();
  if (k == 1) return "A1";

  std::size_t edges = 0;
  std::vector<std::size_t> degree(k, 0);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a + 1; b < k; ++b) {
      const int m = g.entry(comp[a], comp[b]);
      if (m == 2) continue;
      if (m == 0) return std::nullopt;  // infinite dihedral subgroup
      ++edges;
      ++degree[a];
      ++degree[b];
    }
  if (k == 2) return "I2(" + std::to_string(g.entry(comp[0], comp[1])) + ")";
  if (edges != k - 1) return std::nullopt;  // contains a cycle

  const auto max_deg = *std::max_element(degree.begin(), degree.end());
  if (max_deg > 3) return std::nullopt;
  const auto n = std::to_string(k);

  if (max_deg <= 2) {
    // Walk the path from one end.
    std::size_t cur = static_cast<std::size_t>(
        std::find(degree.begin(), degree.end(), 1) - degree.begin());
    std::size_t prev = k;
    std::vector<int> labels;
    for (std::size_t step = 0; step + 1 < k; ++step) {
      for (std::size_t nb = 0; nb < k; ++nb)
        if (nb != prev && nb != cur && g.entry(comp[cur], comp[nb]) != 2) {
          labels.push_back(g.entry(comp[cur], comp[nb]));
          prev = cur;
          cur = nb;
          break;
        }
    }
    const auto threes = std::count(labels.begin(), labels.end(), 3);
    const auto inner_all_three = [&] {
      return std::all_of(labels.begin() + 1, labels.end() - 1,
                         [](int m) { return m == 3; });
    };
    if (threes == static_cast<long>(labels.size())) return "A" + n;
    if (threes + 1 == static_cast<long>(labels.size()) && inner_all_three()) {
      const int odd = labels.front() != 3 ? labels.front() : labels.back();
      if (odd == 4) return "B" + n;
      if (odd == 5 && (k == 3 || k == 4)) return "H" + n;
      return std::nullopt;
    }
    if (labels == std::vector<int>{3, 4, 3}) return "F4";
    return std::nullopt;
  }

  // One branch vertex of degree 3, all labels 3.
  if (std::count(degree.begin(), degree.end(), 3) != 1) return std::nullopt;
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a + 1; b < k; ++b)
      if (g.entry(comp[a], comp[b]) != 2 && g.entry(comp[a], comp[b]) != 3)
        return std::nullopt;
  const std::size_t hub = static_cast<std::size_t>(
      std::find(degree.begin(), degree.end(), 3) - degree.begin());
  std::vector<std::size_t> arms;
  for (std::size_t start = 0; start < k; ++start) {
    if (g.entry(comp[hub], comp[start]) != 3) continue;
    std::size_t len = 1, prev = hub, cur = start;
    while (degree[cur] == 2) {
      for (std::size_t nb = 0; nb < k; ++nb)
        if (nb != prev && nb != cur && g.entry(comp[cur], comp[nb]) == 3) {
          prev = cur;
          cur = nb;
          break;
        }
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return "D" + n;
  if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4)
    return "E" + n;
  return std::nullopt;
}

std::size_t factorial(std::size_t n) {
  std::size_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

bool is_large(const LabeledGraph& g) {
  return all_pairs(g, [](int m) { return m == 0 || m >= 3; });
}

bool is_free_of_infinity(const LabeledGraph& g) {
  return all_pairs(g, [](int m) { return m != 0; });
}

bool is_xxxl(const LabeledGraph& g) {
  return all_pairs(g, [](int m) { return m == 0 || m >= 6; });
}

std::optional<bool> is_hyperbolic_type(const LabeledGraph& g) {
  if (!is_large(g)) return std::nullopt;
  const std::size_t n = g.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      if (g.entry(a, b) != 3) continue;
      for (std::size_t c = b + 1; c < n; ++c)
        if (g.entry(a, c) == 3 && g.entry(b, c) == 3) return false;
    }
  return true;
}

std::optional<std::vector<std::string>> spherical_type(const LabeledGraph& g) {
  std::vector<std::string> out;
  for (const auto& comp : coxeter_components(g)) {
    auto name = irreducible_type(g, comp);
    if (!name) return std::nullopt;
    out.push_back(std::move(*name));
  }
  return out;
}

bool is_twistless(const LabeledGraph& g) {
  if (!is_connected(g)) return false;
  const VertexMask all = full_mask(g);
  for (std::size_t v = 0; v < g.size(); ++v)
    if (components(g, all & ~(VertexMask{1} << v)).size() > 1) return false;
  for (std::size_t s = 0; s < g.size(); ++s)
    for (std::size_t t = s + 1; t < g.size(); ++t) {
      if (!g.adjacent(s, t)) continue;
      const VertexMask rest = all & ~(VertexMask{1} << s) & ~(VertexMask{1} << t);
      if (components(g, rest).size() > 1) return false;
    }
  return true;
}

bool is_twistless_star(const LabeledGraph& g) {
  bool has_center = false;
  for (std::size_t v = 0; v < g.size() && !has_center; ++v) {
    has_center = true;
    for (std::size_t w = 0; w < g.size(); ++w)
      if (w != v && !g.adjacent(v, w)) {
        has_center = false;
        break;
      }
  }
  return has_center && is_twistless(g);
}

ClassificationReport classify(const LabeledGraph& g) {
  ClassificationReport r;
  r.vertex_count = g.size();
  r.is_large = is_large(g);
  r.is_free_of_infinity = is_free_of_infinity(g);
  r.is_xxxl = is_xxxl(g);
  r.is_hyperbolic_type = is_hyperbolic_type(g);
  r.spherical_type = spherical_type(g);
  r.is_twistless = is_twistless(g);
  r.is_twistless_star = is_twistless_star(g);
  return r;
}

std::size_t classical_order(const std::string& type_name) {
  if (type_name.rfind("I2(", 0) == 0)
    return 2 * std::stoul(type_name.substr(3, type_name.size() - 4));
  if (type_name.size() < 2) throw Error("bad type name '" + type_name + "'");
  const char family = type_name[0];
  const std::size_t n = std::stoul(type_name.substr(1));
  switch (family) {
    case 'A':
      return factorial(n + 1);
    case 'B':
      return (std::size_t{1} << n) * factorial(n);
    case 'D':
      return (std::size_t{1} << (n - 1)) * factorial(n);
    case 'E':
      if (n == 6) return 51840;
      if (n == 7) return 2903040;
      if (n == 8) return 696729600;
      break;
    case 'F':
      if (n == 4) return 1152;
      break;
    case 'H':
      if (n == 3) return 120;
      if (n == 4) return 14400;
      break;
    default:
      break;
  }
  throw Error("bad type name '" + type_name + "'");
}

// ---------------------------------------------------------------------------

namespace catalog {

namespace {

LabeledGraph named(std::size_t n) {
  if (n == 0) throw Error("rank must be positive");
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("t" + std::to_string(i));
  return LabeledGraph(std::move(names), Convention::Coxeter);
}

LabeledGraph path(std::size_t n) {
  auto g = named(n);
  for (std::size_t i = 0; i + 1 < n; ++i) g.set_label(i, i + 1, Label::finite(3));
  return g;
}

}  // namespace

LabeledGraph type_A(std::size_t n) { return path(n); }

LabeledGraph type_B(std::size_t n) {
  if (n < 2) throw Error("B_n needs n >= 2");
  auto g = path(n);
  g.set_label(n - 2, n - 1, Label::finite(4));
  return g;
}

LabeledGraph type_D(std::size_t n) {
  if (n < 4) throw Error("D_n needs n >= 4");
  LabeledGraph out = named(n);
  for (std::size_t i = 0; i + 2 < n; ++i) out.set_label(i, i + 1, Label::finite(3));
  out.set_label(n - 3, n - 1, Label::finite(3));
  return out;
}

LabeledGraph type_E(std::size_t n) {
  if (n < 6 || n > 8) throw Error("E_n needs 6 <= n <= 8");
  auto g = named(n);
  for (std::size_t i = 0; i + 2 < n; ++i) g.set_label(i, i + 1, Label::finite(3));
  g.set_label(2, n - 1, Label::finite(3));
  return g;
}

LabeledGraph type_F4() {
  auto g = path(4);
  g.set_label(1, 2, Label::finite(4));
  return g;
}

LabeledGraph type_H(std::size_t n) {
  if (n != 3 && n != 4) throw Error("H_n needs n in {3, 4}");
  auto g = path(n);
  g.set_label(0, 1, Label::finite(5));
  return g;
}

LabeledGraph dihedral(int m) {
  LabeledGraph g({"a", "b"}, Convention::Coxeter);
  g.set_label(0, 1, Label::finite(m));
  return g;
}

}  // namespace catalog

}  // namespace artin
