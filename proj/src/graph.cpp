#include "artin/graph.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <sstream>

#include "artin/errors.hpp"

namespace artin {

Label Label::finite(int m) {
  if (m < 2) throw Error("label must be >= 2, got " + std::to_string(m));
  return Label(m);
}

int Label::value() const {
  if (is_infinite()) throw Error("infinite label has no integer value");
  return m_;
}

std::string Label::to_string() const {
  return is_infinite() ? "inf" : std::to_string(m_);
}

std::string_view to_string(Convention c) {
  return c == Convention::Presentation ? "presentation" : "coxeter";
}

LabeledGraph::LabeledGraph(std::vector<std::string> vertices,
                           Convention convention)
    : names_(std::move(vertices)), convention_(convention) {
  const std::size_t n = names_.size();
  if (n > 64) throw Error("at most 64 vertices are supported");
  std::vector<std::string> sorted = names_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw Error("duplicate vertex name");
  // Absent pairs: infinity for presentation graphs, 2 for Coxeter graphs.
  const int absent = convention == Convention::Presentation ? 0 : 2;
  m_.assign(n * n, absent);
  for (std::size_t i = 0; i < n; ++i) m_[i * n + i] = 1;
}

std::optional<std::size_t> LabeledGraph::index_of(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

std::size_t LabeledGraph::require_index(std::string_view name) const {
  auto i = index_of(name);
  if (!i) throw UnknownVertex(std::string(name));
  return *i;
}

Label LabeledGraph::label(std::size_t i, std::size_t j) const {
  if (i == j) throw Error("diagonal entries carry no label");
  const int m = entry(i, j);
  return m == 0 ? Label::infinity() : Label::finite(m);
}

void LabeledGraph::set_label(std::size_t i, std::size_t j, Label m) {
  if (i == j) throw Error("cannot label a vertex with itself");
  const int raw = m.is_infinite() ? 0 : m.value();
  m_[i * size() + j] = raw;
  m_[j * size() + i] = raw;
}

bool LabeledGraph::is_edge(std::size_t i, std::size_t j) const {
  if (i == j) return false;
  const int m = entry(i, j);
  return convention_ == Convention::Presentation ? m != 0 : m != 2;
}

std::vector<Edge> LabeledGraph::edges() const {
  std::vector<Edge> out;
  for (std::size_t u = 0; u < size(); ++u)
    for (std::size_t v = u + 1; v < size(); ++v)
      if (is_edge(u, v)) out.push_back({u, v, label(u, v)});
  return out;
}

bool GraphAutomorphism::is_identity() const {
  for (std::size_t i = 0; i < image.size(); ++i)
    if (image[i] != i) return false;
  return true;
}

GraphAutomorphism GraphAutomorphism::compose(
    const GraphAutomorphism& inner) const {
  GraphAutomorphism out;
  out.image.resize(image.size());
  for (std::size_t i = 0; i < image.size(); ++i)
    out.image[i] = image[inner.image[i]];
  return out;
}

GraphAutomorphism GraphAutomorphism::inverse() const {
  GraphAutomorphism out;
  out.image.resize(image.size());
  for (std::size_t i = 0; i < image.size(); ++i) out.image[image[i]] = i;
  return out;
}

// ---------------------------------------------------------------------------
// DSL

namespace {

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

bool is_name_char(char c) {
  return !(c == ' ' || c == '\t' || c == '\r' || c == '#' || c == ';');
}

// Split one physical line into ';'-separated directives of tokens.
std::vector<std::vector<Token>> split_line(std::string_view line) {
  std::vector<std::vector<Token>> directives(1);
  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    if (c == '#') break;
    if (c == ';') {
      directives.emplace_back();
      ++i;
      continue;
    }
    if (!is_name_char(c)) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < line.size() && is_name_char(line[j])) ++j;
    directives.back().push_back({std::string(line.substr(i, j - i)), i + 1});
    i = j;
  }
  std::erase_if(directives, [](const auto& d) { return d.empty(); });
  return directives;
}

Label parse_label(const Token& tok, std::size_t line) {
  if (tok.text == "inf") return Label::infinity();
  int value = 0;
  const char* first = tok.text.data();
  const char* last = first + tok.text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last)
    throw ParseError(line, tok.column,
                     "expected integer label or 'inf', got '" + tok.text + "'");
  if (value < 2)
    throw ParseError(line, tok.column,
                     "label must be >= 2, got " + std::to_string(value));
  return Label::finite(value);
}

}  // namespace

LabeledGraph parse_graph(std::string_view text) {
  std::optional<Convention> convention;
  std::vector<std::string> vertices;
  struct PendingEdge {
    std::string u, v;
    Label label;
    std::size_t line, column_u, column_v, column_label;
  };
  std::vector<PendingEdge> pending;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    for (const auto& d : split_line(text.substr(start, end - start))) {
      const std::string& keyword = d[0].text;
      if (keyword == "convention") {
        if (d.size() != 2)
          throw ParseError(line_no, d[0].column,
                           "'convention' takes exactly one argument");
        Convention c;
        if (d[1].text == "presentation") {
          c = Convention::Presentation;
        } else if (d[1].text == "coxeter") {
          c = Convention::Coxeter;
        } else {
          throw ParseError(line_no, d[1].column,
                           "unknown convention '" + d[1].text + "'");
        }
        if (convention && *convention != c)
          throw ParseError(line_no, d[0].column, "conflicting conventions");
        if (!pending.empty())
          throw ParseError(line_no, d[0].column,
                           "'convention' must precede all edges");
        convention = c;
      } else if (keyword == "vertices") {
        if (d.size() < 2)
          throw ParseError(line_no, d[0].column,
                           "'vertices' needs at least one name");
        for (std::size_t k = 1; k < d.size(); ++k) {
          if (std::find(vertices.begin(), vertices.end(), d[k].text) !=
              vertices.end())
            throw ParseError(line_no, d[k].column,
                             "duplicate vertex '" + d[k].text + "'");
          vertices.push_back(d[k].text);
        }
      } else if (keyword == "edge") {
        if (d.size() != 4)
          throw ParseError(line_no, d[0].column,
                           "'edge' takes two vertices and a label");
        pending.push_back({d[1].text, d[2].text, parse_label(d[3], line_no),
                           line_no, d[1].column, d[2].column, d[3].column});
      } else {
        throw ParseError(line_no, d[0].column,
                         "unknown directive '" + keyword + "'");
      }
    }
    start = end + 1;
  }

  if (vertices.empty()) throw ParseError(line_no, 1, "no vertices declared");
  if (vertices.size() > 64)
    throw ParseError(line_no, 1, "at most 64 vertices are supported");

  LabeledGraph g(std::move(vertices),
                 convention.value_or(Convention::Presentation));
  std::map<std::pair<std::size_t, std::size_t>, Label> seen;
  for (const auto& e : pending) {
    auto u = g.index_of(e.u);
    if (!u) throw ParseError(e.line, e.column_u, "unknown vertex '" + e.u + "'");
    auto v = g.index_of(e.v);
    if (!v) throw ParseError(e.line, e.column_v, "unknown vertex '" + e.v + "'");
    if (*u == *v)
      throw ParseError(e.line, e.column_v, "self-loop on '" + e.u + "'");
    auto key = std::minmax(*u, *v);
    auto [it, inserted] = seen.emplace(key, e.label);
    if (!inserted && !(it->second == e.label))
      throw ParseError(e.line, e.column_label,
                       "conflicting labels for edge " + e.u + " " + e.v);
    g.set_label(*u, *v, e.label);
  }
  return g;
}

std::string serialize_graph(const LabeledGraph& g) {
  std::ostringstream out;
  out << "convention " << to_string(g.convention()) << '\n';
  out << "vertices";
  for (const auto& v : g.vertices()) out << ' ' << v;
  out << '\n';
  for (const auto& e : g.edges())
    out << "edge " << g.name(e.u) << ' ' << g.name(e.v) << ' '
        << e.label.to_string() << '\n';
  return out.str();
}

LabeledGraph convert(const LabeledGraph& g, Convention target) {
  LabeledGraph out(g.vertices(), target);
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j)
      out.set_label(i, j, g.label(i, j));
  return out;
}

LabeledGraph induced_subgraph(const LabeledGraph& g,
                              std::span<const std::size_t> vs) {
  std::vector<bool> keep(g.size(), false);
  for (std::size_t v : vs) {
    if (v >= g.size()) throw Error("vertex index out of range");
    keep[v] = true;
  }
  std::vector<std::size_t> idx;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (keep[i]) {
      idx.push_back(i);
      names.push_back(g.name(i));
    }
  LabeledGraph out(std::move(names), g.convention());
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = a + 1; b < idx.size(); ++b)
      out.set_label(a, b, g.label(idx[a], idx[b]));
  return out;
}

LabeledGraph induced_subgraph(const LabeledGraph& g,
                              std::span<const std::string> vs) {
  std::vector<std::size_t> idx;
  idx.reserve(vs.size());
  for (const auto& name : vs) idx.push_back(g.require_index(name));
  return induced_subgraph(g, std::span<const std::size_t>(idx));
}

bool is_label_preserving(const LabeledGraph& g, const GraphAutomorphism& s) {
  const std::size_t n = g.size();
  if (s.image.size() != n) return false;
  std::vector<bool> hit(n, false);
  for (std::size_t x : s.image) {
    if (x >= n || hit[x]) return false;
    hit[x] = true;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (g.entry(i, j) != g.entry(s.image[i], s.image[j])) return false;
  return true;
}

namespace {

class AutomorphismSearch {
 public:
  explicit AutomorphismSearch(const LabeledGraph& g)
      : g_(g), n_(g.size()), image_(n_), used_(n_, false), signature_(n_) {
    // Sorted row of the Coxeter matrix: a vertex can only map to a vertex
    // with the same multiset of labels.
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j)
        if (i != j) signature_[i].push_back(g.entry(i, j));
      std::sort(signature_[i].begin(), signature_[i].end());
    }
  }

  std::vector<GraphAutomorphism> run() {
    extend(0);
    return std::move(found_);
  }

 private:
  void extend(std::size_t i) {
    if (i == n_) {
      found_.push_back({image_});
      return;
    }
    for (std::size_t c = 0; c < n_; ++c) {
      if (used_[c] || signature_[c] != signature_[i]) continue;
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j)
        ok = g_.entry(i, j) == g_.entry(c, image_[j]);
      if (!ok) continue;
      used_[c] = true;
      image_[i] = c;
      extend(i + 1);
      used_[c] = false;
    }
  }

  const LabeledGraph& g_;
  std::size_t n_;
  std::vector<std::size_t> image_;
  std::vector<bool> used_;
  std::vector<std::vector<int>> signature_;
  std::vector<GraphAutomorphism> found_;
};

}  // namespace

std::vector<GraphAutomorphism> graph_automorphisms(const LabeledGraph& g) {
  return AutomorphismSearch(g).run();
}

LabeledGraph permute_vertices(const LabeledGraph& g,
                              const GraphAutomorphism& perm) {
  const std::size_t n = g.size();
  std::vector<std::string> names(n);
  for (std::size_t i = 0; i < n; ++i) names[perm.image[i]] = g.name(i);
  LabeledGraph out(std::move(names), g.convention());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      out.set_label(perm.image[i], perm.image[j], g.label(i, j));
  return out;
}

GraphAutomorphism parse_cycles(const LabeledGraph& g, std::string_view text) {
  GraphAutomorphism s;
  s.image.resize(g.size());
  std::iota(s.image.begin(), s.image.end(), 0);
  std::vector<bool> moved(g.size(), false);

  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == ',')) ++i;
  };
  skip();
  while (i < text.size()) {
    if (text[i] != '(') throw Error("cycle text: expected '('");
    ++i;
    std::vector<std::size_t> cycle;
    while (true) {
      while (i < text.size() && text[i] == ' ') ++i;
      if (i >= text.size()) throw Error("cycle text: missing ')'");
      if (text[i] == ')') {
        ++i;
        break;
      }
      std::size_t j = i;
      while (j < text.size() && text[j] != ' ' && text[j] != ')' &&
             text[j] != ',')
        ++j;
      const std::size_t v = g.require_index(text.substr(i, j - i));
      if (moved[v]) throw Error("cycle text: vertex appears twice");
      moved[v] = true;
      cycle.push_back(v);
      i = j;
      while (i < text.size() && text[i] == ',') ++i;
    }
    for (std::size_t k = 0; k < cycle.size(); ++k)
      s.image[cycle[k]] = cycle[(k + 1) % cycle.size()];
    skip();
  }
  return s;
}

std::string format_cycles(const LabeledGraph& g, const GraphAutomorphism& s) {
  std::string out;
  std::vector<bool> seen(s.image.size(), false);
  for (std::size_t i = 0; i < s.image.size(); ++i) {
    if (seen[i] || s.image[i] == i) continue;
    out += '(';
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) out += ' ';
      out += g.name(j);
      first = false;
      j = s.image[j];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

VertexMask full_mask(const LabeledGraph& g) {
  return g.size() == 64 ? ~VertexMask{0} : (VertexMask{1} << g.size()) - 1;
}

std::vector<VertexMask> components(const LabeledGraph& g, VertexMask within) {
  std::vector<VertexMask> out;
  VertexMask left = within;
  while (left) {
    const std::size_t seed = static_cast<std::size_t>(__builtin_ctzll(left));
    VertexMask comp = VertexMask{1} << seed;
    VertexMask frontier = comp;
    while (frontier) {
      const std::size_t v = static_cast<std::size_t>(__builtin_ctzll(frontier));
      frontier &= frontier - 1;
      for (std::size_t w = 0; w < g.size(); ++w) {
        const VertexMask bit = VertexMask{1} << w;
        if ((within & bit) && !(comp & bit) && g.adjacent(v, w)) {
          comp |= bit;
          frontier |= bit;
        }
      }
    }
    out.push_back(comp);
    left &= ~comp;
  }
  return out;
}

bool is_connected(const LabeledGraph& g) {
  return g.size() > 0 && components(g, full_mask(g)).size() == 1;
}

std::vector<std::size_t> mask_to_indices(VertexMask mask) {
  std::vector<std::size_t> out;
  while (mask) {
    out.push_back(static_cast<std::size_t>(__builtin_ctzll(mask)));
    mask &= mask - 1;
  }
  return out;
}

VertexMask indices_to_mask(std::span<const std::size_t> indices) {
  VertexMask m = 0;
  for (std::size_t i : indices) m |= VertexMask{1} << i;
  return m;
}

}  // namespace artin
