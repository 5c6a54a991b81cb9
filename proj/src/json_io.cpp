#include "artin/json_io.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "artin/errors.hpp"

namespace artin {

namespace {

Json names_of(const LabeledGraph& g, VertexMask mask) {
  Json out = Json::array();
  for (std::size_t i : mask_to_indices(mask)) out.push_back(g.name(i));
  return out;
}

Json optional_types(const std::optional<std::vector<std::string>>& t) {
  if (!t) return nullptr;
  return Json(*t);
}

}  // namespace

Json to_json(const LabeledGraph& g) {
  // Each edge is written with its endpoint names in order; edges sorted by name pair.
  std::vector<std::tuple<std::string, std::string, Label>> sorted;
  for (const Edge& e : g.edges()) {
    auto [a, b] = std::minmax(g.name(e.u), g.name(e.v));
    sorted.emplace_back(a, b, e.label);
  }
  std::sort(sorted.begin(), sorted.end(), [](const auto& x, const auto& y) {
    return std::tie(std::get<0>(x), std::get<1>(x)) < std::tie(std::get<0>(y), std::get<1>(y));
  });
  Json edges = Json::array();
  for (const auto& [u, v, label] : sorted) {
    Json m = label.is_infinite() ? Json("inf") : Json(label.value());
    edges.push_back({{"u", u}, {"v", v}, {"m", m}});
  }
  return {{"convention", std::string(to_string(g.convention()))},
          {"vertices", g.vertices()},
          {"edges", edges}};
}

LabeledGraph graph_from_json(const Json& j) {
  try {
    const std::string conv = j.at("convention").get<std::string>();
    Convention c;
    if (conv == "presentation") {
      c = Convention::Presentation;
    } else if (conv == "coxeter") {
      c = Convention::Coxeter;
    } else {
      throw Error("unknown convention '" + conv + "'");
    }
    LabeledGraph g(j.at("vertices").get<std::vector<std::string>>(), c);
    for (const auto& e : j.at("edges")) {
      const auto u = g.require_index(e.at("u").get<std::string>());
      const auto v = g.require_index(e.at("v").get<std::string>());
      const auto& m = e.at("m");
      g.set_label(u, v, m.is_string() && m.get<std::string>() == "inf"
                            ? Label::infinity()
                            : Label::finite(m.get<int>()));
    }
    return g;
  } catch (const Json::exception& ex) {
    throw Error(std::string("malformed graph JSON: ") + ex.what());
  }
}

Json to_json(const ClassificationReport& r) {
  Json hyper = r.is_hyperbolic_type ? Json(*r.is_hyperbolic_type) : Json(nullptr);
  return {{"vertex_count", r.vertex_count},
          {"is_large", r.is_large},
          {"is_free_of_infinity", r.is_free_of_infinity},
          {"is_xxxl", r.is_xxxl},
          {"is_hyperbolic_type", hyper},
          {"spherical_type", optional_types(r.spherical_type)},
          {"is_twistless", r.is_twistless},
          {"is_twistless_star", r.is_twistless_star}};
}

Json to_json(const LabeledGraph& g, const Decomposition& d) {
  return {{"part1", names_of(g, d.part1)},
          {"part2", names_of(g, d.part2)},
          {"intersection", names_of(g, d.intersection)}};
}

Json to_json(const LabeledGraph& g, const HierarchyTree& t) {
  Json out{{"graph", names_of(g, t.graph)}, {"leaf", t.leaf()}};
  if (!t.leaf()) {
    const Json d = to_json(g, *t.decomposition);
    out["decomposition"] = {{"part1", d["part1"]}, {"part2", d["part2"]}};
  }
  Json children = Json::array();
  for (const auto& c : t.children) children.push_back(to_json(g, c));
  out["children"] = children;
  return out;
}

Json to_json(const GroupTable& t) {
  Json gens = Json::array();
  for (std::size_t k = 0; k < t.generator_count(); ++k)
    gens.push_back({{"name", t.generator_names()[k]}, {"element", t.generator(k)}});
  return {{"size", t.size()}, {"gens", gens}};
}

std::string table_text(const GroupTable& t) {
  std::ostringstream out;
  for (std::size_t x = 0; x < t.size(); ++x) {
    for (std::size_t y = 0; y < t.size(); ++y)
      out << (y ? " " : "")
          << t.multiply(static_cast<Element>(x), static_cast<Element>(y));
    out << '\n';
  }
  return out.str();
}

Json to_json(const GarsideStructure& gs, const NormalForm& nf) {
  Json factors = Json::array();
  for (Element x : nf.factors) factors.push_back(word_tokens(gs.simple_word(x), gs.graph().vertices()));
  return {{"delta", nf.delta_power}, {"factors", factors}};
}

Json to_json(const Presentation& p) {
  Json rels = Json::array();
  for (const Word& r : p.relators) rels.push_back(word_tokens(r, p.generators));
  return {{"gens", p.generators}, {"relators", rels}};
}

Json to_json(const LabeledGraph& g, const Verdict& v) {
  Json trace = Json::array();
  for (const auto& e : v.hypothesis_trace)
    trace.push_back({{"predicate", e.predicate}, {"value", e.value}});
  return {{"status", to_string(v.status)},
          {"rule_id", v.rule_id},
          {"hypothesis_trace", trace},
          {"citation", v.citation},
          {"witness", v.witness ? to_json(g, *v.witness) : Json(nullptr)},
          {"budget_exhausted", v.budget_exhausted}};
}

Json to_json(const LinkBall& ball, const GirthReport& girth) {
  Json witness = Json::array();
  for (std::size_t v : girth.witness) witness.push_back(vertex_label(ball, v));
  std::size_t boundary = 0;
  for (const auto& v : ball.vertices) boundary += v.boundary;
  return {{"m", ball.m},
          {"cap", ball.cap},
          {"element_vertices", ball.element_count()},
          {"coset_vertices", ball.vertices.size() - ball.element_count()},
          {"boundary_vertices", boundary},
          {"edges", ball.edges.size()},
          {"girth", girth.girth ? Json(*girth.girth) : Json(nullptr)},
          {"exact", girth.exact},
          {"witness", witness},
          {"no_loop_warning", ball.no_loop_warning}};
}

}  // namespace artin
