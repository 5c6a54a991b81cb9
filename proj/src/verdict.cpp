#include "artin/verdict.hpp"

#include <functional>
#include <map>

#include "artin/classify.hpp"
#include "artin/errors.hpp"

namespace artin {

const char* to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::Established:
      return "R_INFINITY_ESTABLISHED";
    case VerdictStatus::Conjectured:
      return "CONJECTURED";
    case VerdictStatus::Unknown:
      return "UNKNOWN";
  }
  return "UNKNOWN";
}

namespace {

std::string bool_text(bool b) { return b ? "true" : "false"; }

std::string spherical_text(const LabeledGraph& g) {
  const auto type = spherical_type(g);
  if (!type) return "none";
  std::string out;
  for (const auto& t : *type) out += (out.empty() ? "" : ",") + t;
  return out.empty() ? "none" : out;
}

// Family letter and rank of a single irreducible component, e.g. "D6".
std::optional<std::pair<char, std::size_t>> single_family(const std::string& type) {
  if (type.empty() || type == "none" || type.find(',') != std::string::npos)
    return std::nullopt;
  if (type.rfind("I2(", 0) == 0)
    return std::pair{'I', std::stoul(type.substr(3, type.size() - 4))};
  return std::pair{type[0], std::stoul(type.substr(1))};
}

}  // namespace

std::vector<std::string> verdict_predicates() {
  return {"spherical_type", "vertex_count",        "dihedral_label",
          "is_large",       "is_hyperbolic_type",  "is_free_of_infinity",
          "is_xxxl",        "is_twistless",        "is_connected",
          "twistless_hierarchy"};
}

std::string evaluate_predicate(const LabeledGraph& g, const std::string& predicate,
                               std::size_t budget) {
  if (predicate == "spherical_type") return spherical_text(g);
  if (predicate == "vertex_count") return std::to_string(g.size());
  if (predicate == "dihedral_label") {
    if (g.size() != 2) return "none";
    return g.label(0, 1).to_string();
  }
  if (predicate == "is_large") return bool_text(is_large(g));
  if (predicate == "is_hyperbolic_type") {
    const auto h = is_hyperbolic_type(g);
    return h ? bool_text(*h) : "undefined";
  }
  if (predicate == "is_free_of_infinity") return bool_text(is_free_of_infinity(g));
  if (predicate == "is_xxxl") return bool_text(is_xxxl(g));
  if (predicate == "is_twistless") return bool_text(is_twistless(g));
  if (predicate == "is_connected") return bool_text(is_connected(g));
  if (predicate == "twistless_hierarchy")
    return to_string(find_twistless_hierarchy(g, budget).status);
  throw Error("unknown predicate '" + predicate + "'");
}

Verdict verdict(const LabeledGraph& g, std::size_t budget) {
  Verdict v;
  std::map<std::string, std::string> cache;
  std::optional<HierarchyResult> hierarchy;
  auto eval = [&](const std::string& name) -> const std::string& {
    if (auto it = cache.find(name); it != cache.end()) return it->second;
    std::string value;
    if (name == "twistless_hierarchy") {
      hierarchy = find_twistless_hierarchy(g, budget);
      value = to_string(hierarchy->status);
    } else {
      value = evaluate_predicate(g, name, budget);
    }
    v.hypothesis_trace.push_back({name, value});
    return cache.emplace(name, std::move(value)).first->second;
  };
  auto fire = [&](VerdictStatus status, std::string rule, std::string citation) {
    v.status = status;
    v.rule_id = std::move(rule);
    v.citation = std::move(citation);
    return v;
  };

  const auto family = single_family(eval("spherical_type"));
  if (family && family->first == 'D') {
    if (family->second >= 6)
      return fire(VerdictStatus::Established, "R1", "Theorem 1.1 [CasPar1]");
    if (family->second == 4) return fire(VerdictStatus::Established, "R2", "[CalSor1]");
    if (family->second == 5) return fire(VerdictStatus::Conjectured, "R3", "Conjecture 1");
  }

  const std::size_t n = g.size();
  eval("vertex_count");
  if (n == 2) {
    const Label m = g.label(0, 1);
    eval("dihedral_label");
    if (m.is_finite() && m.value() >= 3)
      return fire(VerdictStatus::Established, "R4", "[CalSor1, Theorem 1]");
  }

  if (n >= 3) {
    const bool large = eval("is_large") == "true";
    const bool hyperbolic = large && eval("is_hyperbolic_type") == "true";
    if (large && hyperbolic && eval("is_free_of_infinity") == "true")
      return fire(VerdictStatus::Established, "R5", "Corollary 4.6 [Vasko2]");
    if (eval("is_xxxl") == "true" && eval("is_twistless") == "true")
      return fire(VerdictStatus::Established, "R6", "Corollary 4.9 [BlMaVa1]");
    if (large && hyperbolic && eval("is_connected") == "true") {
      eval("twistless_hierarchy");
      if (hierarchy->status == HierarchyStatus::Exhausted) v.budget_exhausted = true;
      if (hierarchy->status == HierarchyStatus::Found &&
          validate_hierarchy(g, *hierarchy->tree)) {
        v.witness = hierarchy->tree;
        return fire(VerdictStatus::Established, "R7", "Corollary 4.11 [HuOsVa1]");
      }
    }
  }

  if (family) {
    const auto [letter, rank] = *family;
    if (letter == 'A' && rank >= 3)
      return fire(VerdictStatus::Established, "R8", "[FeGoDa1]");
    if (letter == 'B' && rank >= 3)
      return fire(VerdictStatus::Established, "R8", "[CalSor1]");
    if (letter == 'I' && rank >= 5)
      return fire(VerdictStatus::Established, "R8", "[CalSor1]");
  }
  return v;
}

}  // namespace artin
