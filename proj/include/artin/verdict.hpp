#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "artin/graph.hpp"
#include "artin/hierarchy.hpp"

namespace artin {

enum class VerdictStatus { Established, Conjectured, Unknown };

/// "R_INFINITY_ESTABLISHED", "CONJECTURED", "UNKNOWN".
const char* to_string(VerdictStatus s);

struct TraceEntry {
  std::string predicate;
  std::string value;

  friend bool operator==(const TraceEntry&, const TraceEntry&) = default;
};

struct Verdict {
  VerdictStatus status = VerdictStatus::Unknown;
  /// "R1".."R8"; empty for UNKNOWN.
  std::string rule_id;
  /// Every predicate evaluated, in evaluation order, each once.
  std::vector<TraceEntry> hypothesis_trace;
  /// Empty for UNKNOWN.
  std::string citation;
  /// Set by R7 only; always validated.
  std::optional<HierarchyTree> witness;
  /// The hierarchy search ran out of budget (the verdict is then not final).
  bool budget_exhausted = false;
};

/// Predicate names that may appear in a trace.
std::vector<std::string> verdict_predicates();

/// Value of one trace predicate, as the verdict engine records it.
/// Throws artin::Error for an unknown predicate name.
std::string evaluate_predicate(const LabeledGraph& g, const std::string& predicate,
                               std::size_t budget = kDefaultHierarchyBudget);

/// Rules R1..R8 in priority order; the first that fires wins.
Verdict verdict(const LabeledGraph& g, std::size_t budget = kDefaultHierarchyBudget);

}  // namespace artin
