#pragma once

#include <string>

#include <json.hpp>

#include "artin/classify.hpp"
#include "artin/deligne_link.hpp"
#include "artin/garside.hpp"
#include "artin/graph.hpp"
#include "artin/group_table.hpp"
#include "artin/hierarchy.hpp"
#include "artin/torus.hpp"
#include "artin/verdict.hpp"

namespace artin {

using Json = nlohmann::ordered_json;

/// {"convention", "vertices", "edges": [{"u", "v", "m"}]}; m is an integer
/// or "inf". Only the edges of the graph's own convention are listed.
Json to_json(const LabeledGraph& g);
/// Throws artin::Error on malformed input.
LabeledGraph graph_from_json(const Json& j);

Json to_json(const ClassificationReport& r);
/// Vertex names come from the ambient graph.
Json to_json(const LabeledGraph& g, const HierarchyTree& t);
Json to_json(const LabeledGraph& g, const Decomposition& d);
/// {"size", "gens"}; the table itself goes to a sidecar via write_table_text.
Json to_json(const GroupTable& t);
/// One row of the multiplication table per line.
std::string table_text(const GroupTable& t);
/// {"delta": k, "factors": [[generator names of each simple]]}.
Json to_json(const GarsideStructure& gs, const NormalForm& nf);
/// {"gens": [...], "relators": [[tokens]]}.
Json to_json(const Presentation& p);
Json to_json(const LabeledGraph& g, const Verdict& v);
Json to_json(const LinkBall& ball, const GirthReport& girth);

}  // namespace artin
