#include <doctest.h>

#include <random>

#include "artin/catalog.hpp"
#include "artin/errors.hpp"
#include "artin/json_io.hpp"
#include "test_util.hpp"

using namespace artin;

TEST_CASE("graph json round trip") {
  std::mt19937 rng(2);
  for (int trial = 0; trial < 200; ++trial) {
    const auto conv = trial % 2 ? Convention::Coxeter : Convention::Presentation;
    const LabeledGraph g = testutil::random_graph(rng, 1 + trial % 7, 0.5, {2, 3, 4, 5}, conv);
    const Json j = to_json(g);
    CHECK(graph_from_json(Json::parse(j.dump())) == g);
    CHECK(j["convention"] == std::string(to_string(conv)));
  }
  for (const auto& path : testutil::corpus_files()) {
    const LabeledGraph g = parse_graph(testutil::slurp(path));
    CHECK(graph_from_json(to_json(g)) == g);
  }
  CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"vertices": ["a"], "edges": 3})")), Error);
  CHECK_THROWS_AS(
      graph_from_json(Json::parse(R"({"convention": "presentation", "vertices": ["a", "b"],
                                      "edges": [{"u": "a", "v": "c", "m": 3}]})")),
      Error);
}

TEST_CASE("graph json edges are sorted by endpoint names") {
  // Infinite labels are not edges under the presentation convention.
  const LabeledGraph g = parse_graph("vertices z b a; edge z b 3; edge z a inf; edge b a 4");
  const Json j = to_json(g);
  CHECK(j["vertices"] == Json::array({"z", "b", "a"}));
  CHECK(j["edges"].dump() ==
        R"([{"u":"a","v":"b","m":4},{"u":"b","v":"z","m":3}])");
}

TEST_CASE("verdict json fields") {
  const LabeledGraph g = testutil::octahedron(4);
  const Json j = to_json(g, verdict(g));
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"status", "rule_id", "hypothesis_trace", "citation",
                                         "witness", "budget_exhausted"});
  CHECK(j["status"] == "R_INFINITY_ESTABLISHED");
  CHECK(j["rule_id"] == "R7");
  CHECK(j["witness"]["leaf"] == false);
  for (const auto& e : j["hypothesis_trace"]) {
    CHECK(e.contains("predicate"));
    CHECK(e.contains("value"));
  }
  const Json u = to_json(testutil::cycle(6, 2), verdict(testutil::cycle(6, 2)));
  CHECK(u["witness"].is_null());
  CHECK(u["citation"] == "");
}

TEST_CASE("classification json uses null for undefined values") {
  const Json j = to_json(classify(testutil::cycle(5, 2)));
  CHECK(j["is_hyperbolic_type"].is_null());
  CHECK(j["spherical_type"].is_null());
  const Json k = to_json(classify(catalog::type_D(5)));
  CHECK(k["spherical_type"] == Json::array({"D5"}));
}

TEST_CASE("link json") {
  const LinkBall ball = build_link_ball(3, 2);
  const Json j = to_json(ball, girth_lower_bound(ball));
  CHECK(j["girth"] == 12);
  CHECK(j["exact"] == true);
  CHECK(j["element_vertices"].get<std::size_t>() == ball.element_count());
  CHECK(j["witness"].size() == 12);
  CHECK(j["no_loop_warning"] == false);
}

TEST_CASE("normal form json") {
  const GarsideStructure gs(catalog::type_A(3));
  const Json j = to_json(gs, gs.normal_form(gs.delta_word()));
  CHECK(j["delta"] == 1);
  CHECK(j["factors"].empty());
}
