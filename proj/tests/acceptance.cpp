// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "artin/catalog.hpp"
#include "artin/classify.hpp"
#include "artin/deligne_link.hpp"
#include "artin/errors.hpp"
#include "artin/garside.hpp"
#include "artin/hierarchy.hpp"
#include "artin/identities.hpp"
#include "artin/json_io.hpp"
#include "artin/reidemeister.hpp"
#include "artin/verdict.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace artin;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

std::size_t factorial(std::size_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

Word letter(std::size_t i, int e = 1) { return {{i, e}}; }

Outcome garside_identities() {
  Outcome o;
  for (std::size_t n : {4, 5, 6}) {
    const GarsideStructure gs(catalog::type_D(n));
    const Word d = delta_word_Dn(n), di = inverse(d), d2 = concat(d, d);
    for (std::size_t i = 0; i < n; ++i) {
      const Word ti = letter(i);
      const std::string tag = "n=" + std::to_string(n) + " i=" + std::to_string(i + 1);
      if (n != 5) {
        o.expect(gs.equal(concat(d, ti), concat(ti, d)), "Delta t_i = t_i Delta, " + tag);
        continue;
      }
      const std::size_t image = i == 3 ? 4 : i == 4 ? 3 : i;
      o.expect(gs.equal(concat(concat(d, ti), di), letter(image)),
               "Delta t_i Delta^-1, " + tag);
      o.expect(gs.equal(concat(d2, ti), concat(ti, d2)), "Delta^2 central, " + tag);
    }
  }
  return o;
}

Outcome delta_formula() {
  Outcome o;
  for (std::size_t n : {4, 5, 6}) {
    const Word d = delta_word_Dn(n);
    o.expect(d.size() == n * (n - 1), "length, n=" + std::to_string(n));
    o.expect(normal_form(catalog::type_D(n), d) == NormalForm{1, {}},
             "normal form, n=" + std::to_string(n));
  }
  return o;
}

Outcome automorphism_relations() {
  Outcome o;
  for (std::size_t n : {4, 5, 6}) {
    const LabeledGraph g = catalog::type_D(n);
    const GarsideStructure gs(g);
    const WordAutomorphism zeta = fork_swap_Dn(n), chi = GlobalInversion{};
    const Word d = delta_word_Dn(n), di = inverse(d);
    std::mt19937_64 rng(100 + n);
    for (int k = 0; k < 100; ++k) {
      const Word w = random_word(rng, n, 12);
      const Word zw = apply_automorphism(g, zeta, w), cw = apply_automorphism(g, chi, w);
      const std::string tag = "n=" + std::to_string(n);
      o.expect(gs.equal(apply_automorphism(g, zeta, zw), w), "zeta^2, " + tag);
      o.expect(gs.equal(apply_automorphism(g, chi, cw), w), "chi^2, " + tag);
      o.expect(gs.equal(apply_automorphism(g, chi, zw), apply_automorphism(g, zeta, cw)),
               "zeta chi = chi zeta, " + tag);
      if (n == 5) o.expect(gs.equal(zw, concat(concat(d, w), di)), "zeta inner, " + tag);
    }
  }
  return o;
}

Outcome chi_not_inner() {
  Outcome o;
  std::mt19937_64 rng(7);
  for (std::size_t n : {4, 5, 6}) {
    const LabeledGraph g = catalog::type_D(n);
    for (int k = 0; k < 200; ++k) {
      const Word w = random_word(rng, n, 16), x = random_word(rng, n, 8);
      o.expect(abelianized_sum(apply_automorphism(g, GlobalInversion{}, w)) ==
                   -abelianized_sum(w),
               "xi(chi(w)) = -xi(w)");
      o.expect(abelianized_sum(concat(concat(x, w), inverse(x))) == abelianized_sum(w),
               "xi conjugation invariant");
    }
  }
  return o;
}

Outcome reidemeister_shadow() {
  Outcome o;
  const std::vector<std::pair<std::string, LabeledGraph>> graphs{
      {"A2", catalog::type_A(2)},     {"A3", catalog::type_A(3)},
      {"I2(4)", catalog::dihedral(4)}, {"I2(5)", catalog::dihedral(5)},
      {"I2(7)", catalog::dihedral(7)}, {"D4", catalog::type_D(4)}};
  std::mt19937 rng(42);
  for (const auto& [name, g] : graphs) {
    const GroupTable t = enumerate_group(g);
    std::uniform_int_distribution<Element> pick(0, static_cast<Element>(t.size() - 1));
    for (const auto& sigma : graph_automorphisms(g)) {
      const GroupAutomorphism phi = induced_automorphism(t, sigma);
      const std::size_t r = reidemeister_number(t, phi);
      o.expect(r == reidemeister_via_coset(t, phi), "coset formula, " + name);
      for (int k = 0; k < 20; ++k) {
        const GroupAutomorphism psi = inner_automorphism(t, pick(rng)).compose(phi);
        o.expect(reidemeister_number(t, psi) == r, "inner twist invariance, " + name);
      }
    }
  }
  return o;
}

Outcome group_orders() {
  Outcome o;
  auto check = [&](const std::string& name, const LabeledGraph& g, std::size_t want) {
    const std::size_t got = enumerate_group(g).size();
    o.expect(got == want, name + " order " + std::to_string(got));
    o.expect(oracle::coxeter_order(g) == want, name + " coset enumeration");
  };
  for (std::size_t n = 1; n <= 5; ++n)
    check("A" + std::to_string(n), catalog::type_A(n), factorial(n + 1));
  for (std::size_t n = 2; n <= 4; ++n)
    check("B" + std::to_string(n), catalog::type_B(n), (std::size_t{1} << n) * factorial(n));
  for (std::size_t n = 4; n <= 5; ++n)
    check("D" + std::to_string(n), catalog::type_D(n),
          (std::size_t{1} << (n - 1)) * factorial(n));
  check("H3", catalog::type_H(3), 120);
  check("F4", catalog::type_F4(), 1152);
  for (int m = 2; m <= 12; ++m)
    check("I2(" + std::to_string(m) + ")", catalog::dihedral(m), 2 * static_cast<std::size_t>(m));
  return o;
}

Outcome systole() {
  Outcome o;
  for (int m = 3; m <= 6; ++m) {
    const std::string tag = "m=" + std::to_string(m);
    const LinkBall ball = build_link_ball(m, 2);
    const GirthReport r = girth_lower_bound(ball);
    o.expect(r.girth && *r.girth == static_cast<std::size_t>(4 * m), "girth, " + tag);
    o.expect(r.exact, "exactness, " + tag);
    o.expect(r.girth && oracle::brute_girth(ball.adjacency) == *r.girth,
             "brute-force girth, " + tag);
    bool alternating = r.witness.size() == static_cast<std::size_t>(4 * m);
    for (std::size_t i = 0; alternating && i < r.witness.size(); ++i) {
      const auto& u = ball.vertices[r.witness[i]];
      const auto& v = ball.vertices[r.witness[(i + 1) % r.witness.size()]];
      alternating = (u.kind == LinkVertexKind::Element) != (v.kind == LinkVertexKind::Element);
    }
    o.expect(alternating, "witness alternates, " + tag);
  }
  return o;
}

Outcome classification_corpus() {
  Outcome o;
  const auto golden = testutil::golden();
  const auto files = testutil::corpus_files();
  o.expect(files.size() >= 25, "corpus has fewer than 25 graphs");
  for (const char* required : {"d4.cox", "d5.cox", "d6.cox", "d7.cox", "d8.cox", "tri333.pres",
                               "tri334.pres", "octahedron4.pres", "pentagon3.pres",
                               "pentagon6.pres", "k4_3.pres", "path3.pres"})
    o.expect(std::find_if(files.begin(), files.end(), [&](const auto& p) {
               return p.filename() == required;
             }) != files.end(),
             std::string("missing ") + required);
  for (const auto& path : files) {
    const std::string name = path.filename().string();
    const LabeledGraph g = parse_graph(testutil::slurp(path));
    const auto got = to_json(classify(g));
    for (const char* key : {"is_large", "is_free_of_infinity", "is_xxxl", "is_hyperbolic_type",
                            "spherical_type", "is_twistless", "is_twistless_star"})
      o.expect(golden.contains(name) && got[key].dump() == golden[name][key].dump(),
               name + " " + key);
    o.expect(spherical_type(g).has_value() == is_positive_definite(gram_matrix<double>(g)),
             name + " Gram check");
  }
  return o;
}

Outcome hierarchy() {
  Outcome o;
  const LabeledGraph oct = testutil::corpus_graph("octahedron4.pres");
  const auto r = find_twistless_hierarchy(oct);
  o.expect(r.status == HierarchyStatus::Found && r.tree, "octahedron hierarchy not found");
  if (r.tree) {
    o.expect(validate_hierarchy(oct, *r.tree), "octahedron witness invalid");
    auto star = [&](const std::string& v) {
      VertexMask m = VertexMask{1} << oct.require_index(v);
      for (std::size_t u = 0; u < oct.size(); ++u)
        if (oct.adjacent(oct.require_index(v), u)) m |= VertexMask{1} << u;
      return m;
    };
    auto leaves = r.tree->leaves();
    std::sort(leaves.begin(), leaves.end());
    std::vector<VertexMask> want{star("v1"), star("v2")};
    std::sort(want.begin(), want.end());
    o.expect(leaves == want, "octahedron leaves are not st(v1), st(v2)");
  }
  o.expect(find_twistless_hierarchy(testutil::cycle(5, 3)).status ==
               HierarchyStatus::NoneDefinitive,
           "5-cycle is not definitively without hierarchy");
  const auto k4 = find_twistless_hierarchy(testutil::corpus_graph("k4_3.pres"));
  o.expect(k4.status == HierarchyStatus::Found && k4.tree && k4.tree->leaf(), "K4 is not a leaf");
  std::mt19937 rng(9);
  for (int k = 0; k < 100; ++k) {
    const LabeledGraph g = testutil::random_graph(rng, 4 + k % 4, 0.75, {3, 4});
    const auto h = find_twistless_hierarchy(g);
    o.expect(h.status != HierarchyStatus::Exhausted, "random search exhausted");
    o.expect((h.status == HierarchyStatus::Found) ==
                 oracle::brute_has_hierarchy(g, full_mask(g)),
             "hierarchy existence disagrees with brute force");
    if (h.tree) o.expect(validate_hierarchy(g, *h.tree), "random witness invalid");
  }
  return o;
}

Outcome verdicts() {
  Outcome o;
  const std::vector<std::tuple<std::string, VerdictStatus, std::string>> table{
      {"d6.cox", VerdictStatus::Established, "R1"},
      {"d5.cox", VerdictStatus::Conjectured, "R3"},
      {"tri334.pres", VerdictStatus::Established, "R5"},
      {"pentagon6.pres", VerdictStatus::Established, "R6"},
      {"octahedron4.pres", VerdictStatus::Established, "R7"},
      {"tri333.pres", VerdictStatus::Unknown, ""}};
  for (const auto& [file, status, rule] : table) {
    const LabeledGraph g = testutil::corpus_graph(file);
    const Verdict v = verdict(g);
    o.expect(v.status == status && v.rule_id == rule, file + " verdict");
    o.expect(!v.hypothesis_trace.empty(), file + " empty trace");
    for (const auto& [pred, value] : v.hypothesis_trace)
      o.expect(evaluate_predicate(g, pred) == value, file + " trace " + pred);
  }
  const auto golden = testutil::golden();
  for (const auto& path : testutil::corpus_files()) {
    const std::string name = path.filename().string();
    const Verdict v = verdict(parse_graph(testutil::slurp(path)));
    o.expect(v.rule_id == golden[name]["rule_id"].get<std::string>(), name + " rule");
  }
  return o;
}

Outcome parser() {
  Outcome o;
  for (const auto& path : testutil::corpus_files()) {
    const LabeledGraph g = parse_graph(testutil::slurp(path));
    o.expect(parse_graph(serialize_graph(g)) == g, path.filename().string() + " round trip");
  }
  const std::vector<std::string> pieces{
      "vertices", "edge", "convention", "coxeter", "presentation", "a", "b", "c", "3", "4",
      "inf", "∞", "1", "0", "-2", "x", ";", "\n", "#", " ", "99999999999", "\t", "é", "2",
      "edge a b 3", "vertices a b c\n"};
  std::mt19937_64 rng(31337);
  std::uniform_int_distribution<std::size_t> pick(0, pieces.size() - 1), len(0, 40);
  std::size_t parsed = 0;
  for (int k = 0; k < 10000; ++k) {
    std::string text;
    for (std::size_t i = len(rng); i > 0; --i) text += pieces[pick(rng)] + " ";
    try {
      const LabeledGraph g = parse_graph(text);
      ++parsed;
      o.expect(parse_graph(serialize_graph(g)) == g, "fuzz round trip");
    } catch (const ParseError&) {
    } catch (const std::exception& e) {
      o.expect(false, std::string("unstructured error: ") + e.what());
    }
  }
  o.expect(parsed > 0, "fuzz never produced a valid graph");
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_seconds;  // 0 when no runtime bound applies
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "Garside identity suite for D4, D5, D6", 60, garside_identities},
      {2, "Delta word normal form and length", 0, delta_formula},
      {3, "zeta and chi relations on random words", 0, automorphism_relations},
      {4, "chi negates the abelianization", 0, chi_not_inner},
      {5, "Reidemeister numbers of finite Coxeter groups", 120, reidemeister_shadow},
      {6, "finite Coxeter group orders", 0, group_orders},
      {7, "link ball girth 4m", 60, systole},
      {8, "classification corpus", 0, classification_corpus},
      {9, "twistless hierarchies", 0, hierarchy},
      {10, "verdict rule table", 0, verdicts},
      {11, "parser round trip and fuzz", 0, parser},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && secs >= c.limit_seconds) o.expect(false, "runtime limit");
    std::printf("%s criterion %d: %s (%.2f s)%s%s\n", o.ok ? "PASS" : "FAIL", c.id, c.name,
                secs, o.ok ? "" : ": ", o.detail.c_str());
    if (!o.ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
