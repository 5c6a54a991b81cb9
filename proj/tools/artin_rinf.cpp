// artin-rinf: command-line front end.
//
// Exit status: 0 success, 1 input error, 2 search budget exhausted.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "artin/classify.hpp"
#include "artin/deligne_link.hpp"
#include "artin/errors.hpp"
#include "artin/garside.hpp"
#include "artin/graph.hpp"
#include "artin/group_table.hpp"
#include "artin/hierarchy.hpp"
#include "artin/identities.hpp"
#include "artin/json_io.hpp"
#include "artin/reidemeister.hpp"
#include "artin/verdict.hpp"

namespace fs = std::filesystem;
using namespace artin;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitBudget = 2;

struct Options {
  std::string format = "text";
  std::string file;
  std::size_t budget = 0;  // 0: default or environment
  bool connected_parts = false;
  std::string aut;
  bool all_auts = false;
  std::string word;
  std::size_t dn = 0;
  int m = 0;
  std::size_t cap = 2;
  std::string edges_out;
  std::string dir;
  std::size_t jobs = 1;
  bool timings = false;
};

bool json_mode(const Options& o) { return o.format == "json"; }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

LabeledGraph load_graph(const std::string& path) { return parse_graph(read_file(path)); }

std::size_t resolve_budget(const Options& o) {
  if (o.budget > 0) return o.budget;
  if (const char* env = std::getenv("ARTIN_RINF_BUDGET")) {
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(env, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos == 0 || env[pos] != '\0' || v == 0)
      throw Error("ARTIN_RINF_BUDGET must be a positive integer");
    return static_cast<std::size_t>(v);
  }
  return kDefaultHierarchyBudget;
}

std::string join(const std::vector<std::string>& xs, const char* sep) {
  std::string out;
  for (const auto& x : xs) out += (out.empty() ? "" : sep) + x;
  return out;
}

std::string mask_names(const LabeledGraph& g, VertexMask mask) {
  std::vector<std::string> names;
  for (std::size_t i : mask_to_indices(mask)) names.push_back(g.name(i));
  return "{" + join(names, " ") + "}";
}

void print_tree(std::ostream& out, const LabeledGraph& g, const HierarchyTree& t,
                int indent) {
  out << std::string(static_cast<std::size_t>(indent) * 2, ' ') << mask_names(g, t.graph)
      << (t.leaf() ? " twistless star" : "") << '\n';
  for (const auto& c : t.children) print_tree(out, g, c, indent + 1);
}

void print_classification(std::ostream& out, const ClassificationReport& r) {
  auto b = [](bool x) { return x ? "true" : "false"; };
  out << "vertex_count = " << r.vertex_count << '\n'
      << "is_large = " << b(r.is_large) << '\n'
      << "is_free_of_infinity = " << b(r.is_free_of_infinity) << '\n'
      << "is_xxxl = " << b(r.is_xxxl) << '\n'
      << "is_hyperbolic_type = "
      << (r.is_hyperbolic_type ? b(*r.is_hyperbolic_type) : "undefined") << '\n'
      << "spherical_type = "
      << (r.spherical_type ? "[" + join(*r.spherical_type, ", ") + "]" : "none") << '\n'
      << "is_twistless = " << b(r.is_twistless) << '\n'
      << "is_twistless_star = " << b(r.is_twistless_star) << '\n';
}

void print_verdict(std::ostream& out, const LabeledGraph& g, const Verdict& v) {
  out << "status = " << to_string(v.status) << '\n';
  if (!v.rule_id.empty()) out << "rule = " << v.rule_id << '\n';
  if (!v.citation.empty()) out << "citation = " << v.citation << '\n';
  for (const auto& e : v.hypothesis_trace)
    out << "trace " << e.predicate << " = " << e.value << '\n';
  if (v.budget_exhausted) out << "note = hierarchy search budget exhausted\n";
  if (v.witness) {
    out << "witness:\n";
    print_tree(out, g, *v.witness, 1);
  }
}

int cmd_classify(const Options& o) {
  const LabeledGraph g = load_graph(o.file);
  const ClassificationReport r = classify(g);
  if (json_mode(o)) {
    std::cout << to_json(r).dump(2) << '\n';
  } else {
    print_classification(std::cout, r);
  }
  return kExitOk;
}

int cmd_verdict(const Options& o) {
  const LabeledGraph g = load_graph(o.file);
  const Verdict v = verdict(g, resolve_budget(o));
  if (json_mode(o)) {
    std::cout << to_json(g, v).dump(2) << '\n';
  } else {
    print_verdict(std::cout, g, v);
  }
  return v.budget_exhausted && v.status == VerdictStatus::Unknown ? kExitBudget : kExitOk;
}

int cmd_hierarchy(const Options& o) {
  const LabeledGraph g = load_graph(o.file);
  DecompositionOptions opts;
  opts.connected_parts = o.connected_parts;
  const HierarchyResult r = find_twistless_hierarchy(g, resolve_budget(o), opts);
  if (json_mode(o)) {
    Json j{{"status", to_string(r.status)}, {"explored", r.explored}};
    j["tree"] = r.tree ? to_json(g, *r.tree) : Json(nullptr);
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "status = " << to_string(r.status) << '\n'
              << "explored = " << r.explored << '\n';
    if (r.tree) print_tree(std::cout, g, *r.tree, 0);
  }
  return r.status == HierarchyStatus::Exhausted ? kExitBudget : kExitOk;
}

int cmd_reidemeister(const Options& o) {
  const LabeledGraph g = load_graph(o.file);
  const GroupTable t = enumerate_group(g);
  std::vector<GraphAutomorphism> sigmas;
  if (o.all_auts) {
    sigmas = graph_automorphisms(g);
  } else if (!o.aut.empty()) {
    sigmas.push_back(parse_cycles(g, o.aut));
    if (!is_label_preserving(g, sigmas.back()))
      throw InvalidAutomorphism("'" + o.aut + "' is not label-preserving");
  } else {
    sigmas.push_back(GraphAutomorphism{});
    for (std::size_t i = 0; i < g.size(); ++i) sigmas.back().image.push_back(i);
  }

  Json rows = Json::array();
  for (const auto& s : sigmas) {
    const GroupAutomorphism phi = induced_automorphism(t, s);
    const std::size_t r = reidemeister_number(t, phi);
    const std::size_t c = reidemeister_via_coset(t, phi);
    rows.push_back({{"aut", format_cycles(g, s)},
                    {"order", phi.order()},
                    {"reidemeister", r},
                    {"via_coset", c},
                    {"agree", r == c}});
  }
  if (json_mode(o)) {
    std::cout << Json{{"group", to_json(t)}, {"automorphisms", rows}}.dump(2) << '\n';
  } else {
    std::cout << "group order = " << t.size() << '\n';
    for (const auto& row : rows)
      std::cout << "aut " << row["aut"].get<std::string>() << ": R = "
                << row["reidemeister"] << ", via coset = " << row["via_coset"]
                << (row["agree"].get<bool>() ? "" : "  MISMATCH") << '\n';
  }
  return kExitOk;
}

int cmd_garside_nf(const Options& o) {
  const LabeledGraph g = load_graph(o.file);
  const GarsideStructure gs(g);
  const NormalForm nf = gs.normal_form(parse_word(o.word, g.vertices()));
  if (json_mode(o)) {
    std::cout << to_json(gs, nf).dump(2) << '\n';
  } else {
    std::cout << "delta = " << nf.delta_power << '\n';
    for (Element x : nf.factors)
      std::cout << "factor " << format_word(gs.simple_word(x), g.vertices()) << '\n';
  }
  return kExitOk;
}

int cmd_garside_check(const Options& o) {
  const auto checks = check_dn_identities(o.dn);
  const bool all = std::all_of(checks.begin(), checks.end(),
                               [](const IdentityCheck& c) { return c.passed; });
  if (json_mode(o)) {
    Json rows = Json::array();
    for (const auto& c : checks) rows.push_back({{"identity", c.name}, {"passed", c.passed}});
    std::cout << Json{{"n", o.dn}, {"checks", rows}, {"all_passed", all}}.dump(2) << '\n';
  } else {
    for (const auto& c : checks)
      std::cout << (c.passed ? "PASS " : "FAIL ") << c.name << '\n';
  }
  return all ? kExitOk : kExitInput;
}

int cmd_link_girth(const Options& o) {
  const LinkBall ball = build_link_ball(o.m, o.cap);
  const GirthReport r = girth_lower_bound(ball);
  if (!o.edges_out.empty()) {
    std::ofstream out(o.edges_out);
    if (!out) throw Error("cannot write '" + o.edges_out + "'");
    out << edge_list_text(ball);
  }
  if (json_mode(o)) {
    std::cout << to_json(ball, r).dump(2) << '\n';
    return kExitOk;
  }
  if (!r.girth) {
    std::cout << "girth = none (no loop in ball)\n";
    return kExitOk;
  }
  std::cout << "girth = " << *r.girth << (r.exact ? " (exact)" : " (lower bound)") << '\n';
  std::cout << "witness:";
  for (std::size_t v : r.witness) std::cout << "\n  " << vertex_label(ball, v);
  std::cout << '\n';
  return kExitOk;
}

struct BatchRecord {
  std::string input;
  Json json;
  std::string text;
  std::string status;  // verdict status or "ERROR"
  bool exhausted = false;
  double seconds = 0;
};

BatchRecord run_record(const fs::path& path, std::size_t budget) {
  BatchRecord rec;
  rec.input = path.filename().string();
  const auto start = std::chrono::steady_clock::now();
  try {
    const LabeledGraph g = load_graph(path.string());
    const ClassificationReport c = classify(g);
    const Verdict v = verdict(g, budget);
    rec.status = to_string(v.status);
    rec.exhausted = v.budget_exhausted;
    rec.json = {{"input", rec.input},
                {"classification", to_json(c)},
                {"verdict", to_json(g, v)}};
    rec.text = rec.input + ": " + rec.status + (v.rule_id.empty() ? "" : " " + v.rule_id) +
               (v.budget_exhausted ? " (budget exhausted)" : "");
  } catch (const Error& e) {
    rec.status = "ERROR";
    rec.json = {{"input", rec.input}, {"error", e.what()}};
    rec.text = rec.input + ": ERROR " + e.what();
  }
  rec.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

int cmd_batch(const Options& o) {
  if (!fs::is_directory(o.dir)) throw Error("'" + o.dir + "' is not a directory");
  std::vector<fs::path> inputs;
  for (const auto& entry : fs::directory_iterator(o.dir))
    if (entry.is_regular_file()) inputs.push_back(entry.path());
  std::sort(inputs.begin(), inputs.end(), [](const fs::path& a, const fs::path& b) {
    return a.filename().string() < b.filename().string();
  });

  const std::size_t budget = resolve_budget(o);
  std::vector<BatchRecord> records(inputs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < inputs.size();)
      records[i] = run_record(inputs[i], budget);
  };
  const std::size_t jobs = std::max<std::size_t>(1, std::min(o.jobs, inputs.size()));
  std::vector<std::thread> pool;
  for (std::size_t k = 1; k < jobs; ++k) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::map<std::string, std::size_t> summary{
      {"R_INFINITY_ESTABLISHED", 0}, {"CONJECTURED", 0}, {"UNKNOWN", 0}, {"ERROR", 0}};
  bool any_error = false, any_exhausted = false;
  for (const auto& r : records) {
    ++summary[r.status];
    any_error = any_error || r.status == "ERROR";
    any_exhausted = any_exhausted || r.exhausted;
  }

  if (json_mode(o)) {
    Json recs = Json::array();
    for (const auto& r : records) {
      Json j = r.json;
      if (o.timings) j["seconds"] = r.seconds;
      recs.push_back(std::move(j));
    }
    Json sum = Json::object();
    for (const auto& [k, v] : summary) sum[k] = v;
    std::cout << Json{{"records", recs}, {"count", records.size()}, {"summary", sum}}.dump(2)
              << '\n';
  } else {
    for (const auto& r : records) {
      std::cout << r.text;
      if (o.timings) std::cout << " [" << r.seconds << " s]";
      std::cout << '\n';
    }
    std::cout << "count = " << records.size() << '\n';
    for (const auto& [k, v] : summary) std::cout << k << " = " << v << '\n';
  }
  if (any_error) return kExitInput;
  return any_exhausted ? kExitBudget : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Property R-infinity toolkit for Artin groups"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();

  auto* classify_cmd = app.add_subcommand("classify", "Classification predicates");
  classify_cmd->add_option("file", o.file, "Graph file")->required();

  auto* verdict_cmd = app.add_subcommand("verdict", "R-infinity verdict");
  verdict_cmd->add_option("file", o.file, "Graph file")->required();
  verdict_cmd->add_option("--budget", o.budget, "Hierarchy search budget")
      ->check(CLI::PositiveNumber);

  auto* hierarchy_cmd = app.add_subcommand("hierarchy", "Twistless hierarchy search");
  hierarchy_cmd->add_option("file", o.file, "Graph file")->required();
  hierarchy_cmd->add_option("--budget", o.budget, "Subgraphs to explore")
      ->check(CLI::PositiveNumber);
  hierarchy_cmd->add_flag("--connected-parts", o.connected_parts,
                          "Only use decompositions with connected parts");

  auto* reid_cmd = app.add_subcommand("reidemeister", "Reidemeister numbers in W");
  reid_cmd->add_option("file", o.file, "Graph file")->required();
  auto* aut_opt = reid_cmd->add_option("--aut", o.aut, "Graph automorphism, e.g. \"(t5 t6)\"");
  auto* all_opt = reid_cmd->add_flag("--all-graph-auts", o.all_auts,
                                     "Every label-preserving graph automorphism");
  aut_opt->excludes(all_opt);

  auto* garside_cmd = app.add_subcommand("garside", "Garside normal forms");
  garside_cmd->require_subcommand(1);
  auto* nf_cmd = garside_cmd->add_subcommand("nf", "Normal form of a word");
  nf_cmd->add_option("file", o.file, "Graph file")->required();
  nf_cmd->add_option("word", o.word, "Word such as \"t1 t2^-1\"")->required();
  auto* check_cmd = garside_cmd->add_subcommand("check-d", "Identity suite for A[D_n]");
  check_cmd->add_option("n", o.dn, "Rank")->required()->check(CLI::Range(4, 8));

  auto* link_cmd = app.add_subcommand("link-girth", "Girth of a dihedral link ball");
  link_cmd->add_option("--m", o.m, "Edge label")->required()->check(CLI::Range(3, 1000));
  link_cmd->add_option("--cap", o.cap, "Ball radius")->capture_default_str();
  link_cmd->add_option("--edges", o.edges_out, "Write the edge list to this file");

  auto* batch_cmd = app.add_subcommand("batch", "Verdicts for every file in a directory");
  batch_cmd->add_option("dir", o.dir, "Input directory")->required();
  batch_cmd->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
  batch_cmd->add_option("--budget", o.budget, "Hierarchy search budget")
      ->check(CLI::PositiveNumber);
  batch_cmd->add_flag("--timings", o.timings, "Report time per record");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << app.help();
    return kExitInput;
  }

  try {
    if (*classify_cmd) return cmd_classify(o);
    if (*verdict_cmd) return cmd_verdict(o);
    if (*hierarchy_cmd) return cmd_hierarchy(o);
    if (*reid_cmd) return cmd_reidemeister(o);
    if (*nf_cmd) return cmd_garside_nf(o);
    if (*check_cmd) return cmd_garside_check(o);
    if (*link_cmd) return cmd_link_girth(o);
    if (*batch_cmd) return cmd_batch(o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}
