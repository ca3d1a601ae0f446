#include "arcring/cli.hpp"

#include <chrono>
#include <functional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "arcring/braid_homotopy.hpp"
#include "arcring/cache.hpp"
#include "arcring/center.hpp"
#include "arcring/presentations.hpp"
#include "arcring/verify.hpp"

namespace arcring {

using nlohmann::json;

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Settings {
  int n = 0;
  std::string format = "json";
  std::string cache_dir;
  std::uint64_t seed = 1;
  bool timing = false;

  bool arrows = false;
  bool order = false;
  bool graph = false;
  bool basis = false;
  int i = 0;

  bool all = false;
  bool ring = false;
  bool center = false;
  bool springer = false;
  bool iso = false;
  bool homotopy = false;
  bool symmetric = false;
};

struct Outcome {
  json parameters = json::object();
  json results = json::object();
  bool passed = true;
};

void require_n(int n, int lo, int hi) {
  if (n < lo || n > hi)
    throw UsageError("--n must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
}

std::filesystem::path cache_dir(const Settings& s) {
  return s.cache_dir.empty() ? cache_dir_from_env() : std::filesystem::path(s.cache_dir);
}

ArcRing load_ring(const Settings& s, std::ostream& err) {
  CacheLoad load = load_or_build(s.n, cache_dir(s));
  if (!load.warning.empty()) err << "warning: " << load.warning << "\n";
  return std::move(load.ring);
}

json pairs_json(const Matching& m) {
  json out = json::array();
  for (auto [i, j] : m.pairs()) out.push_back({i, j});
  return out;
}

Outcome cmd_matchings(const Settings& s, std::ostream& err) {
  require_n(s.n, 0, 7);
  Outcome o;
  o.parameters = {{"n", s.n}, {"arrows", s.arrows}, {"order", s.order}, {"graph", s.graph}};
  if (s.n == 0) err << "warning: n = 0 has only the empty matching\n";
  const MatchingSet set(s.n);
  json list = json::array();
  for (int a = 0; a < set.size(); ++a)
    list.push_back({{"index", a},
                    {"pairs", pairs_json(set[a])},
                    {"string", set[a].to_string()},
                    {"bottom_arcs", bottom_arc_count(set[a])}});
  o.results["n"] = s.n;
  o.results["count"] = set.size();
  o.results["matchings"] = std::move(list);
  if (s.arrows) {
    json arrows = json::array();
    for (auto [a, b] : set.arrows()) arrows.push_back({a, b});
    o.results["arrows"] = std::move(arrows);
  }
  if (s.order) o.results["order"] = set.total_order();
  if (s.graph) {
    json graphs = json::array();
    for (int a = 0; a < set.size(); ++a) {
      const MatchingGraph g = matching_graph(set[a]);
      json vertices = json::array();
      for (auto [i, j] : g.vertices) vertices.push_back({i, j});
      json edges = json::array();
      for (auto [u, v] : g.edges) edges.push_back({u, v});
      graphs.push_back({{"index", a},
                        {"vertices", vertices},
                        {"edges", edges},
                        {"marks", g.marks},
                        {"components", g.component_count()}});
    }
    o.results["graphs"] = std::move(graphs);
  }
  return o;
}

Outcome cmd_ring(const Settings& s, std::ostream& err) {
  require_n(s.n, 1, ArcRing::kMaxN);
  Outcome o;
  o.parameters = {{"n", s.n}, {"basis", s.basis}};
  const ArcRing ring = load_ring(s, err);
  std::map<int, std::size_t> graded;
  for (const auto& v : ring.basis()) ++graded[ring.degree(v)];
  json rows = json::array();
  for (auto [d, k] : graded) rows.push_back({{"degree", d}, {"dimension", k}});
  const std::size_t expected = expected_dimension(ring.matchings());
  o.results = {{"n", s.n},
               {"matchings", ring.matchings().size()},
               {"order", ring.order()},
               {"dimension", ring.dimension()},
               {"expected_dimension", expected},
               {"graded_dimensions", rows}};
  o.passed = ring.dimension() == expected;
  if (s.basis) {
    json basis = json::array();
    for (std::size_t t = 0; t < ring.dimension(); ++t) {
      const auto& v = ring.basis()[t];
      basis.push_back({{"index", t},
                       {"row", ring.matching(v.row).to_string()},
                       {"col", ring.matching(v.col).to_string()},
                       {"labels", ring.label_word(v)},
                       {"degree", ring.degree(v)}});
    }
    o.results["basis"] = std::move(basis);
  }
  return o;
}

Outcome cmd_center(const Settings& s, std::ostream& err) {
  require_n(s.n, 1, ArcRing::kMaxN);
  Outcome o;
  o.parameters = {{"n", s.n}, {"basis", s.basis}};
  const ArcRing ring = load_ring(s, err);
  const CenterBasis cb = center_basis(ring);
  json rows = json::array();
  for (std::size_t d = 0; d < cb.graded_ranks.size(); ++d)
    rows.push_back({{"degree", 2 * d}, {"rank", cb.graded_ranks[d]}});
  o.results = {{"n", s.n}, {"rank", cb.rank()}, {"graded_ranks", rows}};
  o.passed = cb.rank() == binomial(2 * s.n, s.n);
  if (s.basis) {
    json elements = json::array();
    for (std::size_t e = 0; e < cb.rank(); ++e) {
      json terms = json::array();
      for (const auto& [v, c] : cb.elements[e].terms())
        terms.push_back({{"matching", ring.matching(v.row).to_string()},
                         {"labels", ring.label_word(v)},
                         {"coeff", c}});
      elements.push_back({{"degree", 2 * cb.label_degree[e]}, {"terms", terms}});
    }
    o.results["basis"] = std::move(elements);
  }
  return o;
}

Outcome cmd_ideal(const Settings& s, std::ostream&) {
  require_n(s.n, 1, 6);
  Outcome o;
  o.parameters = {{"n", s.n}};
  const GradedIdealSpan r1 = ideal_R1(s.n);
  const GradedIdealSpan r2 = ideal_R2(s.n);
  const QuotientRanks q1 = quotient_graded_ranks(r1);
  const QuotientRanks q2 = quotient_graded_ranks(r2);
  const auto admissible = admissible_counts_by_degree(s.n);
  const bool equal = lattice_equal(r1, r2);
  json rows = json::array();
  for (int d = 0; d <= 2 * s.n; ++d)
    rows.push_back({{"degree", 2 * d},
                    {"R1", q1.ranks[d]},
                    {"R2", q2.ranks[d]},
                    {"admissible", admissible[d]}});
  o.results = {{"n", s.n},
               {"betti", rows},
               {"total_rank", q1.total()},
               {"R1_torsion_free", q1.torsion_free()},
               {"R2_torsion_free", q2.torsion_free()},
               {"ideals_equal", equal}};
  o.passed = equal && q1.torsion_free() && q1.ranks == admissible;
  return o;
}

Outcome cmd_homotopy(const Settings& s, std::ostream& err) {
  require_n(s.n, 1, 4);
  if (s.i != 0 && (s.i < 1 || s.i >= 2 * s.n)) throw UsageError("--i must lie in [1, 2n-1]");
  Outcome o;
  o.parameters = {{"n", s.n}, {"i", s.i}};
  const ArcRing ring = load_ring(s, err);
  json rows = json::array();
  for (int i = 1; i < 2 * s.n; ++i) {
    if (s.i != 0 && i != s.i) continue;
    const HomotopyReport r = verify_null_homotopy(ring, i);
    for (const auto& c : r.checks) {
      json row = {{"i", i},
                  {"endomorphism", c.name},
                  {"chain_map", c.chain_map},
                  {"sign", c.sign},
                  {"checked_vectors", c.checked_vectors}};
      if (!c.counterexample.empty()) row["counterexample"] = c.counterexample;
      rows.push_back(std::move(row));
    }
    o.passed = o.passed && r.passed();
  }
  o.results = {{"n", s.n}, {"checks", rows}};
  return o;
}

Outcome cmd_verify(const Settings& s, std::ostream& err) {
  require_n(s.n, 1, ArcRing::kMaxN);
  Settings sel = s;
  if (sel.all || !(sel.ring || sel.center || sel.springer || sel.iso || sel.homotopy || sel.symmetric))
    sel.ring = sel.center = sel.springer = sel.iso = sel.homotopy = sel.symmetric = true;
  Outcome o;
  json suites = json::array();
  const std::vector<std::pair<std::string, bool>> chosen = {
      {"ring", sel.ring},  {"center", sel.center},     {"springer", sel.springer},
      {"iso", sel.iso},    {"homotopy", sel.homotopy}, {"symmetric", sel.symmetric}};
  for (const auto& [name, on] : chosen)
    if (on) suites.push_back(name);
  o.parameters = {{"n", s.n}, {"seed", s.seed}, {"suites", suites}};

  const ArcRing ring = load_ring(s, err);
  VerifyOptions options;
  options.seed = s.seed;
  json results = json::object();
  auto record = [&](const std::string& name, const std::vector<CheckResult>& checks) {
    json list = json::array();
    for (const auto& c : checks)
      list.push_back({{"check", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    results[name] = std::move(list);
    o.passed = o.passed && all_passed(checks);
  };
  if (sel.ring) record("ring", verify_ring(ring, options));
  if (sel.center) record("center", verify_center(ring));
  if (sel.springer) record("springer", verify_springer(s.n));
  if (sel.iso) record("iso", verify_iso(ring));
  if (sel.homotopy) record("homotopy", verify_homotopy(ring));
  if (sel.symmetric) record("symmetric", verify_symmetric(ring, options));
  o.results = {{"n", s.n}, {"suites", results}};
  return o;
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_cell(const json& v) {
  return csv_quote(v.is_string() ? v.get<std::string>() : v.dump());
}

void write_csv(const std::string& command, const json& r, std::ostream& out) {
  auto table = [&](const json& rows, const std::vector<std::string>& columns) {
    for (std::size_t c = 0; c < columns.size(); ++c) out << (c ? "," : "") << columns[c];
    out << "\n";
    for (const auto& row : rows) {
      for (std::size_t c = 0; c < columns.size(); ++c)
        out << (c ? "," : "") << (row.contains(columns[c]) ? csv_cell(row[columns[c]]) : "");
      out << "\n";
    }
  };
  if (command == "matchings") {
    table(r["matchings"], {"index", "string", "bottom_arcs"});
    if (r.contains("arrows")) {
      out << "\nfrom,to\n";
      for (const auto& a : r["arrows"]) out << a[0] << "," << a[1] << "\n";
    }
    if (r.contains("order")) {
      out << "\nposition,index\n";
      for (std::size_t p = 0; p < r["order"].size(); ++p) out << p << "," << r["order"][p] << "\n";
    }
    if (r.contains("graphs")) {
      out << "\n";
      table(r["graphs"], {"index", "vertices", "edges", "marks", "components"});
    }
  } else if (command == "ring") {
    table(r["graded_dimensions"], {"degree", "dimension"});
    if (r.contains("basis")) {
      out << "\n";
      table(r["basis"], {"index", "row", "col", "labels", "degree"});
    }
  } else if (command == "center") {
    table(r["graded_ranks"], {"degree", "rank"});
  } else if (command == "ideal") {
    table(r["betti"], {"degree", "R1", "R2", "admissible"});
  } else if (command == "homotopy") {
    table(r["checks"], {"i", "endomorphism", "chain_map", "sign", "checked_vectors"});
  } else if (command == "verify") {
    out << "suite,check,passed\n";
    for (const auto& [suite, checks] : r["suites"].items())
      for (const auto& c : checks)
        out << suite << "," << csv_cell(c["check"]) << "," << c["passed"] << "\n";
  }
}

void write_text(const json& v, const std::string& prefix, std::ostream& out) {
  if (v.is_object()) {
    for (const auto& [k, x] : v.items()) write_text(x, prefix.empty() ? k : prefix + "." + k, out);
  } else if (v.is_array() && std::any_of(v.begin(), v.end(), [](const json& x) {
               return x.is_object();
             })) {
    for (std::size_t t = 0; t < v.size(); ++t)
      write_text(v[t], prefix + "[" + std::to_string(t) + "]", out);
  } else {
    out << prefix << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Settings s;
  CLI::App app{"Arc rings of crossingless matchings: construction and verification"};
  app.name(args.empty() ? "arcring" : args[0]);
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.add_option("--format", s.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--cache-dir", s.cache_dir, "Ring cache directory (env ARCRING_CACHE_DIR)");
  app.add_option("--seed", s.seed, "Seed for randomized sampling");
  app.add_flag("--timing", s.timing, "Include wall-clock duration in the report");

  auto sub = [&](const std::string& name, const std::string& help) {
    CLI::App* c = app.add_subcommand(name, help);
    c->add_option("--n", s.n, "Number of arcs")->required();
    return c;
  };
  CLI::App* matchings = sub("matchings", "List crossingless matchings of 2n points");
  matchings->add_flag("--arrows", s.arrows, "Include the arrow relation");
  matchings->add_flag("--order", s.order, "Include the default total order");
  matchings->add_flag("--graph", s.graph, "Include the arc graph of each matching");
  CLI::App* ring = sub("ring", "Build the arc ring");
  ring->add_flag("--basis", s.basis, "Dump the basis");
  CLI::App* center = sub("center", "Compute the center");
  center->add_flag("--basis", s.basis, "Dump the center basis");
  sub("ideal", "Quotient ranks of the two presentations");
  CLI::App* homotopy = sub("homotopy", "Null-homotopy checks for U_i");
  homotopy->add_option("--i", s.i, "Only this i");
  CLI::App* verify = sub("verify", "Run verification suites");
  verify->add_flag("--all", s.all, "Every suite (default)");
  verify->add_flag("--ring", s.ring, "Ring integrity");
  verify->add_flag("--center", s.center, "Center rank and centrality");
  verify->add_flag("--springer", s.springer, "Presentations of the Springer cohomology");
  verify->add_flag("--iso", s.iso, "Presentation isomorphism onto the center");
  verify->add_flag("--homotopy", s.homotopy, "Null-homotopies");
  verify->add_flag("--symmetric", s.symmetric, "Symmetric group action");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const std::map<std::string, std::function<Outcome(const Settings&, std::ostream&)>> commands = {
      {"matchings", cmd_matchings}, {"ring", cmd_ring},         {"center", cmd_center},
      {"ideal", cmd_ideal},         {"homotopy", cmd_homotopy}, {"verify", cmd_verify}};
  const std::string command = app.get_subcommands().front()->get_name();

  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = commands.at(command)(s, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailed;
  }
  const auto stop = std::chrono::steady_clock::now();

  json report = {{"schema", kReportSchema},
                 {"command", command},
                 {"parameters", o.parameters},
                 {"results", o.results},
                 {"passed", o.passed}};
  if (s.timing)
    report["duration_ms"] = std::chrono::duration<double, std::milli>(stop - start).count();

  if (s.format == "json") {
    out << report.dump(2) << "\n";
  } else if (s.format == "csv") {
    write_csv(command, o.results, out);
  } else {
    write_text(report, "", out);
  }
  return o.passed ? kExitOk : kExitFailed;
}

}  // namespace arcring
