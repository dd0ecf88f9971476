#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "acceptance.hpp"
#include "mcg/canonical.hpp"
#include "mcg/catalog.hpp"
#include "mcg/census.hpp"
#include "mcg/edge_class.hpp"
#include "mcg/graph6.hpp"
#include "mcg/matching.hpp"
#include "mcg/tight_cut.hpp"

namespace {

using namespace mcg;

enum Exit { kOk = 0, kVerdictFail = 1, kUsage = 2, kCapacity = 3 };

const char* flag(bool b) { return b ? "true" : "false"; }

// A catalog name (case-insensitive) or a graph6 string.
Graph resolve(const std::string& arg) {
  try {
    return catalog(arg);
  } catch (const LookupError& lookup) {
    try {
      return parse_graph6(arg);
    } catch (const ParseError& parse) {
      throw ArgumentError("'" + arg + "' is neither a catalog name nor valid graph6 (" + parse.what() +
                          "); catalog names: " + [] {
                            std::string names;
                            for (const std::string& n : catalog_names()) names += (names.empty() ? "" : ", ") + n;
                            return names;
                          }());
    }
  }
}

std::string edge_list(const Graph& g) {
  std::string s;
  for (const Edge& e : g.edges()) s += (s.empty() ? "" : " ") + std::to_string(e.u) + "-" + std::to_string(e.v);
  return s;
}

std::string shore_string(VertexMask shore) {
  std::string s;
  for (VertexMask m = shore; m; m &= m - 1) s += (s.empty() ? "" : ",") + std::to_string(std::countr_zero(m));
  return "{" + s + "}";
}

// Catalog name of a simple graph isomorphic to g, if any.
std::optional<std::string> known_name(const Graph& g) {
  const CanonicalForm form = canonical_form(g);
  for (const std::string& name : catalog_names()) {
    if (name[0] == 'F') continue;
    if (canonical_form(catalog(name)) == form) return name;
  }
  return std::nullopt;
}

int cmd_catalog(const std::string& name) {
  const CatalogEntry& e = catalog_entry(name);
  std::cout << "name=" << e.name << "\nn=" << e.graph.order() << "\nedges=" << e.graph.size()
            << "\ngraph6=" << to_graph6(e.graph) << "\nedge_list=" << edge_list(e.graph) << "\nnote=" << e.provenance
            << '\n';
  return kOk;
}

int cmd_props(const std::string& arg) {
  const Graph g = resolve(arg);
  const bool brick = is_brick(g);
  std::cout << "n=" << g.order() << "\nedges=" << g.size() << "\nconnected=" << flag(is_connected(g))
            << "\nbipartite=" << flag(is_bipartite(g)) << "\nclaw_free=" << flag(is_claw_free(g))
            << "\nthree_connected=" << flag(is_three_connected(g)) << "\nbicritical=" << flag(is_bicritical(g))
            << "\nbrick=" << flag(brick) << "\nmatching_covered=" << flag(is_matching_covered(g))
            << "\nperfect_matchings=" << count_perfect_matchings(g) << '\n';
  return kOk;
}

int cmd_classify(const std::string& arg) {
  const Graph g = resolve(arg);
  const EdgeClassReport r = classify_all(g);
  std::cout << "edge\tends\tremovable\tb_invariant\tsolitary\n";
  for (const EdgeClass& c : r.edges) {
    const Edge& e = g.edge(c.edge);
    std::cout << c.edge << '\t' << e.u << '-' << e.v << '\t' << flag(c.removable) << '\t'
              << (c.b_invariant ? flag(*c.b_invariant) : "n/a") << '\t' << flag(c.solitary) << '\n';
  }
  std::cout << "removable=" << r.summary.removable << "\nb_invariant=" << r.summary.b_invariant
            << "\nsolitary=" << r.summary.solitary
            << "\nb_invariant_and_solitary=" << r.summary.b_invariant_and_solitary
            << "\nevery_b_invariant_solitary=" << flag(every_b_invariant_solitary(r)) << '\n';
  return kOk;
}

int cmd_decompose(const std::string& arg) {
  const Graph g = resolve(arg);
  const DecompositionResult d = decompose(g);
  std::cout << "b=" << d.b << "\nbraces=" << d.braces << "\npieces=" << d.pieces.size() << '\n';
  for (std::size_t i = 0; i < d.pieces.size(); ++i) {
    const Piece& p = d.pieces[i];
    const Graph simple = underlying_simple(p.graph);
    std::cout << "piece " << i << ": " << (p.nonbipartite ? "brick" : "brace") << " n=" << p.graph.order()
              << " edges=" << p.graph.size() << " simple=" << p.certificate.bytes;
    if (auto name = known_name(simple)) std::cout << " (" << *name << ")";
    std::cout << '\n';
  }
  for (const TraceStep& t : d.trace) {
    std::cout << "cut depth=" << t.depth << " order=" << t.order << " shore=" << shore_string(t.shore) << '\n';
  }
  return kOk;
}

struct CensusArgs {
  int max_n = 0;
  int min_n = 1;
  bool claw_free = false;
  std::vector<std::string> checks;
  std::vector<std::string> inputs;
  std::string out;
  std::string format = "jsonl";
  int jobs = 1;
  std::string cache;
  std::vector<std::string> expected;
};

int cmd_census(const CensusArgs& a) {
  CensusConfig cfg;
  cfg.max_n = a.max_n;
  cfg.min_n = a.min_n;
  cfg.claw_free_only = a.claw_free;
  for (const std::string& c : a.checks) {
    if (c == "main") cfg.check_main = true;
    if (c == "thm11") cfg.check_thm11 = true;
  }
  if (a.checks.empty()) cfg.check_main = true;
  for (const std::string& p : a.inputs) cfg.input_files.emplace_back(p);
  cfg.jobs = a.jobs;
  cfg.cache_path = a.cache;
  if (!a.expected.empty()) {
    std::vector<Graph> graphs;
    for (const std::string& e : a.expected) graphs.push_back(resolve(e));
    cfg.expected_override = std::move(graphs);
  }
  const CensusResult r = run_census(cfg);
  const ReportFormat format = a.format == "csv" ? ReportFormat::csv : ReportFormat::jsonl;
  if (!a.out.empty()) {
    emit_report(r.summary, r.records, format, std::filesystem::path(a.out));
  }
  const VerdictSummary& s = r.summary;
  std::cout << "source: " << s.source << '\n' << "scope: " << s.scope() << '\n';
  std::cout << "bricks: " << s.totals.brick << ", claw-free bricks: " << s.totals.claw_free
            << ", classified: " << s.totals.classified << '\n';
  if (s.main_checked) {
    std::cout << "main verdict: " << (s.main_pass ? "pass" : "FAIL") << " (found " << s.main_found.size()
              << ", expected " << s.main_expected.size() << ")\n";
    for (const std::string& f : s.main_found) {
      const bool wanted = std::find(s.main_expected.begin(), s.main_expected.end(), f) != s.main_expected.end();
      std::cout << "  found " << f << (wanted ? "" : "  [not expected]") << '\n';
    }
    for (const std::string& e : s.main_expected) {
      if (std::find(s.main_found.begin(), s.main_found.end(), e) == s.main_found.end()) {
        std::cout << "  missing " << e << '\n';
      }
    }
  }
  if (s.thm11_checked) {
    std::cout << "thm11 verdict: " << (s.thm11_pass ? "pass" : "FAIL") << " (" << s.thm11_violations.size()
              << " violations)\n";
    for (const std::string& v : s.thm11_violations) std::cout << "  violation " << v << '\n';
    for (const ExceptionStatus& e : s.thm11_exceptions) {
      std::cout << "  exception " << e.name << ": " << e.status;
      if (e.b_invariant) std::cout << " (b_invariant=" << *e.b_invariant << ")";
      std::cout << '\n';
    }
  }
  for (const std::string& c : s.capacity_errors) std::cerr << "capacity: " << c << '\n';
  return s.pass() ? kOk : kVerdictFail;
}

int cmd_selftest(int jobs, const std::vector<int>& only) {
  acceptance::Options options;
  options.jobs = jobs;
  options.only = only;
  const auto results = acceptance::run_acceptance(options, &std::cout);
  int failed = 0;
  for (const auto& r : results) failed += !r.passed();
  std::cout << results.size() - static_cast<std::size_t>(failed) << "/" << results.size() << " criteria passed\n";
  return failed == 0 ? kOk : kVerdictFail;
}

int default_jobs() {
  if (const char* env = std::getenv("MCG_JOBS")) {
    const int j = std::atoi(env);
    if (j > 0) return j;
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Matching covered graph toolkit: bricks, tight cuts, edge classes and census"};
  app.require_subcommand(1);

  std::string target;
  auto* cat = app.add_subcommand("catalog", "Print a named graph");
  cat->add_option("name", target, "Catalog name")->required();
  auto* props = app.add_subcommand("props", "Structural flags of a graph");
  props->add_option("graph", target, "graph6 string or catalog name")->required();
  auto* classify = app.add_subcommand("classify", "Classify every edge");
  classify->add_option("graph", target, "graph6 string or catalog name")->required();
  auto* decomp = app.add_subcommand("decompose", "Tight cut decomposition");
  decomp->add_option("graph", target, "graph6 string or catalog name")->required();

  CensusArgs census_args;
  census_args.jobs = default_jobs();
  auto* census = app.add_subcommand("census", "Exhaustive verification over small graphs");
  census->add_option("--max-n", census_args.max_n, "Generate all graphs up to this order (1..10)");
  census->add_option("--min-n", census_args.min_n, "Smallest generated order");
  census->add_flag("--claw-free", census_args.claw_free, "Keep only claw-free bricks");
  census->add_option("--check", census_args.checks, "Verdicts to run (repeatable)")
      ->check(CLI::IsMember({"main", "thm11"}));
  census->add_option("--in", census_args.inputs, "graph6 input file (repeatable)")->check(CLI::ExistingFile);
  census->add_option("--out", census_args.out, "Report path");
  census->add_option("--format", census_args.format, "Report format")->check(CLI::IsMember({"jsonl", "csv"}));
  census->add_option("--jobs", census_args.jobs, "Worker threads (default from MCG_JOBS, else 1)")
      ->check(CLI::PositiveNumber);
  census->add_option("--cache", census_args.cache, "Append-only JSONL result cache");
  census->add_option("--expected", census_args.expected,
                     "Replace the expected family for the main verdict (names or graph6, repeatable)");

  int self_jobs = default_jobs();
  std::vector<int> only;
  auto* self = app.add_subcommand("selftest", "Run the acceptance criteria");
  self->add_option("--jobs", self_jobs, "Worker threads for the census criteria")->check(CLI::PositiveNumber);
  self->add_option("--criterion", only, "Run only these criteria (repeatable)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*cat) return cmd_catalog(target);
    if (*props) return cmd_props(target);
    if (*classify) return cmd_classify(target);
    if (*decomp) return cmd_decompose(target);
    if (*census) return cmd_census(census_args);
    if (*self) return cmd_selftest(self_jobs, only);
  } catch (const CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << '\n';
    return kCapacity;
  } catch (const ArgumentError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const LookupError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
