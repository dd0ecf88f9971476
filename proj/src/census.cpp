#include "mcg/census.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "mcg/canonical.hpp"
#include "mcg/catalog.hpp"
#include "mcg/edge_class.hpp"
#include "mcg/generate.hpp"
#include "mcg/graph6.hpp"
#include "mcg/matching.hpp"
#include "mcg/tight_cut.hpp"

namespace mcg {

using json = nlohmann::ordered_json;

namespace {

// Everything the pipeline learns about a graph that reached the
// 3-connectivity test; this is what the cache stores.
struct Examined {
  std::string graph6;
  int n = 0;
  int edges = 0;
  bool three_connected = false;
  bool brick = false;
  bool claw_free = false;
  bool classified = false;
  int b_invariant = 0;
  int solitary = 0;
  bool every_b_invariant_solitary = false;
};

json to_json(const Examined& e) {
  return json{{"graph6", e.graph6},
              {"n", e.n},
              {"edges", e.edges},
              {"three_connected", e.three_connected},
              {"brick", e.brick},
              {"claw_free", e.claw_free},
              {"classified", e.classified},
              {"b_invariant", e.b_invariant},
              {"solitary", e.solitary},
              {"every_b_invariant_solitary", e.every_b_invariant_solitary}};
}

Examined examined_from_json(const json& j) {
  Examined e;
  e.graph6 = j.at("graph6").get<std::string>();
  e.n = j.at("n").get<int>();
  e.edges = j.at("edges").get<int>();
  e.three_connected = j.at("three_connected").get<bool>();
  e.brick = j.at("brick").get<bool>();
  e.claw_free = j.at("claw_free").get<bool>();
  e.classified = j.at("classified").get<bool>();
  e.b_invariant = j.at("b_invariant").get<int>();
  e.solitary = j.at("solitary").get<int>();
  e.every_b_invariant_solitary = j.at("every_b_invariant_solitary").get<bool>();
  return e;
}

using Cache = std::map<std::string, Examined>;

Cache load_cache(const std::filesystem::path& path) {
  Cache cache;
  if (path.empty() || !std::filesystem::exists(path)) return cache;
  std::ifstream in(path);
  if (!in) throw Error("cannot read cache " + path.string());
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    Examined e = examined_from_json(json::parse(line));
    cache.emplace(e.graph6, std::move(e));
  }
  return cache;
}

void append_cache(const std::filesystem::path& path, const std::vector<Examined>& fresh) {
  if (path.empty() || fresh.empty()) return;
  std::ofstream out(path, std::ios::app);
  if (!out) throw Error("cannot write cache " + path.string());
  for (const Examined& e : fresh) out << to_json(e).dump() << '\n';
  if (!out) throw Error("write failed for cache " + path.string());
}

struct WorkerState {
  StageTotals totals;
  std::vector<Examined> survivors;
  std::vector<Examined> fresh;
  std::vector<std::string> capacity_errors;
};

void examine(const Graph& g, const CensusConfig& cfg, const Cache& cache, WorkerState& st) {
  ++st.totals.candidates;
  if (!is_connected(g)) return;
  ++st.totals.connected;
  if (g.order() == 0 || min_degree(g) < 3) return;
  ++st.totals.min_degree;

  Examined e;
  try {
    e.graph6 = canonical_form(g).bytes;
    e.n = g.order();
    e.edges = underlying_simple(g).size();
    if (auto hit = cache.find(e.graph6); hit != cache.end()) {
      e = hit->second;
      ++st.totals.cache_hits;
    } else {
      e.three_connected = is_three_connected(g);
      e.brick = e.three_connected && is_bicritical(g);
      e.claw_free = e.brick && is_claw_free(g);
      if (e.brick) {
        const EdgeClassReport report = classify_all(g);
        e.classified = true;
        e.b_invariant = report.summary.b_invariant;
        e.solitary = report.summary.solitary;
        e.every_b_invariant_solitary = every_b_invariant_solitary(report);
      }
      st.fresh.push_back(e);
    }
  } catch (const CapacityError& err) {
    st.capacity_errors.push_back(to_graph6(underlying_simple(g)) + ": " + err.what());
    return;
  }
  if (!e.three_connected) return;
  ++st.totals.three_connected;
  if (!e.brick) return;
  ++st.totals.brick;
  if (cfg.claw_free_only && !e.claw_free) return;
  if (e.claw_free) ++st.totals.claw_free;
  ++st.totals.classified;
  st.survivors.push_back(std::move(e));
}

void merge(StageTotals& into, const StageTotals& from) {
  into.candidates += from.candidates;
  into.connected += from.connected;
  into.min_degree += from.min_degree;
  into.three_connected += from.three_connected;
  into.brick += from.brick;
  into.claw_free += from.claw_free;
  into.classified += from.classified;
  into.cache_hits += from.cache_hits;
}

void process(const std::vector<Graph>& graphs, const CensusConfig& cfg, const Cache& cache, WorkerState& total) {
  const int threads = std::max(1, std::min<int>(cfg.jobs, static_cast<int>(graphs.size())));
  std::vector<WorkerState> states(static_cast<std::size_t>(threads));
  std::atomic<std::size_t> next{0};
  auto work = [&](WorkerState& st) {
    for (std::size_t i = next++; i < graphs.size(); i = next++) examine(graphs[i], cfg, cache, st);
  };
  if (threads == 1) {
    work(states[0]);
  } else {
    std::vector<std::jthread> pool;
    for (auto& st : states) pool.emplace_back([&work, &st] { work(st); });
  }
  for (WorkerState& st : states) {
    merge(total.totals, st.totals);
    std::move(st.survivors.begin(), st.survivors.end(), std::back_inserter(total.survivors));
    std::move(st.fresh.begin(), st.fresh.end(), std::back_inserter(total.fresh));
    std::move(st.capacity_errors.begin(), st.capacity_errors.end(), std::back_inserter(total.capacity_errors));
  }
}

std::map<std::string, std::string> certificates_of(const std::vector<std::string>& names) {
  std::map<std::string, std::string> out;
  for (const std::string& name : names) out.emplace(canonical_form(catalog(name)).bytes, name);
  return out;
}

CensusRecord to_record(const Examined& e) {
  return {e.graph6, e.n, e.edges, e.claw_free, e.brick, e.b_invariant, e.solitary, e.every_b_invariant_solitary, {}};
}

}  // namespace

void CensusConfig::validate() const {
  if (max_n == 0 && input_files.empty()) throw ArgumentError("census needs --max-n or at least one --in file");
  if (max_n != 0 && (max_n < 1 || max_n > kMaxGeneratedVertices)) {
    throw CapacityError("built-in generation supports 1 <= n <= " + std::to_string(kMaxGeneratedVertices));
  }
  if (min_n < 1) throw ArgumentError("min_n must be at least 1");
  if (!check_main && !check_thm11) throw ArgumentError("select at least one verdict (main, thm11)");
  if (jobs < 1) throw ArgumentError("jobs must be positive");
}

IngestResult ingest_graph6(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open graph6 file " + path.string());
  IngestResult out;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    try {
      out.graphs.push_back(parse_graph6(line));
      out.line_numbers.push_back(number);
    } catch (const Error& err) {
      ++out.skipped;
      out.errors.push_back(path.string() + ":" + std::to_string(number) + ": " + err.what());
    }
  }
  return out;
}

std::string VerdictSummary::scope() const { return "verified up to n = " + std::to_string(max_n_examined); }

CensusResult run_census(const CensusConfig& cfg) {
  cfg.validate();
  const Cache cache = load_cache(cfg.cache_path);
  WorkerState state;
  CensusResult result;
  VerdictSummary& summary = result.summary;

  std::vector<std::string> sources;
  if (cfg.max_n > 0) {
    sources.push_back("generator n=" + std::to_string(cfg.min_n) + ".." + std::to_string(cfg.max_n));
    for (int n = cfg.min_n; n <= cfg.max_n; ++n) {
      process(generate_all_graphs(n, {.connected = true, .min_degree = 3}, cfg.jobs), cfg, cache, state);
    }
    summary.max_n_examined = cfg.max_n;
  }
  for (const auto& path : cfg.input_files) {
    IngestResult in = ingest_graph6(path);
    sources.push_back("file " + path.filename().string());
    state.totals.skipped_lines += in.skipped;
    for (const Graph& g : in.graphs) summary.max_n_examined = std::max(summary.max_n_examined, g.order());
    process(in.graphs, cfg, cache, state);
  }
  for (const std::string& s : sources) summary.source += (summary.source.empty() ? "" : "; ") + s;

  // Graph6 strings are canonical, so duplicates across sources collapse.
  std::sort(state.survivors.begin(), state.survivors.end(),
            [](const Examined& a, const Examined& b) { return a.graph6 < b.graph6; });
  state.survivors.erase(std::unique(state.survivors.begin(), state.survivors.end(),
                                    [](const Examined& a, const Examined& b) { return a.graph6 == b.graph6; }),
                        state.survivors.end());
  std::sort(state.fresh.begin(), state.fresh.end(),
            [](const Examined& a, const Examined& b) { return a.graph6 < b.graph6; });
  state.fresh.erase(std::unique(state.fresh.begin(), state.fresh.end(),
                                [](const Examined& a, const Examined& b) { return a.graph6 == b.graph6; }),
                    state.fresh.end());
  std::sort(state.capacity_errors.begin(), state.capacity_errors.end());
  append_cache(cfg.cache_path, state.fresh);

  summary.totals = state.totals;
  summary.capacity_errors = state.capacity_errors;

  const auto family = certificates_of(family_g_names());
  const auto excluded_main = certificates_of({"K4", "C6BAR"});
  const auto exceptions = certificates_of(thm11_exception_names());

  std::map<std::string, std::string> expected = family;
  if (cfg.expected_override) {
    expected.clear();
    for (const Graph& g : *cfg.expected_override) expected.emplace(canonical_form(g).bytes, "expected");
  }

  for (const Examined& e : state.survivors) {
    CensusRecord rec = to_record(e);
    if (family.contains(e.graph6)) rec.tags.push_back("family_g");
    if (exceptions.contains(e.graph6)) rec.tags.push_back("thm11_exception");
    if (cfg.check_main && e.claw_free && !excluded_main.contains(e.graph6) && e.every_b_invariant_solitary) {
      rec.tags.push_back("main_property");
      summary.main_found.push_back(e.graph6);
    }
    if (cfg.check_thm11 && !exceptions.contains(e.graph6) && e.b_invariant < 2) {
      rec.tags.push_back("thm11_violation");
      summary.thm11_violations.push_back(e.graph6);
    }
    result.records.push_back(std::move(rec));
  }

  if (cfg.check_main) {
    summary.main_checked = true;
    std::set<std::string> seen_claw_free_bricks;
    for (const Examined& e : state.survivors) {
      if (e.claw_free) seen_claw_free_bricks.insert(e.graph6);
    }
    for (const auto& [cert, name] : expected) {
      const int order = parse_graph6(cert).order();
      const bool in_generated_range = cfg.max_n > 0 && order >= cfg.min_n && order <= cfg.max_n;
      if (in_generated_range || seen_claw_free_bricks.contains(cert)) summary.main_expected.push_back(cert);
    }
    std::sort(summary.main_expected.begin(), summary.main_expected.end());
    summary.main_pass = summary.main_found == summary.main_expected;
    for (CensusRecord& rec : result.records) {
      const bool found = std::binary_search(summary.main_found.begin(), summary.main_found.end(), rec.graph6);
      const bool wanted = std::binary_search(summary.main_expected.begin(), summary.main_expected.end(), rec.graph6);
      if (found != wanted) rec.tags.push_back("main_mismatch");
    }
  }

  if (cfg.check_thm11) {
    summary.thm11_checked = true;
    summary.thm11_pass = summary.thm11_violations.empty();
    for (const std::string& name : thm11_exception_names()) {
      const std::string cert = canonical_form(catalog(name)).bytes;
      auto it = std::find_if(state.survivors.begin(), state.survivors.end(),
                             [&](const Examined& e) { return e.graph6 == cert; });
      ExceptionStatus status{name, "outside census range", std::nullopt};
      if (it != state.survivors.end()) {
        status.b_invariant = it->b_invariant;
        status.status = it->b_invariant < 2 ? "violates bound" : "meets bound";
      }
      summary.thm11_exceptions.push_back(status);
    }
  }
  return result;
}

std::string summary_json(const VerdictSummary& s) {
  json totals{{"candidates", s.totals.candidates},
              {"connected", s.totals.connected},
              {"min_degree_3", s.totals.min_degree},
              {"three_connected", s.totals.three_connected},
              {"bricks", s.totals.brick},
              {"claw_free_bricks", s.totals.claw_free},
              {"classified", s.totals.classified},
              {"cache_hits", s.totals.cache_hits},
              {"skipped_lines", s.totals.skipped_lines}};
  json j{{"summary", true}, {"scope", s.scope()}, {"source", s.source}, {"totals", totals}};
  if (s.main_checked) {
    j["main"] = {{"pass", s.main_pass}, {"found", s.main_found}, {"expected", s.main_expected}};
  }
  if (s.thm11_checked) {
    json ex = json::array();
    for (const ExceptionStatus& e : s.thm11_exceptions) {
      json item{{"name", e.name}, {"status", e.status}};
      item["b_invariant"] = e.b_invariant ? json(*e.b_invariant) : json(nullptr);
      ex.push_back(item);
    }
    j["thm11"] = {{"pass", s.thm11_pass}, {"violations", s.thm11_violations}, {"exceptions", ex}};
  }
  j["capacity_errors"] = s.capacity_errors;
  j["pass"] = s.pass();
  return j.dump();
}

void emit_report(const VerdictSummary& summary, const std::vector<CensusRecord>& records, ReportFormat format,
                 std::ostream& out) {
  if (format == ReportFormat::jsonl) {
    for (const CensusRecord& r : records) {
      json j{{"graph6", r.graph6},
             {"n", r.n},
             {"edges", r.edges},
             {"claw_free", r.claw_free},
             {"brick", r.brick},
             {"b_invariant", r.b_invariant},
             {"solitary", r.solitary},
             {"every_b_invariant_solitary", r.every_b_invariant_solitary},
             {"tags", r.tags}};
      out << j.dump() << '\n';
    }
    out << summary_json(summary) << '\n';
    return;
  }
  auto flag = [](bool b) { return b ? "true" : "false"; };
  out << kCsvHeader << '\n';
  for (const CensusRecord& r : records) {
    std::string tags;
    for (const std::string& t : r.tags) tags += (tags.empty() ? "" : ";") + t;
    // graph6 never contains '"' or ',', but the field is always quoted.
    out << '"' << r.graph6 << "\"," << r.n << ',' << r.edges << ',' << flag(r.claw_free) << ','
        << flag(r.brick) << ',' << r.b_invariant << ',' << r.solitary << ','
        << flag(r.every_b_invariant_solitary) << ',' << tags << '\n';
  }
  const json j = json::parse(summary_json(summary));
  for (const auto& [key, value] : j.items()) out << "# " << key << ": " << value.dump() << '\n';
}

void emit_report(const VerdictSummary& summary, const std::vector<CensusRecord>& records, ReportFormat format,
                 const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open report " + path.string() + " for writing");
  emit_report(summary, records, format, out);
  out.flush();
  if (!out) throw Error("write failed for report " + path.string());
}

}  // namespace mcg
