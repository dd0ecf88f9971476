#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mcg/graph.hpp"

namespace mcg {

/// Graphs decoded from a graph6 file, one per line. Malformed lines are
/// skipped and reported with their 1-based line number.
struct IngestResult {
  std::vector<Graph> graphs;
  std::vector<int> line_numbers;
  std::vector<std::string> errors;
  int skipped = 0;
};

/// Blank lines are ignored. Throws Error when the file cannot be opened.
IngestResult ingest_graph6(const std::filesystem::path& path);

struct CensusConfig {
  /// Built-in generation covers min_n..max_n; 0 disables it.
  int min_n = 1;
  int max_n = 0;
  /// graph6 corpora processed in addition to (or instead of) generation.
  std::vector<std::filesystem::path> input_files;
  bool claw_free_only = false;
  bool check_main = false;
  bool check_thm11 = false;
  int jobs = 1;
  /// Replaces the family G in the main verdict; used to exercise the
  /// failing path.
  std::optional<std::vector<Graph>> expected_override;
  /// Append-only JSONL result cache keyed by canonical graph6; empty
  /// disables caching.
  std::filesystem::path cache_path;

  /// Throws ArgumentError or CapacityError for an unusable configuration.
  void validate() const;
};

/// One surviving graph (a brick, claw-free when that filter is on).
struct CensusRecord {
  std::string graph6;  // canonical
  int n = 0;
  int edges = 0;
  bool claw_free = false;
  bool brick = false;
  int b_invariant = 0;
  int solitary = 0;
  bool every_b_invariant_solitary = false;
  std::vector<std::string> tags;
};

struct StageTotals {
  long long candidates = 0;
  long long connected = 0;
  long long min_degree = 0;
  long long three_connected = 0;
  long long brick = 0;
  long long claw_free = 0;
  long long classified = 0;
  long long cache_hits = 0;
  long long skipped_lines = 0;
};

struct ExceptionStatus {
  std::string name;
  /// "violates bound", "meets bound" or "outside census range".
  std::string status;
  std::optional<int> b_invariant;
};

struct VerdictSummary {
  std::string source;
  int max_n_examined = 0;
  StageTotals totals;

  bool main_checked = false;
  bool main_pass = true;
  std::vector<std::string> main_found;
  std::vector<std::string> main_expected;

  bool thm11_checked = false;
  bool thm11_pass = true;
  std::vector<std::string> thm11_violations;
  std::vector<ExceptionStatus> thm11_exceptions;

  std::vector<std::string> capacity_errors;

  /// "verified up to n = K"; a census never proves the statement.
  std::string scope() const;
  bool pass() const { return main_pass && thm11_pass; }
};

struct CensusResult {
  VerdictSummary summary;
  /// Sorted by canonical graph6.
  std::vector<CensusRecord> records;
};

/// Pipeline per graph: connected, minimum degree 3, 3-connected,
/// bicritical, optional claw-free, then full edge classification. Oversized
/// graphs are recorded as capacity errors and skipped.
CensusResult run_census(const CensusConfig& config);

enum class ReportFormat { jsonl, csv };

/// Column order of the CSV report.
inline constexpr const char* kCsvHeader =
    "graph6,n,edges,claw_free,brick,b_invariant,solitary,every_b_invariant_solitary,tags";

void emit_report(const VerdictSummary& summary, const std::vector<CensusRecord>& records, ReportFormat format,
                 std::ostream& out);
/// Writes to a file; throws Error naming the path on I/O failure.
void emit_report(const VerdictSummary& summary, const std::vector<CensusRecord>& records, ReportFormat format,
                 const std::filesystem::path& path);

/// JSON object for the summary block (compact, stable key order).
std::string summary_json(const VerdictSummary& summary);

}  // namespace mcg
