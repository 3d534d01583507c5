#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "derivlab/cli/json_io.hpp"

namespace derivlab::cli {

/// Where an entry's expected outcome comes from.
enum class Origin {
  Stated,      // a result stated in the source text
  Derived,     // a consequence computed here and cross-checked independently
  Elementary,  // immediate from the definitions
};

std::string_view origin_name(Origin o) noexcept;

struct CheckLine {
  std::string name;
  bool ok = false;
  /// Non-asserted lines are recorded but never fail an entry.
  bool asserted = true;
  std::string detail;
};

class Recorder {
 public:
  void expect(std::string name, bool ok, std::string detail = {});
  void note(std::string name, bool outcome, std::string detail = {});
  /// Dimension equals `expected` and the space passes verify_space.
  void dim(std::string name, const SolutionSpace& space, std::size_t expected);

  const std::vector<CheckLine>& lines() const noexcept { return lines_; }
  std::vector<CheckLine> take() { return std::move(lines_); }

 private:
  std::vector<CheckLine> lines_;
};

struct CatalogEntry {
  std::string id;
  std::string title;
  /// Short mathematical statement the entry checks.
  std::string anchor;
  Origin origin = Origin::Stated;
  /// False for audit entries, whose outcome is reported only.
  bool asserted = true;
  /// Runs over the ring selected on the command line instead of a fixed one.
  bool ring_generic = false;
  std::function<void(const RingSpec&, Recorder&)> run;
};

/// The worked example triples, keyed by catalog id.
std::vector<std::pair<std::string, MapTriple>> example_triples();

/// Every entry, ordered by id within groups.
const std::vector<CatalogEntry>& catalog();

enum class Status { Pass, Fail, Skip, Reported };
std::string_view status_name(Status s) noexcept;

struct EntryResult {
  const CatalogEntry* entry = nullptr;
  Status status = Status::Pass;
  std::vector<CheckLine> checks;
  std::string message;
  double millis = 0;
};

struct RunReport {
  RingSpec ring;
  std::vector<EntryResult> results;

  std::size_t count(Status s) const;
  /// No asserted, non-skipped entry failed.
  bool ok() const { return count(Status::Fail) == 0; }
};

/// Comma-separated ids; a trailing '*' matches any suffix. Empty matches all.
bool filter_matches(std::string_view filter, std::string_view id);

/// Runs the selected entries in catalog order. Ring-generic entries are skipped
/// when `ring` is not a field or not 2-torsion-free.
RunReport run_catalog(std::string_view filter = {}, const RingSpec& ring = {});

Json run_report_to_json(const RunReport& report, bool timings = true);
/// Markdown table: entry, anchor, origin, outcome.
std::string traceability_markdown(const RunReport& report);

}  // namespace derivlab::cli
