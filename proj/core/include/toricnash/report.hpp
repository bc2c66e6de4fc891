#pragma once

// Analysis reports: building them from a cone, rendering as text, and a
// JSON form that round-trips exactly.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "toricnash/catalog.hpp"
#include "toricnash/lattice_points.hpp"

namespace toricnash {

/// Reads {"name": str, "lattice_rank": int, "rays": [[int, ...], ...]}.
/// Throws InvalidInput naming the offending field.
ConeSpec parse_cone_spec_json(const std::string& text);
/// Reads "1,0,0;0,1,0;1,1,2"; the rank is the length of the first tuple.
ConeSpec parse_inline_rays(const std::string& text, std::string name = "inline");

struct ReportOptions {
  bool min = true;
  bool ter = true;
  bool mmp = true;
  bool oracle = false;
  std::optional<Integer> height;  // slab height for the Min oracle; default 2 * max height
  Integer box = 6;                // coordinate bound for the box oracles
  bool timings = false;
  PlacingOrder order = PlacingOrder::Forward;
};

struct WallSummary {
  std::vector<std::size_t> wall;
  std::size_t left_cone = 0;
  std::size_t right_cone = 0;
  Rational bend;
  bool intra_face = false;

  friend bool operator==(const WallSummary&, const WallSummary&) = default;
};

struct FanSummary {
  std::vector<LatticeVector> rays;
  std::vector<std::vector<std::size_t>> max_cones;
  std::vector<WallSummary> walls;
  std::vector<LatticeVector> exceptional_rays;

  friend bool operator==(const FanSummary&, const FanSummary&) = default;
};

struct Verification {
  std::optional<bool> invariants;        // Ter ⊆ Min ⊆ σ_sing, Min an antichain
  std::optional<bool> minimal_model;     // verify_minimal_model
  std::optional<bool> all_terminal;
  std::optional<bool> all_nef;
  std::vector<std::string> failures;

  friend bool operator==(const Verification&, const Verification&) = default;
};

/// One oracle comparison. only_oracle / only_main hold the elements found
/// on one side but not the other.
struct OracleDiff {
  std::string check;
  std::vector<LatticeVector> only_oracle;
  std::vector<LatticeVector> only_main;

  bool empty() const { return only_oracle.empty() && only_main.empty(); }
  friend bool operator==(const OracleDiff&, const OracleDiff&) = default;
};

struct OracleSummary {
  Integer height;
  Integer box;
  std::vector<std::string> checks;  // names of the comparisons that ran
  std::vector<OracleDiff> diffs;    // nonempty diffs only

  bool ok() const { return diffs.empty(); }
  friend bool operator==(const OracleSummary&, const OracleSummary&) = default;
};

struct Report {
  std::string name;
  std::size_t lattice_rank = 0;
  std::vector<LatticeVector> rays;  // primitive extreme rays, lexicographic
  std::size_t dim = 0;
  bool is_simplicial = false;
  bool is_regular_variety = false;
  std::optional<bool> is_terminal_variety;   // simplicial cones only
  std::optional<bool> is_canonical_variety;  // simplicial cones only
  std::vector<std::vector<std::size_t>> singular_faces;
  std::optional<std::vector<LatticeVector>> min_set;
  std::optional<std::vector<LatticeVector>> ter_set;
  std::optional<FanSummary> fan;
  Verification verification;
  std::optional<OracleSummary> oracle;
  std::vector<std::pair<std::string, double>> timings_ms;  // empty unless requested

  /// Verification passed and no oracle diffs.
  bool ok() const;
  friend bool operator==(const Report&, const Report&) = default;
};

Report build_report(const ConeSpec& spec, const ReportOptions& opts = {});

/// Differences in min_set, ter_set and the fan rays of actual against an
/// expected report; the check names are prefixed with "golden:".
std::vector<OracleDiff> compare_reports(const Report& expected, const Report& actual);

std::string to_json(const Report& r);
std::string to_json(const std::vector<Report>& rs);
/// Throws InvalidInput if the document is not a valid report.
Report report_from_json(const std::string& text);
/// Schema problems of a report document; empty when valid.
std::vector<std::string> validate_report_json(const std::string& text);

std::string to_text(const Report& r);

}  // namespace toricnash
