#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "smoothfano/analysis.hpp"
#include "smoothfano/polytope.hpp"

namespace sfano {

enum class CheckStatus { Pass, Fail, ReportOnly, NotApplicable };

std::string to_string(CheckStatus status);

struct CheckRecord {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  /// Values behind the verdict; names the offending facet and vertices on failure.
  std::string witness;
};

/// Structural bounds of a smooth Fano polytope evaluated at one special facet.
/// Bounds that depend on the deficit k are asserted only for k >= 3 and are
/// reported (holds/violated) below that.
struct BoundsReport {
  std::size_t d = 0;
  std::size_t n = 0;
  std::int64_t k = 0;
  Mode mode = Mode::Full;
  std::vector<std::size_t> special_facet;  ///< vertex indices
  std::vector<CheckRecord> checks;         ///< sorted by name
  bool overall = false;

  const CheckRecord* find(const std::string& name) const;
  /// "REPORT d=.. n=.. k=.. overall=pass|fail" followed by one CHECK line per record.
  std::string to_text() const;
};

/// Never throws for a well-formed polytope: an invalid input yields a report
/// with a failing "smooth_fano" record.
BoundsReport verify_bounds(const Polytope& p, Mode mode = Mode::Full);

/// Vertices on level -1 sorted into the three exhaustive types:
///   (i)   opp(F,z) for some z in C with negative z-coordinate
///   (ii)  a B-coordinate equal to -1, B-coordinates >= -1, A and C coordinates >= 0
///   (iii) -z for some z in A
struct LevelMinusOneTypes {
  std::vector<std::size_t> type_i, type_ii, type_iii;  ///< vertex indices
};

/// Throws UnclassifiableVertex if some vertex fits no type.
LevelMinusOneTypes classify_level_minus_one(const Polytope& p, const FacetFrame& f, const GoodnessPartition& g);
LevelMinusOneTypes classify_level_minus_one(const Polytope& p, const FacetFrame& f);

}  // namespace sfano
