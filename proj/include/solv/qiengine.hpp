#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "solv/geometry.hpp"
#include "solv/structure.hpp"

namespace solv {

enum class VerdictKind { NotQuasiisometric, OLogEquivalent, Inconclusive };

std::string verdict_kind_str(VerdictKind k);

/// One evaluated decision rule: its identifier, the invariant values it
/// looked at, what it concluded, and the literature backing the rule.
struct RuleApplication {
  std::string rule_id;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::string conclusion;
  std::string citation;
  bool fired = false;
};

struct Verdict {
  VerdictKind kind = VerdictKind::Inconclusive;
  std::vector<RuleApplication> certificate;  // all rules evaluated, in order
  std::optional<Matrix> witness;             // for OLogEquivalent

  std::string str() const;
};

/// Applies the decision rules in fixed cheapest-first order, stopping at
/// the first separation. Requires both inputs completely solvable;
/// propagates reduction failures (UnsupportedError).
Verdict compare(const LieAlgebra& a, const LieAlgebra& b);

/// Re-runs compare and checks that every recorded rule application is
/// reproduced (id, conclusion, fired) in order.
bool replay(const LieAlgebra& a, const LieAlgebra& b, const Verdict& v);

/// A row of the extended catalog: an algebra transcribed from the
/// classification literature plus expected-invariant metadata.
struct ExtendedEntry {
  std::string name;
  LieAlgebra algebra;
  std::optional<std::size_t> conedim;
  std::string dehn = "unknown";
  std::string source = "external";
  // Expected reduced image: R^k x catalog_factor(params); factor name empty
  // when the metadata does not state an image.
  std::optional<std::size_t> image_euclidean;
  std::string image_factor;
  ParamMap image_params;
};

enum class RowStatus { Pass, Fail, Skipped };

struct RowResult {
  std::string name;
  RowStatus status = RowStatus::Skipped;
  std::string detail;
};

struct BatchReport {
  std::string title;
  std::vector<RowResult> rows;

  bool all_ok() const;  // no Fail rows
  std::string str() const;
};

/// Per-entry check: recompute the reduction, split it, match the factor,
/// and compare against the entry's expected image and cone dimension.
/// Known rows without transcribed constants are reported skipped.
BatchReport table1_report(const std::vector<ExtendedEntry>& entries);

/// Pairwise comparisons across and within the reduced-image families of
/// the extended catalog at the transcribed parameters.
BatchReport family_report(const std::vector<ExtendedEntry>& entries);

}  // namespace solv
