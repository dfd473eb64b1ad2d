#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "solv/geometry.hpp"
#include "solv/liealg.hpp"
#include "solv/reduction.hpp"

namespace solv {

/// Basis-independent invariant tuple; equal for isomorphic algebras
/// (necessary, not sufficient).
struct Fingerprint {
  std::size_t dim = 0;
  std::vector<std::size_t> lcs_dims;
  std::vector<std::size_t> derived_dims;
  std::size_t center_dim = 0;
  std::size_t exprad_dim = 0;  // stable lower-central term
  std::size_t cone_dim = 0;    // dim - exprad_dim
  bool nilpotent = false;
  bool completely_solvable = false;

  bool operator==(const Fingerprint&) const = default;
  std::string str() const;
};

Fingerprint fingerprint(const LieAlgebra& g);

struct EuclideanSplit {
  std::size_t euclidean_dim = 0;
  LieAlgebra complement;
  Subspace complement_space{0};  // in the input's coordinates
  Matrix change_of_basis;        // rows: euclidean vectors, then complement basis
};

/// Splits off the Euclidean part: a complement of center-intersect-derived
/// inside the center.
EuclideanSplit split_euclidean(const LieAlgebra& g);

struct SplitResult {
  std::size_t euclidean_dim = 0;
  std::vector<LieAlgebra> factors;
  Matrix change_of_basis;
  // True when the heuristic split anything off (or there was nothing to
  // split); false means "no further splitting found in this basis", which
  // does not certify indecomposability.
  bool complete = false;
};

/// Euclidean split followed by bracket-connectivity components.
SplitResult split_factors(const LieAlgebra& g);

using ParamMap = std::map<std::string, Rat>;

struct RecognizerResult {
  ParamMap params;
  Matrix change_of_basis;  // transports the input onto the generator output
};

struct ParamSpec {
  std::string name;
  std::string constraint;
};

struct CatalogEntry {
  std::string name;
  std::vector<ParamSpec> params;
  std::function<LieAlgebra(const ParamMap&)> generator;
  std::optional<std::size_t> conedim;  // metadata
  std::string dehn = "unknown";        // metadata, never computed
  std::string source = "builtin";
  std::function<std::optional<RecognizerResult>(const LieAlgebra&)> recognizer;
  std::vector<ParamMap> sample_params;  // admissible instances used by tests
};

/// The built-in catalog: a2, heis, the rank-one diagonal families g3_3,
/// g3_5, g4_5, g4_8, g4_9, the degenerate g4_9_0, and g5_19.
const std::vector<CatalogEntry>& catalog();
const CatalogEntry* catalog_lookup(const std::string& name);

struct MatchResult {
  std::string name;
  ParamMap params;
  Matrix change_of_basis;
};

/// Certified catalog matching: a returned match transports the input onto
/// the generator output exactly.
std::optional<MatchResult> match(const LieAlgebra& g);

struct IsoResult {
  TriBool value = TriBool::Unknown;
  std::optional<Matrix> witness;  // change of basis from a onto b when True
  std::string note;
};

/// Isomorphism decision through fingerprints and catalog recognizers
/// (factor-wise after splitting); Unknown when no procedure applies.
IsoResult isomorphic(const LieAlgebra& a, const LieAlgebra& b);

}  // namespace solv
