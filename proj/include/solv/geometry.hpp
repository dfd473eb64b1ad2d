#pragma once

#include <string>
#include <vector>

#include "solv/liealg.hpp"
#include "solv/reduction.hpp"

namespace solv {

enum class NilradicalKind { Abelian, Heisenberg, Other };

/// Data of a diagonal Heintze algebra m x| R: the nilpotent part, the
/// diagonalizable derivation of the rank-one action, and its spectrum.
/// The spectrum is kept at its natural scale (generator from the canonical
/// quotient section, sign-flipped if needed); `scale` records the minimal
/// eigenvalue for callers that normalize.
struct HeintzeData {
  LieAlgebra nilradical;
  Matrix derivation;
  std::vector<std::pair<Rat, std::size_t>> spectrum;  // ascending eigenvalues
  NilradicalKind nilradical_kind = NilradicalKind::Other;
  bool generator_flipped = false;
  Rat scale;  // minimal eigenvalue
};

struct HeintzeDetect {
  bool ok = false;
  HeintzeData data;
  std::string reason;  // when not ok
};

/// Heisenberg test: odd dimension, one-dimensional center equal to the
/// derived subalgebra, nondegenerate induced pairing.
bool is_heisenberg(const LieAlgebra& g);

/// Diagonal Heintze detection: rank one, complement acting diagonalizably
/// with strictly positive rational spectrum (after a sign flip of the
/// generator when every eigenvalue is negative).
/// Throws UnsupportedError on irrational spectrum.
HeintzeDetect detect_diagonal_heintze(const LieAlgebra& g);

/// trace(D) / min eigenvalue; invariant under positive rescaling of D.
Rat conformal_dimension(const HeintzeData& h);

enum class SymmetricFamily { SO_n1, SU_n1, None };

struct SymmetricTag {
  SymmetricFamily family = SymmetricFamily::None;
  std::size_t n = 0;  // SO(n+1,1) / SU(n+1,1) parameter

  std::string str() const;
};

/// SO(n+1,1) for abelian nilradicals with scalar spectrum; SU(n+1,1) for
/// Heisenberg nilradicals with normalized spectrum {1 : 2n, 2 : 1}.
SymmetricTag identify_rank_one_iwasawa(const HeintzeData& h);

enum class TriBool { True, False, Unknown };

struct SpspReport {
  TriBool value = TriBool::Unknown;
  std::string rule;  // which rule of the table fired
};

/// Strong pointed sphere property rule table. Conservative: shapes not
/// covered by a proved rule return Unknown.
SpspReport strong_pointed_sphere(const HeintzeData& h);

}  // namespace solv
