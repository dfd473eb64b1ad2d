#pragma once

#include <string>
#include <vector>

#include "solv/liealg.hpp"

namespace solv {

/// Jordan-Chevalley decomposition m = semisimple + nilpotent with both
/// parts commuting and the semisimple part a polynomial in m (witness).
struct JordanPair {
  Matrix semisimple;
  Matrix nilpotent;
  Poly witness;
};

/// Additive Jordan-Chevalley decomposition by Newton iteration on the
/// squarefree part of the characteristic polynomial. Requires the
/// characteristic polynomial to split over Q; throws UnsupportedError
/// otherwise.
JordanPair jordan_chevalley(const Matrix& m);

/// Stable term of the lower central series. Requires solvable input.
AlgebraSubspace exponential_radical(const LieAlgebra& g);

/// dim(g) - dim(exponential_radical(g)). Requires complete solvability.
std::size_t cone_dimension(const LieAlgebra& g);

struct ReductionResult {
  LieAlgebra input;
  Subspace exprad{0};
  std::size_t quotient_rank = 0;
  LieAlgebra output;
  LieAlgebra nil_part;        // exprad as an algebra, in its RREF basis
  LieAlgebra quotient_part;   // the (graded, for rho_infinity) quotient
  // Diagonalizable action of quotient_part on nil_part used to rebuild the
  // output, one matrix per quotient basis element.
  std::vector<Matrix> action_matrices;
  std::vector<std::string> construction_log;
};

/// The semisimplified semidirect reduction: exprad x| quotient acting
/// through the semisimple parts of the adjoint action.
ReductionResult rho1(const LieAlgebra& g);

/// Composite reduction: rho1 first, then replacement of the quotient by
/// the graded algebra of its lower central series with the degree-one
/// layer acting.
ReductionResult rho_infinity(const LieAlgebra& g);

struct ClassC1Report {
  bool value = false;
  std::string certificate;
  std::vector<std::size_t> complement_indices;  // when a complement was found
};

/// True iff the exponential radical admits a complement subalgebra among
/// basis-subset sections and the action of that complement on the radical
/// has vanishing nilpotent parts.
ClassC1Report is_class_C1(const LieAlgebra& g);

}  // namespace solv
