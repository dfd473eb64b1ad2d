#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "solv/exactlin.hpp"

namespace solv {

/// Lie algebra given by rational structure constants on a finite basis.
/// Constants are stored sparsely for i < j only; [e_j, e_i] = -[e_i, e_j]
/// is implied.
class LieAlgebra {
public:
  LieAlgebra() : dim_(0) {}
  explicit LieAlgebra(std::size_t dim, std::vector<std::string> labels = {});

  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels);

  /// Sets c^k_{ij} (0-based, any order of i and j; stored with i < j).
  void set_constant(std::size_t i, std::size_t j, std::size_t k, const Rat& c);
  Rat constant(std::size_t i, std::size_t j, std::size_t k) const;
  const std::map<std::tuple<std::size_t, std::size_t, std::size_t>, Rat>& constants() const {
    return c_;
  }

  /// [e_i, e_j] as a coordinate vector.
  Vec bracket_basis(std::size_t i, std::size_t j) const;
  Vec bracket(const Vec& x, const Vec& y) const;
  /// Matrix of ad(x): y -> [x, y].
  Matrix ad(const Vec& x) const;
  Matrix ad_basis(std::size_t i) const;
  Vec basis_vector(std::size_t i) const;

  bool operator==(const LieAlgebra& o) const {
    return dim_ == o.dim_ && c_ == o.c_;
  }

  std::string str() const;

private:
  std::size_t dim_;
  std::vector<std::string> labels_;
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, Rat> c_;
};

/// A subspace tagged with the algebra it lives in.
struct AlgebraSubspace {
  const LieAlgebra* parent = nullptr;
  Subspace space{0};
};

struct ValidationReport {
  bool ok = true;
  // First failing triple and the Jacobi residual, when not ok.
  std::size_t i = 0, j = 0, k = 0;
  Vec residual;
  std::string message;
};

/// Checks the Jacobi identity on all basis triples.
ValidationReport validate(const LieAlgebra& g);

struct SeriesReport {
  enum class Kind { LowerCentral, Derived };
  Kind kind;
  std::vector<AlgebraSubspace> terms;  // up to and including the stable term
  std::vector<std::size_t> dims;
};

/// Span of [A, B].
AlgebraSubspace product_space(const LieAlgebra& g, const AlgebraSubspace& a,
                              const AlgebraSubspace& b);
SeriesReport lower_central_series(const LieAlgebra& g);
SeriesReport derived_series(const LieAlgebra& g);
AlgebraSubspace center(const LieAlgebra& g);
bool is_nilpotent(const LieAlgebra& g);
bool is_solvable(const LieAlgebra& g);
bool is_abelian(const LieAlgebra& g);

/// Indices of the lexicographically first subset of standard basis vectors
/// completing the subspace to the full ambient space.
std::vector<std::size_t> lex_complement_indices(const Subspace& s);

struct QuotientResult {
  LieAlgebra algebra;     // on the complement basis
  Matrix projection;      // dim(quotient) x dim(g)
  Matrix section;         // dim(g) x dim(quotient)
  std::vector<std::size_t> complement_indices;
};

/// Quotient by an ideal, on the lexicographically first complement of
/// original basis vectors. projection * section = identity.
QuotientResult quotient(const LieAlgebra& g, const AlgebraSubspace& ideal);

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);

/// Action of h on n by derivations, one matrix per basis element of h.
struct DerivationAction {
  const LieAlgebra* source = nullptr;  // h
  const LieAlgebra* target = nullptr;  // n
  std::vector<Matrix> matrices;
};

/// Checks the Leibniz identity and the homomorphism property; returns a
/// message describing the first violation, or nullopt when the action is a
/// valid Lie action by derivations.
std::optional<std::string> check_action(const LieAlgebra& n, const LieAlgebra& h,
                                        const DerivationAction& act);

/// n x| h. Basis: n's basis followed by h's. Throws InvariantError when the
/// action fails its invariants.
LieAlgebra semidirect_product(const LieAlgebra& n, const LieAlgebra& h,
                              const DerivationAction& act);

struct TriangularizeResult {
  bool ok = false;
  // On success: g = flag[0] > flag[1] > ... > flag[dim] = 0, each an ideal
  // of g with one-dimensional steps.
  std::vector<Subspace> flag;
  // On failure: "not solvable" or "no rational common eigenvector".
  std::string reason;
};

/// Constructive complete-solvability test over Q.
TriangularizeResult triangularize(const LieAlgebra& g);

/// Matrix of ad(x) restricted to an ad(x)-invariant subspace, in the
/// subspace's canonical (RREF) basis. Throws on invariance failure.
Matrix adjoint_on(const LieAlgebra& g, const Vec& x, const AlgebraSubspace& inv);

/// Restriction of the bracket to a subalgebra, in its RREF basis.
/// Throws when the subspace is not closed under the bracket.
LieAlgebra subalgebra(const LieAlgebra& g, const Subspace& s);

/// The algebra in the new basis f_i = sum_j P[i][j] e_j (P invertible).
LieAlgebra change_basis(const LieAlgebra& g, const Matrix& p);

/// Abelian algebra of the given dimension.
LieAlgebra abelian_algebra(std::size_t dim);

}  // namespace solv
