#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "solv/errors.hpp"

namespace solv {

/// Arbitrary-precision rational number. Thin wrapper over GMP's mpq_class
/// that guarantees the canonical form (reduced, positive denominator) on
/// every construction path.
class Rat {
public:
  Rat() : v_(0) {}
  Rat(long n) : v_(n) {}
  Rat(long num, long den);
  explicit Rat(const mpq_class& v) : v_(v) { v_.canonicalize(); }

  /// Parses "p", "-p", "p/q". Returns nullopt on malformed input.
  static std::optional<Rat> parse(const std::string& text);

  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  bool is_zero() const { return v_ == 0; }
  int sign() const { return sgn(v_); }
  Rat abs() const { return Rat(mpq_class(::abs(v_))); }
  Rat inverse() const;

  Rat operator-() const { return Rat(mpq_class(-v_)); }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

  /// "p" or "p/q", minus sign on the numerator.
  std::string str() const;

private:
  mpq_class v_;
};

using Vec = std::vector<Rat>;

/// Dense row-major matrix of rationals.
class Matrix {
public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), e_(rows * cols) {}
  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rat& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
  const Rat& at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }

  Vec row(std::size_t r) const;
  Vec apply(const Vec& v) const;          // matrix * column vector
  Matrix transpose() const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Rat& c) const;
  bool operator==(const Matrix& o) const = default;
  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }

  Rat trace() const;
  /// Inverse of a square matrix; nullopt when singular.
  std::optional<Matrix> inverse() const;

  std::string str() const;

private:
  std::size_t rows_, cols_;
  std::vector<Rat> e_;
};

/// Univariate polynomial over the rationals, coefficients in ascending
/// degree; the zero polynomial has an empty coefficient list.
class Poly {
public:
  Poly() = default;
  explicit Poly(std::vector<Rat> coeffs);
  static Poly x();
  static Poly constant(const Rat& c);
  /// (x - r)
  static Poly linear_root(const Rat& r);

  bool is_zero() const { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<Rat>& coeffs() const { return c_; }
  Rat coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }
  Rat leading() const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  bool operator==(const Poly& o) const = default;
  Poly scaled(const Rat& c) const;
  Poly monic() const;
  Poly derivative() const;
  /// Quotient and remainder; divisor must be nonzero.
  std::pair<Poly, Poly> divmod(const Poly& divisor) const;
  Rat eval(const Rat& x) const;

  std::string str() const;  // human-readable, highest degree first

private:
  std::vector<Rat> c_;
};

/// Monic gcd of two polynomials (zero if both zero).
Poly poly_gcd(const Poly& a, const Poly& b);
/// Monic lcm.
Poly poly_lcm(const Poly& a, const Poly& b);
/// Extended gcd: returns (g, s, t) with s*a + t*b = g, g monic.
struct PolyXgcd { Poly g, s, t; };
PolyXgcd poly_xgcd(const Poly& a, const Poly& b);

/// Linear subspace of Q^n in canonical form: the basis matrix is in
/// reduced row-echelon form, so two subspaces are equal iff their basis
/// matrices are identical.
class Subspace {
public:
  explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {}
  /// Canonicalizes the row span of the given vectors.
  static Subspace span(const std::vector<Vec>& vectors, std::size_t ambient_dim);
  static Subspace full(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  Vec basis_vector(std::size_t i) const { return basis_.row(i); }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  /// Coordinates of v in the RREF basis; nullopt if v is outside.
  std::optional<Vec> coordinates(const Vec& v) const;
  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;
  bool operator==(const Subspace& o) const = default;

private:
  std::size_t ambient_;
  Matrix basis_;
};

/// Reduced row-echelon form and rank.
std::pair<Matrix, std::size_t> rref(const Matrix& m);
/// Null space {v : m v = 0}.
Subspace kernel(const Matrix& m);
/// Characteristic polynomial (monic) via the Faddeev-LeVerrier recurrence.
Poly char_poly(const Matrix& m);
/// Minimal polynomial via Krylov annihilators.
Poly min_poly(const Matrix& m);
/// p / gcd(p, p'), monic.
Poly squarefree_part(const Poly& p);

struct RootReport {
  std::vector<std::pair<Rat, std::size_t>> roots;  // (root, multiplicity)
  bool fully_split = false;
};
/// All rational roots with multiplicities, via the rational-root bound.
RootReport rational_roots(const Poly& p);

/// Horner evaluation of p at a square matrix.
Matrix eval_poly_at_matrix(const Poly& p, const Matrix& m);
/// kernel(m - lam I).
Subspace eigenspace(const Matrix& m, const Rat& lam);

/// Solves m x = b; nullopt when inconsistent. If the system is
/// underdetermined returns one solution (free variables set to zero).
std::optional<Vec> solve(const Matrix& m, const Vec& b);

}  // namespace solv
