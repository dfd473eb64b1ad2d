#include "solv/exactlin.hpp"

#include <algorithm>
#include <sstream>

namespace solv {

Rat::Rat(long num, long den) : v_(num, den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  v_.canonicalize();
}

std::optional<Rat> Rat::parse(const std::string& text) {
  if (text.empty()) return std::nullopt;
  auto is_int = [](const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  auto slash = text.find('/');
  std::string num = text.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!is_int(num) || !is_int(den)) return std::nullopt;
  mpz_class d(den);
  if (d == 0) return std::nullopt;
  mpq_class q(mpz_class(num), d);
  q.canonicalize();
  return Rat(q);
}

Rat Rat::inverse() const {
  if (is_zero()) throw std::invalid_argument("inverse of zero");
  return Rat(mpq_class(1) / v_);
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw std::invalid_argument("division by zero");
  v_ /= o.v_;
  return *this;
}

std::string Rat::str() const {
  std::ostringstream os;
  os << v_.get_num();
  if (v_.get_den() != 1) os << "/" << v_.get_den();
  return os.str();
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rat(1);
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

Vec Matrix::row(std::size_t r) const {
  Vec v(cols_);
  for (std::size_t c = 0; c < cols_; ++c) v[c] = at(r, c);
  return v;
}

Vec Matrix::apply(const Vec& v) const {
  if (v.size() != cols_) throw std::invalid_argument("apply: dimension mismatch");
  Vec out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Rat s(0);
    for (std::size_t c = 0; c < cols_; ++c) s += at(r, c) * v[c];
    out[r] = s;
  }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
  Matrix p(rows_, o.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      if (at(r, k).is_zero()) continue;
      for (std::size_t c = 0; c < o.cols_; ++c)
        p.at(r, c) += at(r, k) * o.at(k, c);
    }
  return p;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("matrix sum shape mismatch");
  Matrix s(rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) s.e_[i] = e_[i] + o.e_[i];
  return s;
}

Matrix Matrix::operator-(const Matrix& o) const {
  return *this + o.scaled(Rat(-1));
}

Matrix Matrix::scaled(const Rat& c) const {
  Matrix s(rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) s.e_[i] = e_[i] * c;
  return s;
}

bool Matrix::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](const Rat& r) { return r.is_zero(); });
}

Rat Matrix::trace() const {
  if (!is_square()) throw std::invalid_argument("trace of non-square matrix");
  Rat t(0);
  for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

std::optional<Matrix> Matrix::inverse() const {
  if (!is_square()) throw std::invalid_argument("inverse of non-square matrix");
  std::size_t n = rows_;
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug.at(r, c) = at(r, c);
    aug.at(r, n + r) = Rat(1);
  }
  auto [red, rank] = rref(aug);
  if (rank < n) return std::nullopt;
  // Left block might still not be the identity if rank came from the right
  // block; check pivots.
  for (std::size_t i = 0; i < n; ++i)
    if (red.at(i, i) != Rat(1)) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv.at(r, c) = red.at(r, n + c);
  return inv;
}

std::string Matrix::str() const {
  std::ostringstream os;
  for (std::size_t r = 0; r < rows_; ++r) {
    os << "[";
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) os << ", ";
      os << at(r, c).str();
    }
    os << "]\n";
  }
  return os.str();
}

Poly::Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::x() { return Poly({Rat(0), Rat(1)}); }

Poly Poly::constant(const Rat& c) { return Poly({c}); }

Poly Poly::linear_root(const Rat& r) { return Poly({-r, Rat(1)}); }

Rat Poly::leading() const {
  if (c_.empty()) return Rat(0);
  return c_.back();
}

Poly Poly::operator+(const Poly& o) const {
  std::vector<Rat> s(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < s.size(); ++i) s[i] = coeff(i) + o.coeff(i);
  return Poly(std::move(s));
}

Poly Poly::operator-(const Poly& o) const { return *this + o.scaled(Rat(-1)); }

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly();
  std::vector<Rat> p(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) p[i + j] += c_[i] * o.c_[j];
  return Poly(std::move(p));
}

Poly Poly::scaled(const Rat& c) const {
  std::vector<Rat> s(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) s[i] = c_[i] * c;
  return Poly(std::move(s));
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(leading().inverse());
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  std::vector<Rat> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rat(static_cast<long>(i));
  return Poly(std::move(d));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& divisor) const {
  if (divisor.is_zero()) throw std::invalid_argument("polynomial division by zero");
  Poly rem = *this;
  long dd = divisor.degree();
  if (degree() < dd) return {Poly(), rem};
  std::vector<Rat> q(static_cast<std::size_t>(degree() - dd) + 1);
  Rat lead_inv = divisor.leading().inverse();
  while (!rem.is_zero() && rem.degree() >= dd) {
    long shift = rem.degree() - dd;
    Rat f = rem.leading() * lead_inv;
    q[static_cast<std::size_t>(shift)] = f;
    std::vector<Rat> sub(static_cast<std::size_t>(shift), Rat(0));
    sub.push_back(f);
    rem = rem - divisor * Poly(std::move(sub));
  }
  return {Poly(std::move(q)), rem};
}

Rat Poly::eval(const Rat& x) const {
  Rat acc(0);
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

std::string Poly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i].is_zero()) continue;
    Rat c = c_[i];
    if (!first) {
      os << (c.sign() < 0 ? " - " : " + ");
      c = c.abs();
    }
    first = false;
    if (i == 0 || c != Rat(1)) os << c.str();
    if (i > 0) {
      if (c != Rat(1)) os << "*";
      os << "x";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

Poly poly_gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x.divmod(y).second;
    x = y;
    y = r;
  }
  return x.monic();
}

Poly poly_lcm(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  Poly g = poly_gcd(a, b);
  return (a * b).divmod(g).first.monic();
}

PolyXgcd poly_xgcd(const Poly& a, const Poly& b) {
  Poly r0 = a, r1 = b;
  Poly s0 = Poly::constant(Rat(1)), s1;
  Poly t0, t1 = Poly::constant(Rat(1));
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    r0 = r1; r1 = r;
    Poly s2 = s0 - q * s1; s0 = s1; s1 = s2;
    Poly t2 = t0 - q * t1; t0 = t1; t1 = t2;
  }
  if (r0.is_zero()) return {Poly(), s0, t0};
  Rat inv = r0.leading().inverse();
  return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

std::pair<Matrix, std::size_t> rref(const Matrix& m) {
  Matrix a = m;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < a.cols() && rank < a.rows(); ++col) {
    std::size_t pivot = rank;
    while (pivot < a.rows() && a.at(pivot, col).is_zero()) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != rank)
      for (std::size_t c = 0; c < a.cols(); ++c)
        std::swap(a.at(pivot, c), a.at(rank, c));
    Rat inv = a.at(rank, col).inverse();
    for (std::size_t c = 0; c < a.cols(); ++c) a.at(rank, c) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == rank || a.at(r, col).is_zero()) continue;
      Rat f = a.at(r, col);
      for (std::size_t c = 0; c < a.cols(); ++c)
        a.at(r, c) -= f * a.at(rank, c);
    }
    ++rank;
  }
  return {a, rank};
}

Subspace Subspace::span(const std::vector<Vec>& vectors, std::size_t ambient_dim) {
  Matrix m = Matrix::from_rows(vectors, ambient_dim);
  auto [red, rank] = rref(m);
  Subspace s(ambient_dim);
  Matrix basis(rank, ambient_dim);
  for (std::size_t r = 0; r < rank; ++r)
    for (std::size_t c = 0; c < ambient_dim; ++c) basis.at(r, c) = red.at(r, c);
  s.basis_ = basis;
  return s;
}

Subspace Subspace::full(std::size_t ambient_dim) {
  Subspace s(ambient_dim);
  s.basis_ = Matrix::identity(ambient_dim);
  return s;
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
  if (v.size() != ambient_) throw std::invalid_argument("ambient dimension mismatch");
  // RREF basis: coordinate of v along row i is v[pivot_i]; subtract and the
  // residual must vanish.
  Vec coords(dim());
  Vec res = v;
  for (std::size_t r = 0; r < dim(); ++r) {
    std::size_t piv = 0;
    while (piv < ambient_ && basis_.at(r, piv).is_zero()) ++piv;
    coords[r] = res[piv];
    if (!coords[r].is_zero())
      for (std::size_t c = 0; c < ambient_; ++c) res[c] -= coords[r] * basis_.at(r, c);
  }
  for (const Rat& x : res)
    if (!x.is_zero()) return std::nullopt;
  return coords;
}

bool Subspace::contains(const Vec& v) const { return coordinates(v).has_value(); }

bool Subspace::contains(const Subspace& other) const {
  for (std::size_t r = 0; r < other.dim(); ++r)
    if (!contains(other.basis_vector(r))) return false;
  return true;
}

Subspace Subspace::sum(const Subspace& other) const {
  if (ambient_ != other.ambient_) throw std::invalid_argument("ambient dimension mismatch");
  std::vector<Vec> rows;
  for (std::size_t r = 0; r < dim(); ++r) rows.push_back(basis_vector(r));
  for (std::size_t r = 0; r < other.dim(); ++r) rows.push_back(other.basis_vector(r));
  return span(rows, ambient_);
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (ambient_ != other.ambient_) throw std::invalid_argument("ambient dimension mismatch");
  // Solve u*A - w*B = 0 over coefficient vectors (u, w); each kernel element
  // yields the intersection vector u*A.
  std::size_t a = dim(), b = other.dim();
  Matrix sys(ambient_, a + b);
  for (std::size_t c = 0; c < a; ++c)
    for (std::size_t r = 0; r < ambient_; ++r) sys.at(r, c) = basis_.at(c, r);
  for (std::size_t c = 0; c < b; ++c)
    for (std::size_t r = 0; r < ambient_; ++r) sys.at(r, a + c) = -other.basis_.at(c, r);
  Subspace ker = kernel(sys);
  std::vector<Vec> rows;
  for (std::size_t k = 0; k < ker.dim(); ++k) {
    Vec uv = ker.basis_vector(k);
    Vec v(ambient_, Rat(0));
    for (std::size_t i = 0; i < a; ++i)
      for (std::size_t c = 0; c < ambient_; ++c) v[c] += uv[i] * basis_.at(i, c);
    rows.push_back(v);
  }
  return span(rows, ambient_);
}

Subspace kernel(const Matrix& m) {
  auto [red, rank] = rref(m);
  std::size_t n = m.cols();
  std::vector<std::size_t> pivot_col;
  std::vector<bool> is_pivot(n, false);
  for (std::size_t r = 0; r < rank; ++r) {
    std::size_t c = 0;
    while (c < n && red.at(r, c).is_zero()) ++c;
    pivot_col.push_back(c);
    is_pivot[c] = true;
  }
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vec v(n, Rat(0));
    v[free] = Rat(1);
    for (std::size_t r = 0; r < rank; ++r) v[pivot_col[r]] = -red.at(r, free);
    basis.push_back(v);
  }
  return Subspace::span(basis, n);
}

Poly char_poly(const Matrix& m) {
  if (!m.is_square()) throw std::invalid_argument("char_poly of non-square matrix");
  std::size_t n = m.rows();
  // Faddeev-LeVerrier: exact over Q (divisions by integers only).
  std::vector<Rat> coeffs(n + 1);
  coeffs[n] = Rat(1);
  Matrix b = Matrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    Matrix a = m * b;
    Rat c = -(a.trace() / Rat(static_cast<long>(k)));
    coeffs[n - k] = c;
    b = a;
    for (std::size_t i = 0; i < n; ++i) b.at(i, i) += c;
  }
  return Poly(std::move(coeffs));
}

Poly min_poly(const Matrix& m) {
  if (!m.is_square()) throw std::invalid_argument("min_poly of non-square matrix");
  std::size_t n = m.rows();
  if (n == 0) return Poly::constant(Rat(1));
  Poly acc = Poly::constant(Rat(1));
  for (std::size_t i = 0; i < n; ++i) {
    if (static_cast<std::size_t>(acc.degree()) == n) break;
    Vec v(n, Rat(0));
    v[i] = Rat(1);
    // Krylov sequence v, Mv, ... until linear dependence.
    std::vector<Vec> krylov{v};
    while (true) {
      Vec next = m.apply(krylov.back());
      Matrix rows = Matrix::from_rows(krylov, n);
      // Solve rows^T * coeffs = next.
      auto sol = solve(rows.transpose(), next);
      if (sol) {
        std::vector<Rat> pc(krylov.size() + 1);
        for (std::size_t j = 0; j < sol->size(); ++j) pc[j] = -(*sol)[j];
        pc[krylov.size()] = Rat(1);
        acc = poly_lcm(acc, Poly(std::move(pc)));
        break;
      }
      krylov.push_back(next);
    }
  }
  return acc.monic();
}

Poly squarefree_part(const Poly& p) {
  if (p.is_zero()) throw std::invalid_argument("squarefree_part of zero polynomial");
  if (p.degree() == 0) return Poly::constant(Rat(1));
  Poly g = poly_gcd(p, p.derivative());
  return p.divmod(g).first.monic();
}

namespace {

std::vector<mpz_class> positive_divisors(mpz_class n) {
  n = abs(n);
  std::vector<mpz_class> divs;
  if (n == 0) return divs;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      divs.push_back(d);
      if (d * d != n) divs.push_back(n / d);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

}  // namespace

RootReport rational_roots(const Poly& p) {
  if (p.is_zero()) throw std::invalid_argument("rational_roots of zero polynomial");
  RootReport report;
  Poly rem = p;
  // Strip x^k.
  std::size_t zero_mult = 0;
  while (!rem.is_zero() && rem.coeff(0).is_zero()) {
    rem = rem.divmod(Poly::x()).first;
    ++zero_mult;
  }
  if (zero_mult) report.roots.push_back({Rat(0), zero_mult});
  if (rem.degree() > 0) {
    // Clear denominators to an integer polynomial.
    mpz_class lcm_den = 1;
    for (const Rat& c : rem.coeffs()) lcm_den = lcm(lcm_den, c.den());
    std::vector<mpz_class> ic;
    for (const Rat& c : rem.coeffs()) ic.push_back(c.num() * (lcm_den / c.den()));
    auto ps = positive_divisors(ic.front());
    auto qs = positive_divisors(ic.back());
    std::vector<Rat> candidates;
    for (const auto& pp : ps)
      for (const auto& qq : qs) {
        mpq_class q1(pp, qq); q1.canonicalize();
        candidates.push_back(Rat(q1));
        candidates.push_back(Rat(mpq_class(-q1)));
      }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (const Rat& cand : candidates) {
      std::size_t mult = 0;
      while (rem.degree() > 0 && rem.eval(cand).is_zero()) {
        rem = rem.divmod(Poly::linear_root(cand)).first;
        ++mult;
      }
      if (mult) report.roots.push_back({cand, mult});
      if (rem.degree() == 0) break;
    }
  }
  std::sort(report.roots.begin(), report.roots.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  report.fully_split = rem.degree() <= 0;
  return report;
}

Matrix eval_poly_at_matrix(const Poly& p, const Matrix& m) {
  if (!m.is_square()) throw std::invalid_argument("eval_poly_at_matrix: non-square");
  std::size_t n = m.rows();
  Matrix acc(n, n);
  const auto& c = p.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) {
    acc = m * acc;
    for (std::size_t d = 0; d < n; ++d) acc.at(d, d) += c[i];
  }
  return acc;
}

Subspace eigenspace(const Matrix& m, const Rat& lam) {
  if (!m.is_square()) throw std::invalid_argument("eigenspace: non-square");
  Matrix shifted = m;
  for (std::size_t i = 0; i < m.rows(); ++i) shifted.at(i, i) -= lam;
  return kernel(shifted);
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: dimension mismatch");
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, m.cols()) = b[r];
  }
  auto [red, rank] = rref(aug);
  Vec x(m.cols(), Rat(0));
  for (std::size_t r = 0; r < rank; ++r) {
    std::size_t c = 0;
    while (c < aug.cols() && red.at(r, c).is_zero()) ++c;
    if (c == m.cols()) return std::nullopt;  // 0 = 1 row
    x[c] = red.at(r, m.cols());
  }
  return x;
}

}  // namespace solv
