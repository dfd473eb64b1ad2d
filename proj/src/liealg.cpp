#include "solv/liealg.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace solv {

LieAlgebra::LieAlgebra(std::size_t dim, std::vector<std::string> labels)
    : dim_(dim), labels_(std::move(labels)) {
  if (labels_.empty()) {
    for (std::size_t i = 1; i <= dim; ++i) labels_.push_back("e" + std::to_string(i));
  }
  if (labels_.size() != dim_) throw std::invalid_argument("label count mismatch");
}

void LieAlgebra::set_labels(std::vector<std::string> labels) {
  if (labels.size() != dim_) throw std::invalid_argument("label count mismatch");
  labels_ = std::move(labels);
}

void LieAlgebra::set_constant(std::size_t i, std::size_t j, std::size_t k, const Rat& c) {
  if (i >= dim_ || j >= dim_ || k >= dim_) throw std::invalid_argument("index out of range");
  if (i == j) throw std::invalid_argument("bracket of a basis vector with itself");
  Rat value = c;
  if (i > j) {
    std::swap(i, j);
    value = -value;
  }
  if (value.is_zero())
    c_.erase({i, j, k});
  else
    c_[{i, j, k}] = value;
}

Rat LieAlgebra::constant(std::size_t i, std::size_t j, std::size_t k) const {
  if (i == j) return Rat(0);
  Rat sign(1);
  if (i > j) {
    std::swap(i, j);
    sign = Rat(-1);
  }
  auto it = c_.find({i, j, k});
  return it == c_.end() ? Rat(0) : sign * it->second;
}

Vec LieAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
  Vec v(dim_, Rat(0));
  for (std::size_t k = 0; k < dim_; ++k) v[k] = constant(i, j, k);
  return v;
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
  if (x.size() != dim_ || y.size() != dim_)
    throw std::invalid_argument("bracket: dimension mismatch");
  Vec out(dim_, Rat(0));
  for (const auto& [key, c] : c_) {
    auto [i, j, k] = key;
    out[k] += c * (x[i] * y[j] - x[j] * y[i]);
  }
  return out;
}

Matrix LieAlgebra::ad(const Vec& x) const {
  Matrix m(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    Vec col = bracket(x, basis_vector(j));
    for (std::size_t k = 0; k < dim_; ++k) m.at(k, j) = col[k];
  }
  return m;
}

Matrix LieAlgebra::ad_basis(std::size_t i) const { return ad(basis_vector(i)); }

Vec LieAlgebra::basis_vector(std::size_t i) const {
  Vec v(dim_, Rat(0));
  v[i] = Rat(1);
  return v;
}

std::string LieAlgebra::str() const {
  std::ostringstream os;
  os << "dim " << dim_;
  for (const auto& [key, c] : c_) {
    auto [i, j, k] = key;
    os << "; [" << labels_[i] << "," << labels_[j] << "] += " << c.str() << " "
       << labels_[k];
  }
  return os.str();
}

ValidationReport validate(const LieAlgebra& g) {
  std::size_t n = g.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Vec r = g.bracket(g.bracket_basis(i, j), g.basis_vector(k));
        Vec r2 = g.bracket(g.bracket_basis(j, k), g.basis_vector(i));
        Vec r3 = g.bracket(g.bracket_basis(k, i), g.basis_vector(j));
        bool zero = true;
        Vec res(n, Rat(0));
        for (std::size_t t = 0; t < n; ++t) {
          res[t] = r[t] + r2[t] + r3[t];
          if (!res[t].is_zero()) zero = false;
        }
        if (!zero) {
          ValidationReport rep;
          rep.ok = false;
          rep.i = i; rep.j = j; rep.k = k;
          rep.residual = res;
          std::ostringstream os;
          os << "Jacobi identity fails on basis triple (" << g.labels()[i] << ", "
             << g.labels()[j] << ", " << g.labels()[k] << ")";
          rep.message = os.str();
          return rep;
        }
      }
  return {};
}

AlgebraSubspace product_space(const LieAlgebra& g, const AlgebraSubspace& a,
                              const AlgebraSubspace& b) {
  if (a.parent != b.parent) throw std::invalid_argument("product_space: parent mismatch");
  std::vector<Vec> spans;
  for (std::size_t r = 0; r < a.space.dim(); ++r)
    for (std::size_t s = 0; s < b.space.dim(); ++s)
      spans.push_back(g.bracket(a.space.basis_vector(r), b.space.basis_vector(s)));
  return {&g, Subspace::span(spans, g.dim())};
}

namespace {

SeriesReport series_impl(const LieAlgebra& g, SeriesReport::Kind kind) {
  SeriesReport rep;
  rep.kind = kind;
  AlgebraSubspace cur{&g, Subspace::full(g.dim())};
  AlgebraSubspace whole = cur;
  rep.terms.push_back(cur);
  rep.dims.push_back(cur.space.dim());
  while (true) {
    AlgebraSubspace next = kind == SeriesReport::Kind::LowerCentral
                               ? product_space(g, whole, cur)
                               : product_space(g, cur, cur);
    if (next.space == cur.space) break;
    rep.terms.push_back(next);
    rep.dims.push_back(next.space.dim());
    cur = next;
  }
  return rep;
}

}  // namespace

SeriesReport lower_central_series(const LieAlgebra& g) {
  return series_impl(g, SeriesReport::Kind::LowerCentral);
}

SeriesReport derived_series(const LieAlgebra& g) {
  return series_impl(g, SeriesReport::Kind::Derived);
}

AlgebraSubspace center(const LieAlgebra& g) {
  std::size_t n = g.dim();
  Matrix stacked(n * n, n);
  for (std::size_t i = 0; i < n; ++i) {
    Matrix adi = g.ad_basis(i);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) stacked.at(i * n + r, c) = adi.at(r, c);
  }
  return {&g, kernel(stacked)};
}

bool is_nilpotent(const LieAlgebra& g) {
  return lower_central_series(g).dims.back() == 0;
}

bool is_solvable(const LieAlgebra& g) {
  return derived_series(g).dims.back() == 0;
}

bool is_abelian(const LieAlgebra& g) { return g.constants().empty(); }

std::vector<std::size_t> lex_complement_indices(const Subspace& s) {
  std::size_t n = s.ambient_dim();
  std::vector<Vec> rows;
  for (std::size_t r = 0; r < s.dim(); ++r) rows.push_back(s.basis_vector(r));
  std::size_t rank = s.dim();
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n && rank < n; ++i) {
    Vec unit(n, Rat(0));
    unit[i] = Rat(1);
    rows.push_back(unit);
    Subspace bigger = Subspace::span(rows, n);
    if (bigger.dim() > rank) {
      out.push_back(i);
      rank = bigger.dim();
    } else {
      rows.pop_back();
    }
  }
  return out;
}

QuotientResult quotient(const LieAlgebra& g, const AlgebraSubspace& ideal) {
  const Subspace& id = ideal.space;
  if (id.ambient_dim() != g.dim()) throw std::invalid_argument("quotient: ambient mismatch");
  // Ideal check.
  AlgebraSubspace whole{&g, Subspace::full(g.dim())};
  AlgebraSubspace prod = product_space(g, whole, ideal);
  if (!id.contains(prod.space))
    throw std::invalid_argument("quotient: subspace is not an ideal");

  std::vector<std::size_t> compl_idx = lex_complement_indices(id);
  std::size_t q = compl_idx.size();
  std::size_t n = g.dim();

  // Basis of g: ideal RREF rows first, then complement unit vectors. The
  // projection reads off the complement coordinates.
  std::vector<Vec> rows;
  for (std::size_t r = 0; r < id.dim(); ++r) rows.push_back(id.basis_vector(r));
  for (std::size_t a : compl_idx) {
    Vec unit(n, Rat(0));
    unit[a] = Rat(1);
    rows.push_back(unit);
  }
  Matrix b = Matrix::from_rows(rows, n);
  auto bt_inv = b.transpose().inverse();
  if (!bt_inv) throw InvariantError("quotient: basis assembly singular");
  Matrix proj(q, n);
  for (std::size_t r = 0; r < q; ++r)
    for (std::size_t c = 0; c < n; ++c) proj.at(r, c) = bt_inv->at(id.dim() + r, c);
  Matrix sect(n, q);
  for (std::size_t a = 0; a < q; ++a) sect.at(compl_idx[a], a) = Rat(1);

  std::vector<std::string> labels;
  for (std::size_t a : compl_idx) labels.push_back(g.labels()[a]);
  LieAlgebra qa(q, labels);
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t bidx = a + 1; bidx < q; ++bidx) {
      Vec br = g.bracket_basis(compl_idx[a], compl_idx[bidx]);
      Vec pv = proj.apply(br);
      for (std::size_t k = 0; k < q; ++k)
        if (!pv[k].is_zero()) qa.set_constant(a, bidx, k, pv[k]);
    }
  return {qa, proj, sect, compl_idx};
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  std::vector<std::string> labels;
  std::size_t n = a.dim() + b.dim();
  for (std::size_t i = 1; i <= n; ++i) labels.push_back("e" + std::to_string(i));
  LieAlgebra s(n, labels);
  for (const auto& [key, c] : a.constants()) {
    auto [i, j, k] = key;
    s.set_constant(i, j, k, c);
  }
  for (const auto& [key, c] : b.constants()) {
    auto [i, j, k] = key;
    s.set_constant(a.dim() + i, a.dim() + j, a.dim() + k, c);
  }
  return s;
}

std::optional<std::string> check_action(const LieAlgebra& n, const LieAlgebra& h,
                                        const DerivationAction& act) {
  if (act.matrices.size() != h.dim()) return "action has wrong number of matrices";
  for (const Matrix& m : act.matrices)
    if (m.rows() != n.dim() || m.cols() != n.dim()) return "action matrix has wrong shape";
  // Leibniz: M [u,v] = [M u, v] + [u, M v].
  for (std::size_t t = 0; t < h.dim(); ++t) {
    const Matrix& m = act.matrices[t];
    for (std::size_t i = 0; i < n.dim(); ++i)
      for (std::size_t j = i + 1; j < n.dim(); ++j) {
        Vec lhs = m.apply(n.bracket_basis(i, j));
        Vec rhs1 = n.bracket(m.apply(n.basis_vector(i)), n.basis_vector(j));
        Vec rhs2 = n.bracket(n.basis_vector(i), m.apply(n.basis_vector(j)));
        for (std::size_t k = 0; k < n.dim(); ++k)
          if (lhs[k] != rhs1[k] + rhs2[k]) {
            std::ostringstream os;
            os << "Leibniz identity fails for generator " << h.labels()[t]
               << " on pair (" << n.labels()[i] << ", " << n.labels()[j] << ")";
            return os.str();
          }
      }
  }
  // Homomorphism: matrix of [x,y]_h equals the commutator of matrices.
  for (std::size_t i = 0; i < h.dim(); ++i)
    for (std::size_t j = i + 1; j < h.dim(); ++j) {
      Matrix lhs(n.dim(), n.dim());
      Vec hb = h.bracket_basis(i, j);
      for (std::size_t t = 0; t < h.dim(); ++t)
        if (!hb[t].is_zero()) lhs = lhs + act.matrices[t].scaled(hb[t]);
      Matrix rhs = act.matrices[i] * act.matrices[j] - act.matrices[j] * act.matrices[i];
      if (!(lhs == rhs)) {
        std::ostringstream os;
        os << "action is not a Lie homomorphism on pair (" << h.labels()[i] << ", "
           << h.labels()[j] << ")";
        return os.str();
      }
    }
  return std::nullopt;
}

LieAlgebra semidirect_product(const LieAlgebra& n, const LieAlgebra& h,
                              const DerivationAction& act) {
  if (auto err = check_action(n, h, act))
    throw InvariantError("semidirect_product: " + *err);
  LieAlgebra s = direct_sum(n, h);
  for (std::size_t t = 0; t < h.dim(); ++t)
    for (std::size_t j = 0; j < n.dim(); ++j) {
      Vec col = act.matrices[t].apply(n.basis_vector(j));
      for (std::size_t k = 0; k < n.dim(); ++k)
        if (!col[k].is_zero()) s.set_constant(n.dim() + t, j, k, col[k]);
    }
  ValidationReport rep = validate(s);
  if (!rep.ok) throw InvariantError("semidirect_product: " + rep.message);
  return s;
}

namespace {

std::optional<Vec> common_eigenvector(const LieAlgebra& q) {
  std::size_t n = q.dim();
  std::vector<Matrix> ads;
  for (std::size_t i = 0; i < n; ++i) ads.push_back(q.ad_basis(i));
  // Depth-first intersection of rational eigenspaces.
  std::function<std::optional<Vec>(std::size_t, const Subspace&)> go =
      [&](std::size_t gen, const Subspace& s) -> std::optional<Vec> {
    if (s.dim() == 0) return std::nullopt;
    if (gen == n) return s.basis_vector(0);
    RootReport roots = rational_roots(char_poly(ads[gen]));
    for (const auto& [lam, mult] : roots.roots) {
      (void)mult;
      Subspace t = s.intersect(eigenspace(ads[gen], lam));
      if (auto v = go(gen + 1, t)) return v;
    }
    return std::nullopt;
  };
  return go(0, Subspace::full(n));
}

}  // namespace

TriangularizeResult triangularize(const LieAlgebra& g) {
  TriangularizeResult res;
  if (!is_solvable(g)) {
    res.reason = "not solvable";
    return res;
  }
  std::size_t n = g.dim();
  // Ascending chain of ideals of g, built by repeatedly finding a common
  // eigenvector in the successive quotients (constructive Lie theorem
  // restricted to Q).
  std::vector<Subspace> ascending{Subspace(n)};  // 0
  LieAlgebra q = g;
  Matrix proj = Matrix::identity(n);  // g -> current quotient
  while (q.dim() > 0) {
    auto v = common_eigenvector(q);
    if (!v) {
      res.reason = "no rational common eigenvector";
      return res;
    }
    AlgebraSubspace line{&q, Subspace::span({*v}, q.dim())};
    QuotientResult qr = quotient(q, line);
    Matrix next_proj = qr.projection * proj;
    ascending.push_back(kernel(next_proj));
    q = qr.algebra;
    proj = next_proj;
  }
  std::reverse(ascending.begin(), ascending.end());
  res.ok = true;
  res.flag = std::move(ascending);
  return res;
}

Matrix adjoint_on(const LieAlgebra& g, const Vec& x, const AlgebraSubspace& inv) {
  const Subspace& s = inv.space;
  std::size_t d = s.dim();
  Matrix m(d, d);
  for (std::size_t j = 0; j < d; ++j) {
    Vec w = g.bracket(x, s.basis_vector(j));
    auto coords = s.coordinates(w);
    if (!coords)
      throw std::invalid_argument("adjoint_on: subspace is not ad(x)-invariant");
    for (std::size_t k = 0; k < d; ++k) m.at(k, j) = (*coords)[k];
  }
  return m;
}

LieAlgebra subalgebra(const LieAlgebra& g, const Subspace& s) {
  std::size_t d = s.dim();
  LieAlgebra h(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      Vec w = g.bracket(s.basis_vector(i), s.basis_vector(j));
      auto coords = s.coordinates(w);
      if (!coords)
        throw std::invalid_argument("subalgebra: subspace is not bracket-closed");
      for (std::size_t k = 0; k < d; ++k)
        if (!(*coords)[k].is_zero()) h.set_constant(i, j, k, (*coords)[k]);
    }
  return h;
}

LieAlgebra change_basis(const LieAlgebra& g, const Matrix& p) {
  std::size_t n = g.dim();
  if (p.rows() != n || p.cols() != n)
    throw std::invalid_argument("change_basis: shape mismatch");
  auto pt_inv = p.transpose().inverse();
  if (!pt_inv) throw std::invalid_argument("change_basis: singular matrix");
  LieAlgebra h(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec w = g.bracket(p.row(i), p.row(j));
      Vec coords = pt_inv->apply(w);
      for (std::size_t k = 0; k < n; ++k)
        if (!coords[k].is_zero()) h.set_constant(i, j, k, coords[k]);
    }
  return h;
}

LieAlgebra abelian_algebra(std::size_t dim) { return LieAlgebra(dim); }

}  // namespace solv
