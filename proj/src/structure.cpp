#include "solv/structure.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace solv {

std::string Fingerprint::str() const {
  std::ostringstream os;
  auto list = [&](const std::vector<std::size_t>& v) {
    os << "[";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << "]";
  };
  os << "dim=" << dim << " lcs=";
  list(lcs_dims);
  os << " derived=";
  list(derived_dims);
  os << " center=" << center_dim << " exprad=" << exprad_dim << " cone=" << cone_dim
     << " nilpotent=" << (nilpotent ? "yes" : "no")
     << " completely_solvable=" << (completely_solvable ? "yes" : "no");
  return os.str();
}

Fingerprint fingerprint(const LieAlgebra& g) {
  Fingerprint fp;
  fp.dim = g.dim();
  fp.lcs_dims = lower_central_series(g).dims;
  fp.derived_dims = derived_series(g).dims;
  fp.center_dim = center(g).space.dim();
  fp.exprad_dim = fp.lcs_dims.back();
  fp.cone_dim = fp.dim - fp.exprad_dim;
  fp.nilpotent = fp.lcs_dims.back() == 0;
  fp.completely_solvable = triangularize(g).ok;
  return fp;
}

EuclideanSplit split_euclidean(const LieAlgebra& g) {
  std::size_t n = g.dim();
  AlgebraSubspace z = center(g);
  AlgebraSubspace whole{&g, Subspace::full(n)};
  AlgebraSubspace derived = product_space(g, whole, whole);
  Subspace zd = z.space.intersect(derived.space);

  // Euclidean directions: greedily extend zd to the center.
  std::vector<Vec> grown;
  for (std::size_t r = 0; r < zd.dim(); ++r) grown.push_back(zd.basis_vector(r));
  std::size_t rank = zd.dim();
  std::vector<Vec> euclid;
  for (std::size_t r = 0; r < z.space.dim(); ++r) {
    Vec cand = z.space.basis_vector(r);
    grown.push_back(cand);
    Subspace test = Subspace::span(grown, n);
    if (test.dim() > rank) {
      rank = test.dim();
      euclid.push_back(cand);
    } else {
      grown.pop_back();
    }
  }
  std::size_t k = euclid.size();

  // Complement ideal: derived subalgebra extended away from the Euclidean
  // part by lexicographically first unit vectors.
  std::vector<Vec> cpl;
  for (std::size_t r = 0; r < derived.space.dim(); ++r)
    cpl.push_back(derived.space.basis_vector(r));
  Subspace covered = Subspace::span(grown, n);  // zd + euclid = center
  covered = covered.sum(derived.space);
  std::vector<Vec> cpl_grown = cpl;
  Subspace cpl_span = Subspace::span(cpl, n);
  for (std::size_t i = 0; i < n && cpl_span.dim() + k < n; ++i) {
    Vec unit(n, Rat(0));
    unit[i] = Rat(1);
    std::vector<Vec> probe = cpl_grown;
    probe.push_back(unit);
    Subspace bigger = Subspace::span(probe, n);
    if (bigger.dim() > cpl_span.dim()) {
      // Keep the complement transverse to the Euclidean part.
      std::vector<Vec> withe = probe;
      for (const Vec& e : euclid) withe.push_back(e);
      if (Subspace::span(withe, n).dim() == bigger.dim() + k) {
        cpl_grown = probe;
        cpl_span = bigger;
      }
    }
  }
  if (cpl_span.dim() + k != n)
    throw InvariantError("split_euclidean: complement construction failed");

  EuclideanSplit out;
  out.euclidean_dim = k;
  out.complement_space = cpl_span;
  out.complement = subalgebra(g, cpl_span);
  std::vector<Vec> rows = euclid;
  for (std::size_t r = 0; r < cpl_span.dim(); ++r) rows.push_back(cpl_span.basis_vector(r));
  out.change_of_basis = Matrix::from_rows(rows, n);
  // Exact verification: the transported algebra must be the block sum.
  LieAlgebra transported = change_basis(g, out.change_of_basis);
  LieAlgebra expected = direct_sum(abelian_algebra(k), out.complement);
  if (!(transported == expected))
    throw InvariantError("split_euclidean: transported constants are not block-diagonal");
  return out;
}

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

SplitResult split_factors(const LieAlgebra& g) {
  EuclideanSplit eu = split_euclidean(g);
  const LieAlgebra& c = eu.complement;
  std::size_t m = c.dim();

  UnionFind uf(m);
  for (const auto& [key, val] : c.constants()) {
    (void)val;
    auto [i, j, k] = key;
    uf.unite(i, j);
    uf.unite(j, k);
  }
  // Components ordered by smallest member index.
  std::map<std::size_t, std::vector<std::size_t>> comps;
  for (std::size_t i = 0; i < m; ++i) comps[uf.find(i)].push_back(i);
  std::vector<std::vector<std::size_t>> blocks;
  for (auto& [root, members] : comps) {
    (void)root;
    std::sort(members.begin(), members.end());
    blocks.push_back(members);
  }
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });

  SplitResult out;
  out.euclidean_dim = eu.euclidean_dim;
  std::vector<Vec> rows;
  for (std::size_t r = 0; r < eu.euclidean_dim; ++r)
    rows.push_back(eu.change_of_basis.row(r));
  for (const auto& block : blocks) {
    std::vector<Vec> sub_rows;
    for (std::size_t idx : block) {
      rows.push_back(eu.complement_space.basis_vector(idx));
      Vec unit(m, Rat(0));
      unit[idx] = Rat(1);
      sub_rows.push_back(unit);
    }
    out.factors.push_back(subalgebra(c, Subspace::span(sub_rows, m)));
  }
  out.change_of_basis = Matrix::from_rows(rows, g.dim());

  LieAlgebra expected = abelian_algebra(eu.euclidean_dim);
  for (const LieAlgebra& f : out.factors) expected = direct_sum(expected, f);
  if (!(change_basis(g, out.change_of_basis) == expected))
    throw InvariantError("split_factors: transported constants do not recombine");

  out.complete = (out.euclidean_dim > 0) || (out.factors.size() != 1);
  return out;
}

namespace {

// ---------- recognizer machinery ----------

Vec lift(const Subspace& s, const Vec& coords) {
  Vec v(s.ambient_dim(), Rat(0));
  for (std::size_t r = 0; r < s.dim(); ++r) {
    if (coords[r].is_zero()) continue;
    Vec b = s.basis_vector(r);
    for (std::size_t c = 0; c < v.size(); ++c) v[c] += coords[r] * b[c];
  }
  return v;
}

bool is_zero_vec(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rat& r) { return r.is_zero(); });
}

Vec scale_vec(const Vec& v, const Rat& c) {
  Vec out = v;
  for (Rat& x : out) x *= c;
  return out;
}

Vec add_vec(const Vec& a, const Vec& b) {
  Vec out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return out;
}

std::optional<RecognizerResult> certify(const LieAlgebra& g, const std::vector<Vec>& rows,
                                        const LieAlgebra& target, ParamMap params) {
  Matrix p = Matrix::from_rows(rows, g.dim());
  if (!p.inverse()) return std::nullopt;
  if (!(change_basis(g, p) == target)) return std::nullopt;
  return RecognizerResult{std::move(params), p};
}

struct RankOne {
  AlgebraSubspace n;
  LieAlgebra n_alg;
  Vec rep;     // canonical section of the quotient generator
  Matrix m;    // ad(rep) restricted to n, in n's RREF basis
  Matrix s, nil;
};

std::optional<RankOne> rank_one(const LieAlgebra& g) {
  if (!is_solvable(g)) return std::nullopt;
  AlgebraSubspace n = exponential_radical(g);
  if (g.dim() - n.space.dim() != 1) return std::nullopt;
  RankOne out;
  out.n = n;
  out.n_alg = subalgebra(g, n.space);
  QuotientResult qr = quotient(g, n);
  out.rep = qr.section.apply(qr.algebra.basis_vector(0));
  out.m = adjoint_on(g, out.rep, n);
  JordanPair jc = jordan_chevalley(out.m);
  out.s = jc.semisimple;
  out.nil = jc.nilpotent;
  return out;
}

// Eigenvalue -> queue of eigenvectors in the parent algebra's coordinates.
struct EigPool {
  std::vector<std::pair<Rat, std::vector<Vec>>> spaces;  // ascending eigenvalue

  std::optional<Vec> pop(const Rat& lam) {
    for (auto& [val, vecs] : spaces)
      if (val == lam && !vecs.empty()) {
        Vec v = vecs.front();
        vecs.erase(vecs.begin());
        return v;
      }
    return std::nullopt;
  }
};

// Full rational eigen-decomposition of m (acting on the subspace n of g,
// vectors lifted to g coordinates); nullopt unless m is diagonalizable
// with fully rational spectrum.
std::optional<EigPool> eig_pool(const Matrix& m, const Subspace& n) {
  RootReport roots = rational_roots(char_poly(m));
  if (!roots.fully_split) return std::nullopt;
  EigPool pool;
  std::size_t total = 0;
  for (const auto& [lam, mult] : roots.roots) {
    (void)mult;
    Subspace es = eigenspace(m, lam);
    std::vector<Vec> vecs;
    for (std::size_t r = 0; r < es.dim(); ++r)
      vecs.push_back(lift(n, es.basis_vector(r)));
    total += es.dim();
    pool.spaces.push_back({lam, std::move(vecs)});
  }
  if (total != m.rows()) return std::nullopt;  // not diagonalizable
  return pool;
}

std::vector<Rat> spectrum_values(const Matrix& s) {
  RootReport roots = rational_roots(char_poly(s));
  std::vector<Rat> vals;
  for (const auto& [lam, mult] : roots.roots)
    for (std::size_t i = 0; i < mult; ++i) vals.push_back(lam);
  return vals;
}

// ---------- generators ----------

LieAlgebra gen_a2(const ParamMap&) {
  LieAlgebra g(2);
  g.set_constant(1, 0, 0, Rat(1));
  return g;
}

LieAlgebra gen_heis(const ParamMap&) {
  LieAlgebra g(3);
  g.set_constant(0, 1, 2, Rat(1));
  return g;
}

LieAlgebra gen_g3_3(const ParamMap&) {
  LieAlgebra g(3);
  g.set_constant(2, 0, 0, Rat(1));
  g.set_constant(2, 1, 1, Rat(1));
  return g;
}

LieAlgebra gen_g3_5(const ParamMap& p) {
  LieAlgebra g(3);
  g.set_constant(2, 0, 0, Rat(1));
  g.set_constant(2, 1, 1, p.at("alpha"));
  return g;
}

LieAlgebra gen_g4_5(const ParamMap& p) {
  LieAlgebra g(4);
  g.set_constant(3, 0, 0, Rat(1));
  g.set_constant(3, 1, 1, p.at("alpha"));
  g.set_constant(3, 2, 2, p.at("beta"));
  return g;
}

LieAlgebra gen_g4_8(const ParamMap&) {
  LieAlgebra g(4);
  g.set_constant(0, 1, 2, Rat(1));
  g.set_constant(3, 0, 0, Rat(1));
  g.set_constant(3, 1, 1, Rat(-1));
  return g;
}

LieAlgebra gen_g4_9(const ParamMap& p) {
  Rat beta = p.at("beta");
  LieAlgebra g(4);
  g.set_constant(0, 1, 2, Rat(1));
  g.set_constant(3, 0, 0, Rat(1));
  g.set_constant(3, 1, 1, beta);
  g.set_constant(3, 2, 2, Rat(1) + beta);
  return g;
}

LieAlgebra gen_g4_9_0(const ParamMap&) {
  LieAlgebra g(4);
  g.set_constant(3, 0, 0, Rat(1));
  g.set_constant(3, 1, 1, Rat(1));
  g.set_constant(1, 2, 0, Rat(1));
  return g;
}

LieAlgebra gen_g5_19(const ParamMap& p) {
  LieAlgebra g(5);
  g.set_constant(0, 1, 2, Rat(1));
  g.set_constant(4, 0, 0, Rat(1));
  g.set_constant(4, 2, 2, Rat(1));
  g.set_constant(4, 3, 3, p.at("beta"));
  return g;
}

// ---------- recognizers ----------

std::optional<RecognizerResult> rec_a2(const LieAlgebra& g) {
  if (g.dim() != 2) return std::nullopt;
  AlgebraSubspace whole{&g, Subspace::full(2)};
  AlgebraSubspace derived = product_space(g, whole, whole);
  if (derived.space.dim() != 1) return std::nullopt;
  Vec w = derived.space.basis_vector(0);
  std::vector<std::size_t> compl_idx = lex_complement_indices(derived.space);
  Vec x = g.basis_vector(compl_idx[0]);
  Vec bx = g.bracket(x, w);
  auto coords = derived.space.coordinates(bx);
  if (!coords || (*coords)[0].is_zero()) return std::nullopt;
  Vec f2 = scale_vec(x, (*coords)[0].inverse());
  return certify(g, {w, f2}, gen_a2({}), {});
}

std::optional<RecognizerResult> rec_heis(const LieAlgebra& g) {
  if (g.dim() != 3 || !is_heisenberg(g) || !is_nilpotent(g)) return std::nullopt;
  AlgebraSubspace z = center(g);
  std::vector<std::size_t> compl_idx = lex_complement_indices(z.space);
  Vec u = g.basis_vector(compl_idx[0]);
  Vec v = g.basis_vector(compl_idx[1]);
  Vec w = g.bracket(u, v);
  auto coords = z.space.coordinates(w);
  if (!coords || (*coords)[0].is_zero()) return std::nullopt;
  Vec f2 = scale_vec(v, (*coords)[0].inverse());
  return certify(g, {u, f2, z.space.basis_vector(0)}, gen_heis({}), {});
}

std::optional<RecognizerResult> rec_g3_3(const LieAlgebra& g) {
  if (g.dim() != 3) return std::nullopt;
  auto r1 = rank_one(g);
  if (!r1 || !is_abelian(r1->n_alg) || !r1->nil.is_zero()) return std::nullopt;
  std::vector<Rat> vals = spectrum_values(r1->m);
  if (vals.size() != 2 || vals[0] != vals[1] || vals[0].is_zero()) return std::nullopt;
  Rat lam = vals[0];
  return certify(g,
                 {lift(r1->n.space, {Rat(1), Rat(0)}), lift(r1->n.space, {Rat(0), Rat(1)}),
                  scale_vec(r1->rep, lam.inverse())},
                 gen_g3_3({}), {});
}

std::optional<RecognizerResult> rec_g3_5(const LieAlgebra& g) {
  if (g.dim() != 3) return std::nullopt;
  auto r1 = rank_one(g);
  if (!r1 || !is_abelian(r1->n_alg) || !r1->nil.is_zero()) return std::nullopt;
  std::vector<Rat> vals = spectrum_values(r1->m);
  if (vals.size() != 2 || vals[0] == vals[1]) return std::nullopt;
  if (vals[0].is_zero() || vals[1].is_zero()) return std::nullopt;
  for (auto [w1, w2] : {std::pair{vals[0], vals[1]}, std::pair{vals[1], vals[0]}}) {
    Rat alpha = w2 / w1;
    if (alpha < Rat(-1) || alpha >= Rat(1) || alpha.is_zero()) continue;
    auto pool = eig_pool(r1->m, r1->n.space);
    if (!pool) return std::nullopt;
    auto f1 = pool->pop(w1);
    auto f2 = pool->pop(w2);
    if (!f1 || !f2) continue;
    auto res = certify(g, {*f1, *f2, scale_vec(r1->rep, w1.inverse())},
                       gen_g3_5({{"alpha", alpha}}), {{"alpha", alpha}});
    if (res) return res;
  }
  return std::nullopt;
}

std::optional<RecognizerResult> rec_g4_5(const LieAlgebra& g) {
  if (g.dim() != 4) return std::nullopt;
  auto r1 = rank_one(g);
  if (!r1 || !is_abelian(r1->n_alg) || !r1->nil.is_zero()) return std::nullopt;
  std::vector<Rat> vals = spectrum_values(r1->m);
  if (vals.size() != 3) return std::nullopt;
  for (const Rat& v : vals)
    if (v.is_zero()) return std::nullopt;
  Rat vmin = *std::min_element(vals.begin(), vals.end());
  Rat vmax = *std::max_element(vals.begin(), vals.end());
  // Scale by the eigenvalue of largest magnitude (positive preferred) so
  // that the normalized weights lie in [-1, 1] with maximum 1.
  Rat w = (vmax >= -vmin) ? vmax : vmin;
  std::vector<Rat> rest;
  bool removed = false;
  for (const Rat& v : vals) {
    if (!removed && v == w) {
      removed = true;
      continue;
    }
    rest.push_back(v / w);
  }
  std::sort(rest.begin(), rest.end());
  Rat alpha = rest[0], beta = rest[1];
  if (alpha < Rat(-1) || beta > Rat(1)) return std::nullopt;
  auto pool = eig_pool(r1->m, r1->n.space);
  if (!pool) return std::nullopt;
  auto f1 = pool->pop(w);
  auto f2 = pool->pop(alpha * w);
  auto f3 = pool->pop(beta * w);
  if (!f1 || !f2 || !f3) return std::nullopt;
  ParamMap params{{"alpha", alpha}, {"beta", beta}};
  return certify(g, {*f1, *f2, *f3, scale_vec(r1->rep, w.inverse())}, gen_g4_5(params),
                 params);
}

std::optional<RecognizerResult> rec_g4_8(const LieAlgebra& g) {
  if (g.dim() != 4) return std::nullopt;
  auto r1 = rank_one(g);
  if (!r1 || !is_heisenberg(r1->n_alg) || !r1->nil.is_zero()) return std::nullopt;
  std::vector<Rat> vals = spectrum_values(r1->m);
  std::sort(vals.begin(), vals.end());
  if (vals.size() != 3) return std::nullopt;
  if (!vals[1].is_zero() || vals[2].is_zero() || vals[0] != -vals[2]) return std::nullopt;
  Rat c = vals[2];
  auto pool = eig_pool(r1->m, r1->n.space);
  if (!pool) return std::nullopt;
  auto f1 = pool->pop(c);
  auto f2 = pool->pop(-c);
  if (!f1 || !f2) return std::nullopt;
  Vec f3 = g.bracket(*f1, *f2);
  if (is_zero_vec(f3)) return std::nullopt;
  return certify(g, {*f1, *f2, f3, scale_vec(r1->rep, c.inverse())}, gen_g4_8({}), {});
}

std::optional<RecognizerResult> rec_g4_9(const LieAlgebra& g) {
  if (g.dim() != 4) return std::nullopt;
  auto r1 = rank_one(g);
  if (!r1 || !is_heisenberg(r1->n_alg) || !r1->nil.is_zero()) return std::nullopt;
  // Weight of the center of the nilradical.
  AlgebraSubspace zc = center(r1->n_alg);
  Vec z_n = zc.space.basis_vector(0);
  Vec mz = r1->m.apply(z_n);
  // z is an eigenvector; read its eigenvalue off the first nonzero entry.
  Rat lam_z(0);
  for (std::size_t i = 0; i < z_n.size(); ++i)
    if (!z_n[i].is_zero()) {
      lam_z = mz[i] / z_n[i];
      break;
    }
  std::vector<Rat> vals = spectrum_values(r1->m);
  std::vector<Rat> rest;
  bool removed = false;
  for (const Rat& v : vals) {
    if (!removed && v == lam_z) {
      removed = true;
      continue;
    }
    rest.push_back(v);
  }
  if (!removed || rest.size() != 2) return std::nullopt;
  if (rest[0] + rest[1] != lam_z) return std::nullopt;
  for (auto [a, b] : {std::pair{rest[0], rest[1]}, std::pair{rest[1], rest[0]}}) {
    if (a.is_zero() || b.is_zero()) return std::nullopt;
    Rat beta = b / a;
    if (beta <= Rat(-1) || beta > Rat(1) || beta.is_zero()) continue;
    auto pool = eig_pool(r1->m, r1->n.space);
    if (!pool) return std::nullopt;
    auto f1 = pool->pop(a);
    auto f2 = pool->pop(b);
    if (!f1 || !f2) continue;
    Vec f3 = g.bracket(*f1, *f2);
    if (is_zero_vec(f3)) continue;
    ParamMap params{{"beta", beta}};
    auto res = certify(g, {*f1, *f2, f3, scale_vec(r1->rep, a.inverse())},
                       gen_g4_9(params), params);
    if (res) return res;
  }
  return std::nullopt;
}

// Shared scaffolding for the two rank-two recognizers: canonical quotient
// representatives and their restricted adjoint actions.
struct RankTwo {
  AlgebraSubspace n;
  LieAlgebra n_alg;
  std::vector<Vec> reps;
  std::vector<Matrix> ms;
};

std::optional<RankTwo> rank_two_abelian(const LieAlgebra& g, std::size_t nil_dim) {
  if (!is_solvable(g)) return std::nullopt;
  RankTwo out;
  out.n = exponential_radical(g);
  if (out.n.space.dim() != nil_dim || g.dim() - nil_dim != 2) return std::nullopt;
  out.n_alg = subalgebra(g, out.n.space);
  if (!is_abelian(out.n_alg)) return std::nullopt;
  QuotientResult qr = quotient(g, out.n);
  if (!is_abelian(qr.algebra)) return std::nullopt;
  for (std::size_t a = 0; a < 2; ++a) {
    Vec rep = qr.section.apply(qr.algebra.basis_vector(a));
    out.reps.push_back(rep);
    out.ms.push_back(adjoint_on(g, rep, out.n));
  }
  return out;
}

// Solve N_t = gamma * N_u entrywise; nullopt when not colinear.
std::optional<Rat> colinear_factor(const Matrix& nt, const Matrix& nu) {
  std::optional<Rat> gamma;
  for (std::size_t r = 0; r < nt.rows(); ++r)
    for (std::size_t c = 0; c < nt.cols(); ++c) {
      const Rat& a = nt.at(r, c);
      const Rat& b = nu.at(r, c);
      if (b.is_zero()) {
        if (!a.is_zero()) return std::nullopt;
        continue;
      }
      Rat q = a / b;
      if (gamma && *gamma != q) return std::nullopt;
      gamma = q;
    }
  return gamma ? gamma : std::optional<Rat>(Rat(0));
}

std::optional<RecognizerResult> rec_g4_9_0(const LieAlgebra& g) {
  if (g.dim() != 4) return std::nullopt;
  auto r2 = rank_two_abelian(g, 2);
  if (!r2) return std::nullopt;
  // Each action must be scalar + nilpotent.
  Rat c[2];
  Matrix nil[2] = {Matrix(2, 2), Matrix(2, 2)};
  for (std::size_t a = 0; a < 2; ++a) {
    c[a] = r2->ms[a].trace() / Rat(2);
    nil[a] = r2->ms[a] - Matrix::identity(2).scaled(c[a]);
    if (!(nil[a] * nil[a]).is_zero()) return std::nullopt;
  }
  if (c[0].is_zero() && c[1].is_zero()) return std::nullopt;
  // u-direction kills the scalar part; t-direction normalizes it to 1.
  Rat u_coef[2] = {c[1], -c[0]};
  Rat t_coef[2];
  if (!c[0].is_zero()) {
    t_coef[0] = c[0].inverse();
    t_coef[1] = Rat(0);
  } else {
    t_coef[0] = Rat(0);
    t_coef[1] = c[1].inverse();
  }
  Matrix n_u = nil[0].scaled(u_coef[0]) + nil[1].scaled(u_coef[1]);
  Matrix n_t = nil[0].scaled(t_coef[0]) + nil[1].scaled(t_coef[1]);
  if (n_u.is_zero()) return std::nullopt;
  auto gamma = colinear_factor(n_t, n_u);
  if (!gamma) return std::nullopt;
  t_coef[0] -= *gamma * u_coef[0];
  t_coef[1] -= *gamma * u_coef[1];

  Vec t_vec = add_vec(scale_vec(r2->reps[0], t_coef[0]), scale_vec(r2->reps[1], t_coef[1]));
  Vec u_vec = add_vec(scale_vec(r2->reps[0], u_coef[0]), scale_vec(r2->reps[1], u_coef[1]));
  // Kill [t, u] by shifting u inside the (abelian) radical: ad(t) is the
  // identity there.
  Vec tu = g.bracket(t_vec, u_vec);
  if (!r2->n.space.contains(tu)) return std::nullopt;
  u_vec = add_vec(u_vec, scale_vec(tu, Rat(-1)));

  Matrix m_u = adjoint_on(g, u_vec, r2->n);
  std::optional<Vec> f2;
  for (std::size_t j = 0; j < 2; ++j) {
    Vec coords(2, Rat(0));
    coords[j] = Rat(1);
    if (!is_zero_vec(m_u.apply(coords))) {
      f2 = lift(r2->n.space, coords);
      break;
    }
  }
  if (!f2) return std::nullopt;
  Vec f1 = g.bracket(*f2, u_vec);
  return certify(g, {f1, *f2, u_vec, t_vec}, gen_g4_9_0({}), {});
}

std::optional<RecognizerResult> rec_g5_19(const LieAlgebra& g) {
  if (g.dim() != 5) return std::nullopt;
  auto r2 = rank_two_abelian(g, 3);
  if (!r2) return std::nullopt;
  if (!(r2->ms[0] * r2->ms[1] == r2->ms[1] * r2->ms[0])) return std::nullopt;
  Matrix s[2], nil[2];
  try {
    for (std::size_t a = 0; a < 2; ++a) {
      JordanPair jc = jordan_chevalley(r2->ms[a]);
      s[a] = jc.semisimple;
      nil[a] = jc.nilpotent;
    }
  } catch (const UnsupportedError&) {
    return std::nullopt;
  }
  // Find the unique direction with vanishing semisimple part.
  Matrix flat(9, 2);
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t col = 0; col < 3; ++col)
        flat.at(r * 3 + col, a) = s[a].at(r, col);
  Subspace ker = kernel(flat);
  if (ker.dim() != 1) return std::nullopt;
  Vec kv = ker.basis_vector(0);
  Rat u_coef[2] = {kv[0], kv[1]};
  Rat t_coef[2];
  if (!kv[1].is_zero()) {  // (1,0) independent of u
    t_coef[0] = Rat(1);
    t_coef[1] = Rat(0);
  } else {
    t_coef[0] = Rat(0);
    t_coef[1] = Rat(1);
  }
  Matrix s_t = s[0].scaled(t_coef[0]) + s[1].scaled(t_coef[1]);
  std::vector<Rat> vals = spectrum_values(s_t);
  if (vals.size() != 3) return std::nullopt;
  std::sort(vals.begin(), vals.end());
  // Weight pattern {w, w, beta*w}.
  Rat w, bw;
  if (vals[0] == vals[1] && vals[1] == vals[2]) {
    w = vals[0];
    bw = vals[0];
  } else if (vals[0] == vals[1]) {
    w = vals[0];
    bw = vals[2];
  } else if (vals[1] == vals[2]) {
    w = vals[1];
    bw = vals[0];
  } else {
    return std::nullopt;
  }
  if (w.is_zero() || bw.is_zero()) return std::nullopt;
  Rat beta = bw / w;
  // Normalize t so the double weight is 1.
  t_coef[0] /= w;
  t_coef[1] /= w;
  Matrix n_t = nil[0].scaled(t_coef[0]) + nil[1].scaled(t_coef[1]);
  Matrix n_u = nil[0].scaled(u_coef[0]) + nil[1].scaled(u_coef[1]);
  Matrix m_u = r2->ms[0].scaled(u_coef[0]) + r2->ms[1].scaled(u_coef[1]);
  if (m_u.is_zero()) return std::nullopt;
  auto gamma = colinear_factor(n_t, n_u);
  if (!gamma) return std::nullopt;
  t_coef[0] -= *gamma * u_coef[0];
  t_coef[1] -= *gamma * u_coef[1];
  Vec t_vec = add_vec(scale_vec(r2->reps[0], t_coef[0]), scale_vec(r2->reps[1], t_coef[1]));
  Vec u_vec = add_vec(scale_vec(r2->reps[0], u_coef[0]), scale_vec(r2->reps[1], u_coef[1]));

  Matrix m_t = adjoint_on(g, t_vec, r2->n);
  Subspace e1_space = eigenspace(m_t, Rat(1));
  Subspace eb_space = eigenspace(m_t, beta);
  std::size_t expect1 = beta == Rat(1) ? 3 : 2;
  if (e1_space.dim() != expect1) return std::nullopt;
  if (beta != Rat(1) && eb_space.dim() != 1) return std::nullopt;

  // f1: weight-one vector moved by the nilpotent direction.
  std::optional<Vec> f1_n;
  for (std::size_t r = 0; r < e1_space.dim(); ++r) {
    Vec cand = e1_space.basis_vector(r);
    if (!is_zero_vec(m_u.apply(cand))) {
      f1_n = cand;
      break;
    }
  }
  if (!f1_n) return std::nullopt;
  Vec f1 = lift(r2->n.space, *f1_n);
  Vec f3 = g.bracket(f1, u_vec);
  auto f3_n = r2->n.space.coordinates(f3);
  if (!f3_n || is_zero_vec(*f3_n)) return std::nullopt;

  Vec f4;
  if (beta == Rat(1)) {
    // Pick a kernel vector of m_u independent of f1, f3.
    Subspace ker_u = kernel(m_u);
    bool found = false;
    for (std::size_t r = 0; r < ker_u.dim() && !found; ++r) {
      Vec cand = ker_u.basis_vector(r);
      Subspace test = Subspace::span({*f1_n, *f3_n, cand}, 3);
      if (test.dim() == 3) {
        f4 = lift(r2->n.space, cand);
        found = true;
      }
    }
    if (!found) return std::nullopt;
  } else {
    f4 = lift(r2->n.space, eb_space.basis_vector(0));
  }

  // Kill [t, u]: shift u by w0 with m_t * w0 = -[t,u] (m_t invertible).
  Vec tu = g.bracket(t_vec, u_vec);
  auto tu_n = r2->n.space.coordinates(tu);
  if (!tu_n) return std::nullopt;
  auto shift = solve(m_t, scale_vec(*tu_n, Rat(-1)));
  if (!shift) return std::nullopt;
  u_vec = add_vec(u_vec, lift(r2->n.space, *shift));

  ParamMap params{{"beta", beta}};
  return certify(g, {f1, u_vec, f3, f4, t_vec}, gen_g5_19(params), params);
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> v;
    v.push_back({"a2", {}, gen_a2, 1, "unknown", "builtin", rec_a2, {{}}});
    v.push_back({"heis", {}, gen_heis, 3, "unknown", "builtin", rec_heis, {{}}});
    v.push_back({"g3_3", {}, gen_g3_3, 1, "unknown", "builtin", rec_g3_3, {{}}});
    v.push_back({"g3_5",
                 {{"alpha", "-1 <= alpha < 1, alpha != 0"}},
                 gen_g3_5,
                 1,
                 "unknown",
                 "builtin",
                 rec_g3_5,
                 {{{"alpha", Rat(1, 2)}},
                  {{"alpha", Rat(1, 3)}},
                  {{"alpha", Rat(-1, 2)}},
                  {{"alpha", Rat(-1)}}}});
    v.push_back({"g4_5",
                 {{"alpha", "-1 <= alpha <= beta <= 1"}, {"beta", "alpha*beta != 0"}},
                 gen_g4_5,
                 1,
                 "unknown",
                 "builtin",
                 rec_g4_5,
                 {{{"alpha", Rat(1, 2)}, {"beta", Rat(1)}},
                  {{"alpha", Rat(1)}, {"beta", Rat(1)}},
                  {{"alpha", Rat(-1, 3)}, {"beta", Rat(2, 3)}},
                  {{"alpha", Rat(1, 4)}, {"beta", Rat(1, 2)}}}});
    v.push_back({"g4_8", {}, gen_g4_8, 1, "unknown", "builtin", rec_g4_8, {{}}});
    v.push_back({"g4_9_0", {}, gen_g4_9_0, 2, "unknown", "builtin", rec_g4_9_0, {{}}});
    v.push_back({"g4_9",
                 {{"beta", "-1 < beta <= 1, beta != 0"}},
                 gen_g4_9,
                 1,
                 "unknown",
                 "builtin",
                 rec_g4_9,
                 {{{"beta", Rat(1)}},
                  {{"beta", Rat(1, 2)}},
                  {{"beta", Rat(-1, 2)}},
                  {{"beta", Rat(1, 3)}}}});
    v.push_back({"g5_19",
                 {{"beta", "beta != 0 (first parameter fixed to 1)"}},
                 gen_g5_19,
                 2,
                 "unknown",
                 "builtin",
                 rec_g5_19,
                 {{{"beta", Rat(1, 3)}},
                  {{"beta", Rat(1, 2)}},
                  {{"beta", Rat(2, 3)}},
                  {{"beta", Rat(3, 4)}}}});
    return v;
  }();
  return entries;
}

const CatalogEntry* catalog_lookup(const std::string& name) {
  for (const CatalogEntry& e : catalog())
    if (e.name == name) return &e;
  return nullptr;
}

std::optional<MatchResult> match(const LieAlgebra& g) {
  for (const CatalogEntry& e : catalog()) {
    std::optional<RecognizerResult> r;
    try {
      r = e.recognizer(g);
    } catch (const UnsupportedError&) {
      continue;
    }
    if (r) return MatchResult{e.name, r->params, r->change_of_basis};
  }
  return std::nullopt;
}

IsoResult isomorphic(const LieAlgebra& a, const LieAlgebra& b) {
  if (a.dim() == b.dim() && a == b)
    return {TriBool::True, Matrix::identity(a.dim()), "identical structure constants"};
  Fingerprint fa = fingerprint(a), fb = fingerprint(b);
  if (!(fa == fb))
    return {TriBool::False, std::nullopt, "fingerprints differ: " + fa.str() + " vs " + fb.str()};

  auto ma = match(a);
  auto mb = match(b);
  if (ma && mb) {
    if (ma->name == mb->name && ma->params == mb->params) {
      auto inv = mb->change_of_basis.inverse();
      if (!inv) throw InvariantError("isomorphic: recognizer witness not invertible");
      Matrix w = *inv * ma->change_of_basis;
      if (!(change_basis(a, w) == b))
        throw InvariantError("isomorphic: composed witness failed verification");
      return {TriBool::True, w, "both match catalog entry " + ma->name};
    }
    return {TriBool::False, std::nullopt,
            "catalog names/parameters differ: " + ma->name + " vs " + mb->name};
  }

  SplitResult sa = split_factors(a);
  SplitResult sb = split_factors(b);
  if (!sa.complete || !sb.complete)
    return {TriBool::Unknown, std::nullopt, "no splitting found and no catalog match"};
  if (sa.euclidean_dim != sb.euclidean_dim)
    return {TriBool::False, std::nullopt, "euclidean factor dimensions differ"};
  if (sa.factors.size() != sb.factors.size())
    return {TriBool::Unknown, std::nullopt, "factor counts differ in chosen bases"};

  std::vector<MatchResult> mas, mbs;
  for (const LieAlgebra& f : sa.factors) {
    auto m = match(f);
    if (!m) return {TriBool::Unknown, std::nullopt, "unmatched factor on the left"};
    mas.push_back(*m);
  }
  for (const LieAlgebra& f : sb.factors) {
    auto m = match(f);
    if (!m) return {TriBool::Unknown, std::nullopt, "unmatched factor on the right"};
    mbs.push_back(*m);
  }
  // Multiset matching on (name, params).
  std::vector<bool> used(mas.size(), false);
  std::vector<std::size_t> pairing(mbs.size());
  for (std::size_t j = 0; j < mbs.size(); ++j) {
    bool found = false;
    for (std::size_t i = 0; i < mas.size(); ++i) {
      if (used[i]) continue;
      if (mas[i].name == mbs[j].name && mas[i].params == mbs[j].params &&
          sa.factors[i].dim() == sb.factors[j].dim()) {
        used[i] = true;
        pairing[j] = i;
        found = true;
        break;
      }
    }
    if (!found)
      return {TriBool::False, std::nullopt,
              "factor multisets differ (unmatched factor " + mbs[j].name + ")"};
  }

  // Assemble the witness: map a's split coordinates onto b's.
  std::size_t n = a.dim();
  std::vector<std::size_t> a_off(sa.factors.size()), b_off(sb.factors.size());
  {
    std::size_t off = sa.euclidean_dim;
    for (std::size_t i = 0; i < sa.factors.size(); ++i) {
      a_off[i] = off;
      off += sa.factors[i].dim();
    }
    off = sb.euclidean_dim;
    for (std::size_t j = 0; j < sb.factors.size(); ++j) {
      b_off[j] = off;
      off += sb.factors[j].dim();
    }
  }
  Matrix v(n, n);
  for (std::size_t r = 0; r < sa.euclidean_dim; ++r) v.at(r, r) = Rat(1);
  for (std::size_t j = 0; j < mbs.size(); ++j) {
    std::size_t i = pairing[j];
    auto qinv = mbs[j].change_of_basis.inverse();
    if (!qinv) throw InvariantError("isomorphic: factor witness not invertible");
    Matrix wij = *qinv * mas[i].change_of_basis;
    for (std::size_t r = 0; r < wij.rows(); ++r)
      for (std::size_t c = 0; c < wij.cols(); ++c)
        v.at(b_off[j] + r, a_off[i] + c) = wij.at(r, c);
  }
  auto pbinv = sb.change_of_basis.inverse();
  if (!pbinv) throw InvariantError("isomorphic: split basis not invertible");
  Matrix w = *pbinv * v * sa.change_of_basis;
  if (!(change_basis(a, w) == b))
    return {TriBool::Unknown, std::nullopt, "factor-wise witness failed verification"};
  return {TriBool::True, w, "factor-wise catalog matching"};
}

}  // namespace solv
