#include "solv/reduction.hpp"

#include <algorithm>
#include <sstream>

namespace solv {

namespace {

// p(q) mod c by Horner in Q[x]/(c).
Poly compose_mod(const Poly& p, const Poly& q, const Poly& c) {
  Poly acc;
  const auto& coeffs = p.coeffs();
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    acc = (acc * q + Poly::constant(coeffs[i])).divmod(c).second;
  }
  return acc;
}

}  // namespace

JordanPair jordan_chevalley(const Matrix& m) {
  if (!m.is_square()) throw std::invalid_argument("jordan_chevalley: non-square matrix");
  std::size_t n = m.rows();
  if (n == 0) return {Matrix(0, 0), Matrix(0, 0), Poly::x()};
  Poly c = char_poly(m);
  Poly f = squarefree_part(c);
  if (!rational_roots(f).fully_split)
    throw UnsupportedError(
        "irrational spectrum: characteristic polynomial does not split over Q");

  // Newton iteration in Q[x]/(c) on f, starting from q = x. Converges in
  // O(log n) steps; f'(q) stays invertible mod c because f is squarefree
  // with the same roots as c.
  Poly q = Poly::x();
  Poly fp = f.derivative();
  for (std::size_t iter = 0; iter <= n + 2; ++iter) {
    Poly fq = compose_mod(f, q, c);
    if (fq.is_zero()) break;
    Poly d = compose_mod(fp, q, c);
    PolyXgcd x = poly_xgcd(d, c);
    if (x.g.degree() != 0)
      throw InvariantError("jordan_chevalley: derivative not invertible modulo char poly");
    Poly u = x.s;  // d * u = 1 mod c
    q = (q - (fq * u).divmod(c).second).divmod(c).second;
  }
  if (!compose_mod(f, q, c).is_zero())
    throw InvariantError("jordan_chevalley: Newton iteration did not converge");

  Matrix s = eval_poly_at_matrix(q, m);
  Matrix nil = m - s;
  // Cross-checks of the defining properties.
  if (!(s * nil == nil * s))
    throw InvariantError("jordan_chevalley: parts do not commute");
  Matrix pw = nil;
  for (std::size_t i = 1; i < n; ++i) pw = pw * nil;
  if (!pw.is_zero())
    throw InvariantError("jordan_chevalley: nilpotent part is not nilpotent");
  return {s, nil, q};
}

AlgebraSubspace exponential_radical(const LieAlgebra& g) {
  if (!is_solvable(g))
    throw UnsupportedError("exponential radical requires a solvable algebra");
  SeriesReport lcs = lower_central_series(g);
  return lcs.terms.back();
}

std::size_t cone_dimension(const LieAlgebra& g) {
  TriangularizeResult tri = triangularize(g);
  if (!tri.ok)
    throw UnsupportedError("cone dimension requires complete solvability (" + tri.reason +
                           ")");
  return g.dim() - exponential_radical(g).space.dim();
}

ReductionResult rho1(const LieAlgebra& g) {
  TriangularizeResult tri = triangularize(g);
  if (!tri.ok)
    throw UnsupportedError("rho1 requires complete solvability (" + tri.reason + ")");

  ReductionResult res;
  res.input = g;
  AlgebraSubspace n_sub = exponential_radical(g);
  res.exprad = n_sub.space;
  res.nil_part = subalgebra(g, n_sub.space);
  QuotientResult qr = quotient(g, n_sub);
  res.quotient_part = qr.algebra;
  res.quotient_rank = qr.algebra.dim();
  {
    std::ostringstream os;
    os << "exponential radical has dimension " << n_sub.space.dim()
       << "; quotient rank " << res.quotient_rank;
    res.construction_log.push_back(os.str());
  }

  std::vector<Matrix> semis;
  for (std::size_t a = 0; a < qr.algebra.dim(); ++a) {
    Vec rep = qr.section.apply(qr.algebra.basis_vector(a));
    Matrix act = adjoint_on(g, rep, n_sub);
    JordanPair jc = jordan_chevalley(act);
    semis.push_back(jc.semisimple);
    std::ostringstream os;
    os << "generator " << qr.algebra.labels()[a] << ": nilpotent part "
       << (jc.nilpotent.is_zero() ? "zero" : "nonzero, discarded");
    res.construction_log.push_back(os.str());
  }
  for (std::size_t a = 0; a < semis.size(); ++a)
    for (std::size_t b = a + 1; b < semis.size(); ++b)
      if (!(semis[a] * semis[b] == semis[b] * semis[a]))
        throw UnsupportedError(
            "rho1: semisimple parts of the quotient action do not commute");
  // Homomorphism: the semisimple action of [x,y] must match the commutator.
  for (std::size_t a = 0; a < semis.size(); ++a)
    for (std::size_t b = a + 1; b < semis.size(); ++b) {
      Vec hb = qr.algebra.bracket_basis(a, b);
      Matrix lhs(res.nil_part.dim(), res.nil_part.dim());
      for (std::size_t t = 0; t < semis.size(); ++t)
        if (!hb[t].is_zero()) lhs = lhs + semis[t].scaled(hb[t]);
      if (!(lhs == semis[a] * semis[b] - semis[b] * semis[a]))
        throw UnsupportedError(
            "rho1: semisimple parts do not define a Lie homomorphism on the quotient");
    }

  res.action_matrices = semis;
  DerivationAction action{&res.quotient_part, &res.nil_part, res.action_matrices};
  res.output = semidirect_product(res.nil_part, res.quotient_part, action);
  res.construction_log.push_back("rebuilt semidirect product through the diagonal action");
  return res;
}

ReductionResult rho_infinity(const LieAlgebra& g) {
  ReductionResult r1 = rho1(g);
  const LieAlgebra& h = r1.quotient_part;
  std::size_t q = h.dim();

  // Adapted basis of h along its lower central series: degree-i vectors
  // complete C^{i+1} inside C^i.
  SeriesReport lcs = lower_central_series(h);
  std::vector<Vec> adapted;
  std::vector<std::size_t> degree;
  for (std::size_t i = 0; i + 1 <= lcs.terms.size(); ++i) {
    const Subspace& ci = lcs.terms[i].space;
    Subspace next = (i + 1 < lcs.terms.size()) ? lcs.terms[i + 1].space : Subspace(q);
    if (i + 1 == lcs.terms.size() && ci.dim() != 0)
      throw InvariantError("rho_infinity: quotient is not nilpotent");
    std::vector<Vec> grown;
    for (std::size_t r = 0; r < next.dim(); ++r) grown.push_back(next.basis_vector(r));
    std::size_t rank = next.dim();
    for (std::size_t r = 0; r < ci.dim(); ++r) {
      Vec cand = ci.basis_vector(r);
      grown.push_back(cand);
      Subspace test = Subspace::span(grown, q);
      if (test.dim() > rank) {
        rank = test.dim();
        adapted.push_back(cand);
        degree.push_back(i + 1);
      } else {
        grown.pop_back();
      }
    }
  }
  if (adapted.size() != q) throw InvariantError("rho_infinity: grading basis incomplete");
  // Order by degree (stable), keeping the discovery order within a degree.
  std::vector<std::size_t> order(q);
  for (std::size_t i = 0; i < q; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return degree[a] < degree[b]; });

  Matrix basis(q, q);
  std::vector<std::size_t> deg_sorted(q);
  for (std::size_t r = 0; r < q; ++r) {
    deg_sorted[r] = degree[order[r]];
    for (std::size_t c = 0; c < q; ++c) basis.at(r, c) = adapted[order[r]][c];
  }
  auto bt_inv = basis.transpose().inverse();
  if (!bt_inv) throw InvariantError("rho_infinity: adapted basis singular");

  // Graded brackets: keep only the layer of degree deg(a) + deg(b).
  LieAlgebra h_gr(q);
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = a + 1; b < q; ++b) {
      Vec w = h.bracket(basis.row(a), basis.row(b));
      Vec coords = bt_inv->apply(w);
      std::size_t target = deg_sorted[a] + deg_sorted[b];
      for (std::size_t k = 0; k < q; ++k)
        if (deg_sorted[k] == target && !coords[k].is_zero())
          h_gr.set_constant(a, b, k, coords[k]);
    }

  // Only the degree-one layer acts; verify the diagonal action vanishes on
  // C^2 h before discarding it.
  std::size_t m = r1.nil_part.dim();
  std::vector<Matrix> act;
  for (std::size_t a = 0; a < q; ++a) {
    Matrix phi(m, m);
    for (std::size_t t = 0; t < q; ++t)
      if (!basis.at(a, t).is_zero())
        phi = phi + r1.action_matrices[t].scaled(basis.at(a, t));
    if (deg_sorted[a] >= 2) {
      if (!phi.is_zero())
        throw InvariantError(
            "rho_infinity: diagonal action does not vanish on the second layer");
      act.push_back(Matrix(m, m));
    } else {
      act.push_back(phi);
    }
  }

  ReductionResult res;
  res.input = g;
  res.exprad = r1.exprad;
  res.nil_part = r1.nil_part;
  res.quotient_part = h_gr;
  res.quotient_rank = q;
  res.action_matrices = std::move(act);
  DerivationAction action{&res.quotient_part, &res.nil_part, res.action_matrices};
  res.output = semidirect_product(res.nil_part, res.quotient_part, action);
  res.construction_log = r1.construction_log;
  res.construction_log.push_back("graded the quotient along its lower central series");
  return res;
}

ClassC1Report is_class_C1(const LieAlgebra& g) {
  TriangularizeResult tri = triangularize(g);
  if (!tri.ok)
    throw UnsupportedError("class C1 test requires complete solvability (" + tri.reason +
                           ")");
  AlgebraSubspace n_sub = exponential_radical(g);
  std::size_t n = g.dim();
  std::size_t m = n_sub.space.dim();
  std::size_t q = n - m;
  if (m == 0)
    return {true, "exponential radical is trivial; the algebra is its own quotient", {}};

  // Enumerate subsets of basis indices of size q, in lexicographic order,
  // keeping those that complete the radical and span a subalgebra.
  std::vector<std::size_t> idx(q);
  for (std::size_t i = 0; i < q; ++i) idx[i] = i;
  std::string failure = "no complement subalgebra among basis-subset sections";
  bool found_complement = false;
  while (true) {
    // Does this subset complete n_sub?
    std::vector<Vec> rows;
    for (std::size_t r = 0; r < m; ++r) rows.push_back(n_sub.space.basis_vector(r));
    for (std::size_t a : idx) {
      Vec unit(n, Rat(0));
      unit[a] = Rat(1);
      rows.push_back(unit);
    }
    bool completes = Subspace::span(rows, n).dim() == n;
    if (completes) {
      bool closed = true;
      for (std::size_t x = 0; x < q && closed; ++x)
        for (std::size_t y = x + 1; y < q && closed; ++y) {
          Vec w = g.bracket_basis(idx[x], idx[y]);
          for (std::size_t k = 0; k < n; ++k) {
            if (w[k].is_zero()) continue;
            if (std::find(idx.begin(), idx.end(), k) == idx.end()) {
              closed = false;
              break;
            }
          }
        }
      if (closed) {
        found_complement = true;
        bool all_semisimple = true;
        std::string offender;
        for (std::size_t a : idx) {
          Matrix act = adjoint_on(g, g.basis_vector(a), n_sub);
          JordanPair jc = jordan_chevalley(act);
          if (!jc.nilpotent.is_zero()) {
            all_semisimple = false;
            offender = g.labels()[a];
            break;
          }
        }
        if (all_semisimple) {
          std::ostringstream os;
          os << "complement subalgebra spanned by {";
          for (std::size_t i = 0; i < q; ++i)
            os << (i ? ", " : "") << g.labels()[idx[i]];
          os << "} acts semisimply on the exponential radical";
          return {true, os.str(), idx};
        }
        failure = "nilpotent part of ad(" + offender +
                  ") on the exponential radical is nonzero";
      }
    }
    // Next combination.
    std::size_t i = q;
    while (i-- > 0) {
      if (idx[i] + (q - i) < n) {
        ++idx[i];
        for (std::size_t j = i + 1; j < q; ++j) idx[j] = idx[j - 1] + 1;
        break;
      }
      if (i == 0) {
        (void)found_complement;
        return {false, failure, {}};
      }
    }
  }
}

}  // namespace solv
