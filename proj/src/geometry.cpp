#include "solv/geometry.hpp"

#include <algorithm>
#include <sstream>

namespace solv {

bool is_heisenberg(const LieAlgebra& g) {
  std::size_t n = g.dim();
  if (n < 3 || n % 2 == 0) return false;
  AlgebraSubspace z = center(g);
  if (z.space.dim() != 1) return false;
  AlgebraSubspace whole{&g, Subspace::full(n)};
  AlgebraSubspace derived = product_space(g, whole, whole);
  if (!(derived.space == z.space)) return false;
  // Induced pairing on g / z must be nondegenerate.
  Vec zgen = z.space.basis_vector(0);
  std::vector<std::size_t> compl_idx = lex_complement_indices(z.space);
  std::size_t m = compl_idx.size();
  Matrix pairing(m, m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      Vec w = g.bracket_basis(compl_idx[a], compl_idx[b]);
      auto coords = z.space.coordinates(w);
      if (!coords) return false;  // derived = center, so this cannot fail
      pairing.at(a, b) = (*coords)[0];
    }
  (void)zgen;
  return pairing.inverse().has_value();
}

HeintzeDetect detect_diagonal_heintze(const LieAlgebra& g) {
  HeintzeDetect out;
  TriangularizeResult tri = triangularize(g);
  if (!tri.ok) {
    out.reason = "not completely solvable (" + tri.reason + ")";
    return out;
  }
  AlgebraSubspace n_sub = exponential_radical(g);
  std::size_t rank = g.dim() - n_sub.space.dim();
  if (rank != 1) {
    std::ostringstream os;
    os << "cone dimension is " << rank << ", not 1";
    out.reason = os.str();
    return out;
  }
  QuotientResult qr = quotient(g, n_sub);
  Vec rep = qr.section.apply(qr.algebra.basis_vector(0));
  Matrix m = adjoint_on(g, rep, n_sub);
  JordanPair jc = jordan_chevalley(m);  // may throw UnsupportedError
  if (!jc.nilpotent.is_zero()) {
    out.reason = "rank-one generator does not act diagonalizably on the nilradical";
    return out;
  }
  RootReport roots = rational_roots(char_poly(m));
  if (!roots.fully_split)
    throw UnsupportedError("irrational spectrum of the rank-one action");
  bool all_pos = true, all_neg = true;
  for (const auto& [lam, mult] : roots.roots) {
    (void)mult;
    if (lam.sign() <= 0) all_pos = false;
    if (lam.sign() >= 0) all_neg = false;
  }
  if (!all_pos && !all_neg) {
    out.reason = "spectrum is not strictly one-signed (not a Heintze algebra)";
    return out;
  }
  Matrix d = m;
  if (all_neg) {
    d = m.scaled(Rat(-1));
    out.data.generator_flipped = true;
    for (auto& [lam, mult] : roots.roots) {
      (void)mult;
      lam = -lam;
    }
    std::sort(roots.roots.begin(), roots.roots.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
  }
  out.ok = true;
  out.data.nilradical = subalgebra(g, n_sub.space);
  out.data.derivation = d;
  out.data.spectrum = roots.roots;
  out.data.scale = roots.roots.front().first;
  if (is_abelian(out.data.nilradical))
    out.data.nilradical_kind = NilradicalKind::Abelian;
  else if (is_heisenberg(out.data.nilradical))
    out.data.nilradical_kind = NilradicalKind::Heisenberg;
  else
    out.data.nilradical_kind = NilradicalKind::Other;
  return out;
}

Rat conformal_dimension(const HeintzeData& h) {
  Rat tr(0);
  for (const auto& [lam, mult] : h.spectrum) tr += lam * Rat(static_cast<long>(mult));
  return tr / h.spectrum.front().first;
}

std::string SymmetricTag::str() const {
  std::ostringstream os;
  switch (family) {
    case SymmetricFamily::SO_n1: os << "SO(" << n + 1 << ",1)"; break;
    case SymmetricFamily::SU_n1: os << "SU(" << n + 1 << ",1)"; break;
    case SymmetricFamily::None: os << "none"; break;
  }
  return os.str();
}

SymmetricTag identify_rank_one_iwasawa(const HeintzeData& h) {
  Rat lmin = h.spectrum.front().first;
  std::vector<std::pair<Rat, std::size_t>> norm;
  for (const auto& [lam, mult] : h.spectrum) norm.push_back({lam / lmin, mult});
  std::size_t dim = h.nilradical.dim();
  if (h.nilradical_kind == NilradicalKind::Abelian && norm.size() == 1)
    return {SymmetricFamily::SO_n1, dim};
  if (h.nilradical_kind == NilradicalKind::Heisenberg && norm.size() == 2 &&
      norm[0].first == Rat(1) && norm[0].second == dim - 1 &&
      norm[1].first == Rat(2) && norm[1].second == 1)
    return {SymmetricFamily::SU_n1, (dim - 1) / 2};
  return {SymmetricFamily::None, 0};
}

SpspReport strong_pointed_sphere(const HeintzeData& h) {
  SymmetricTag tag = identify_rank_one_iwasawa(h);
  if (h.nilradical_kind == NilradicalKind::Abelian) {
    if (tag.family == SymmetricFamily::None)
      return {TriBool::True,
              "abelian nilradical with non-scalar spectrum: boundary sphere is pointed"};
    return {TriBool::False,
            "rank-one symmetric Iwasawa algebra: the isometry group acts transitively "
            "on the boundary"};
  }
  if (h.nilradical_kind == NilradicalKind::Heisenberg && h.nilradical.dim() == 3) {
    // Normalized weights {1, beta, 1 + beta} on the three-dimensional
    // Heisenberg algebra.
    Rat lmin = h.spectrum.front().first;
    std::vector<Rat> w;
    for (const auto& [lam, mult] : h.spectrum)
      for (std::size_t i = 0; i < mult; ++i) w.push_back(lam / lmin);
    if (w.size() == 3 && w[0] == Rat(1) && w[2] == w[0] + w[1]) {
      if (w[1] == Rat(1))
        return {TriBool::False,
                "Heisenberg weights {1,1,2}: complex hyperbolic Iwasawa algebra"};
      return {TriBool::True, "Heisenberg weights {1,beta,1+beta} with beta != 1"};
    }
  }
  return {TriBool::Unknown, "no proved rule covers this nilradical shape"};
}

}  // namespace solv
