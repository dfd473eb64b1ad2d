#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "solv/errors.hpp"
#include "solv/liealg.hpp"

using namespace solv;

namespace {

std::mt19937 rng(424242);

LieAlgebra heisenberg() {
  LieAlgebra g(3);
  g.set_constant(0, 1, 2, Rat(1));  // [e1,e2] = e3
  return g;
}

LieAlgebra book3() {  // [e3,e1] = e1, [e3,e2] = e2
  LieAlgebra g(3);
  g.set_constant(2, 0, 0, Rat(1));
  g.set_constant(2, 1, 1, Rat(1));
  return g;
}

LieAlgebra sl2() {  // [h,e] = 2e, [h,f] = -2f, [e,f] = h
  LieAlgebra g(3);
  g.set_constant(0, 1, 1, Rat(2));
  g.set_constant(0, 2, 2, Rat(-2));
  g.set_constant(1, 2, 0, Rat(1));
  return g;
}

LieAlgebra rotation3() {  // [e3,e1] = e2, [e3,e2] = -e1
  LieAlgebra g(3);
  g.set_constant(2, 0, 1, Rat(1));
  g.set_constant(2, 1, 0, Rat(-1));
  return g;
}

Matrix random_invertible(std::size_t n) {
  std::uniform_int_distribution<int> entry(-3, 3);
  for (;;) {
    Matrix p(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) p.at(r, c) = Rat(entry(rng));
    if (p.inverse()) return p;
  }
}

}  // namespace

TEST_CASE("bracket storage is antisymmetric") {
  LieAlgebra g(3);
  g.set_constant(1, 0, 2, Rat(5));  // stored as [e1,e2] = -5 e3
  CHECK(g.constant(0, 1, 2) == Rat(-5));
  CHECK(g.bracket_basis(1, 0)[2] == Rat(5));
  CHECK(g.bracket_basis(0, 1)[2] == Rat(-5));
  Vec z = g.bracket(g.basis_vector(0), g.basis_vector(0));
  for (const Rat& x : z) CHECK(x.is_zero());
}

TEST_CASE("validate accepts the Jacobi identity and rejects violations") {
  CHECK(validate(heisenberg()).ok);
  CHECK(validate(sl2()).ok);
  CHECK(validate(book3()).ok);

  // [e1,e2]=e3, [e1,e3]=e1 violates Jacobi on (e1,e2,e3).
  LieAlgebra bad(3);
  bad.set_constant(0, 1, 2, Rat(1));
  bad.set_constant(0, 2, 0, Rat(1));
  ValidationReport r = validate(bad);
  CHECK(!r.ok);
  CHECK(r.i == 0);
  CHECK(r.j == 1);
  CHECK(r.k == 2);
  CHECK(!r.message.empty());
}

TEST_CASE("ad matrices represent the bracket") {
  LieAlgebra g = sl2();
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      CHECK(g.ad_basis(i).apply(g.basis_vector(j)) == g.bracket_basis(i, j));
}

TEST_CASE("lower central series") {
  SeriesReport h = lower_central_series(heisenberg());
  CHECK(h.dims == std::vector<std::size_t>{3, 1, 0});

  // The series stabilizes at dimension 2; the stable term appears once.
  SeriesReport b = lower_central_series(book3());
  CHECK(b.dims == std::vector<std::size_t>{3, 2});
}

TEST_CASE("derived series") {
  SeriesReport b = derived_series(book3());
  CHECK(b.dims == std::vector<std::size_t>{3, 2, 0});

  // sl2 is perfect: the derived series is stable immediately.
  SeriesReport s = derived_series(sl2());
  CHECK(s.dims == std::vector<std::size_t>{3});
}

TEST_CASE("solvability and nilpotency predicates") {
  CHECK(is_nilpotent(heisenberg()));
  CHECK(is_solvable(heisenberg()));
  CHECK(!is_nilpotent(book3()));
  CHECK(is_solvable(book3()));
  CHECK(!is_solvable(sl2()));
  CHECK(is_abelian(abelian_algebra(4)));
  CHECK(!is_abelian(heisenberg()));
}

TEST_CASE("center") {
  CHECK(center(heisenberg()).space.dim() == 1);
  CHECK(center(heisenberg()).space.contains(Vec{Rat(0), Rat(0), Rat(1)}));
  CHECK(center(book3()).space.dim() == 0);
  CHECK(center(abelian_algebra(2)).space.dim() == 2);
}

TEST_CASE("quotient of the Heisenberg algebra by its center") {
  LieAlgebra g = heisenberg();
  QuotientResult q = quotient(g, center(g));
  CHECK(q.algebra.dim() == 2);
  CHECK(is_abelian(q.algebra));
  CHECK(q.complement_indices == std::vector<std::size_t>{0, 1});
  CHECK(q.projection * q.section == Matrix::identity(2));
}

TEST_CASE("quotient brackets match the projection") {
  LieAlgebra g = book3();
  AlgebraSubspace ideal{&g, Subspace::span({{Rat(1), Rat(0), Rat(0)}}, 3)};
  QuotientResult q = quotient(g, ideal);
  CHECK(q.algebra.dim() == 2);
  // [e3,e2] = e2 survives: on complement basis (e2, e3) this is [f2,f1] = f1.
  CHECK(q.algebra.constant(1, 0, 0) == Rat(1));
}

TEST_CASE("direct sum") {
  LieAlgebra s = direct_sum(heisenberg(), book3());
  CHECK(s.dim() == 6);
  CHECK(validate(s).ok);
  CHECK(s.constant(0, 1, 2) == Rat(1));
  CHECK(s.constant(5, 3, 3) == Rat(1));
  CHECK(s.bracket_basis(0, 4).size() == 6);
  for (const Rat& x : s.bracket_basis(0, 4)) CHECK(x.is_zero());
}

TEST_CASE("semidirect product builds the rank-one extension") {
  // R^2 x| R with the identity action reproduces [e3,e1]=e1, [e3,e2]=e2.
  LieAlgebra n = abelian_algebra(2);
  LieAlgebra h = abelian_algebra(1);
  DerivationAction act{&h, &n, {Matrix::identity(2)}};
  LieAlgebra g = semidirect_product(n, h, act);
  CHECK(g == book3());
}

TEST_CASE("semidirect product rejects non-derivations") {
  // On the Heisenberg algebra, the identity is not a derivation (the center
  // must scale by the sum of the other two weights).
  LieAlgebra n = heisenberg();
  LieAlgebra h = abelian_algebra(1);
  DerivationAction act{&h, &n, {Matrix::identity(3)}};
  CHECK(check_action(n, h, act).has_value());
  CHECK_THROWS_AS(semidirect_product(n, h, act), InvariantError);

  // Weights (1, 1, 2) do give a derivation.
  Matrix d = Matrix::identity(3);
  d.at(2, 2) = Rat(2);
  DerivationAction good{&h, &n, {d}};
  CHECK(!check_action(n, h, good).has_value());
  CHECK(validate(semidirect_product(n, h, good)).ok);
}

TEST_CASE("triangularize succeeds on completely solvable algebras") {
  for (const LieAlgebra& g : {heisenberg(), book3(), abelian_algebra(3)}) {
    TriangularizeResult t = triangularize(g);
    REQUIRE(t.ok);
    REQUIRE(t.flag.size() == g.dim() + 1);
    for (std::size_t i = 0; i + 1 < t.flag.size(); ++i) {
      CHECK(t.flag[i].dim() == g.dim() - i);
      // each step is an ideal of g
      AlgebraSubspace step{&g, t.flag[i]};
      AlgebraSubspace whole{&g, Subspace::full(g.dim())};
      CHECK(t.flag[i].sum(product_space(g, whole, step).space) == t.flag[i]);
    }
  }
}

TEST_CASE("triangularize failure reasons") {
  TriangularizeResult s = triangularize(sl2());
  CHECK(!s.ok);
  CHECK(s.reason == "not solvable");

  TriangularizeResult r = triangularize(rotation3());
  CHECK(!r.ok);
  CHECK(r.reason == "no rational common eigenvector");
}

TEST_CASE("change of basis composes contravariantly") {
  LieAlgebra g = sl2();
  for (int t = 0; t < 10; ++t) {
    Matrix p = random_invertible(3);
    Matrix q = random_invertible(3);
    CHECK(change_basis(change_basis(g, p), q) == change_basis(g, q * p));
    CHECK(validate(change_basis(g, p)).ok);
  }
  CHECK(change_basis(g, Matrix::identity(3)) == g);
}

TEST_CASE("subalgebra restriction") {
  LieAlgebra g = book3();
  // span(e1, e3) is closed: [e3,e1] = e1.
  Subspace s = Subspace::span({{Rat(1), Rat(0), Rat(0)}, {Rat(0), Rat(0), Rat(1)}}, 3);
  LieAlgebra sub = subalgebra(g, s);
  CHECK(sub.dim() == 2);
  CHECK(sub.constant(1, 0, 0) == Rat(1));

  // span(e2 + e3) alone is closed, span(e1 + e2, e3 + e1) is not an issue;
  // but a genuinely non-closed subspace must throw.
  LieAlgebra h = heisenberg();
  Subspace open = Subspace::span({{Rat(1), Rat(0), Rat(0)}, {Rat(0), Rat(1), Rat(0)}}, 3);
  CHECK_THROWS_AS(subalgebra(h, open), std::invalid_argument);
}

TEST_CASE("adjoint on an invariant subspace") {
  LieAlgebra g = book3();
  AlgebraSubspace derived{&g, Subspace::span({{Rat(1), Rat(0), Rat(0)},
                                              {Rat(0), Rat(1), Rat(0)}}, 3)};
  Matrix m = adjoint_on(g, g.basis_vector(2), derived);
  CHECK(m == Matrix::identity(2));
  CHECK_THROWS_AS(adjoint_on(heisenberg(), heisenberg().basis_vector(0),
                             AlgebraSubspace{nullptr, Subspace::span({{Rat(0), Rat(1), Rat(0)}}, 3)}),
                  std::invalid_argument);
}

TEST_CASE("lex complement indices") {
  // e1 already extends span(e1 + e2); e2 is then dependent, e3 completes.
  Subspace s = Subspace::span({{Rat(1), Rat(1), Rat(0)}}, 3);
  CHECK(lex_complement_indices(s) == std::vector<std::size_t>{0, 2});
  CHECK(lex_complement_indices(Subspace::full(3)).empty());
}
