#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "solv/geometry.hpp"
#include "solv/structure.hpp"

using namespace solv;

namespace {

LieAlgebra generated(const std::string& name, const ParamMap& params = {}) {
  const CatalogEntry* e = catalog_lookup(name);
  REQUIRE(e != nullptr);
  return e->generator(params);
}

LieAlgebra heisenberg5() {
  LieAlgebra g(5);
  g.set_constant(0, 1, 4, Rat(1));
  g.set_constant(2, 3, 4, Rat(1));
  return g;
}

/// Filiform nilradical with diagonal weights (1, 1, 2, 3).
LieAlgebra filiform_extension() {
  LieAlgebra g(5);
  g.set_constant(0, 1, 2, Rat(1));  // [e1,e2] = e3
  g.set_constant(0, 2, 3, Rat(1));  // [e1,e3] = e4
  g.set_constant(4, 0, 0, Rat(1));
  g.set_constant(4, 1, 1, Rat(1));
  g.set_constant(4, 2, 2, Rat(2));
  g.set_constant(4, 3, 3, Rat(3));
  return g;
}

Rat cdim(const LieAlgebra& g) {
  HeintzeDetect d = detect_diagonal_heintze(g);
  REQUIRE(d.ok);
  return conformal_dimension(d.data);
}

}  // namespace

TEST_CASE("Heisenberg recognition") {
  CHECK(is_heisenberg(generated("heis")));
  CHECK(is_heisenberg(heisenberg5()));
  CHECK(!is_heisenberg(abelian_algebra(3)));
  CHECK(!is_heisenberg(generated("g3_3")));
  // one-dimensional center but degenerate pairing
  LieAlgebra bad(5);
  bad.set_constant(0, 1, 4, Rat(1));
  CHECK(!is_heisenberg(bad));
}

TEST_CASE("diagonal rank-one detection on the scalar family") {
  HeintzeDetect d = detect_diagonal_heintze(generated("g3_3"));
  REQUIRE(d.ok);
  CHECK(d.data.nilradical_kind == NilradicalKind::Abelian);
  CHECK(d.data.spectrum == std::vector{std::pair{Rat(1), std::size_t{2}}});
  CHECK(d.data.scale == Rat(1));
  CHECK(!d.data.generator_flipped);
  CHECK(is_abelian(d.data.nilradical));
}

TEST_CASE("diagonal rank-one detection reports the natural spectrum") {
  HeintzeDetect d = detect_diagonal_heintze(generated("g3_5", {{"alpha", Rat(1, 2)}}));
  REQUIRE(d.ok);
  CHECK(d.data.spectrum ==
        std::vector{std::pair{Rat(1, 2), std::size_t{1}}, std::pair{Rat(1), std::size_t{1}}});
  CHECK(d.data.scale == Rat(1, 2));

  HeintzeDetect h = detect_diagonal_heintze(generated("g4_9", {{"beta", Rat(1, 2)}}));
  REQUIRE(h.ok);
  CHECK(h.data.nilradical_kind == NilradicalKind::Heisenberg);
  CHECK(h.data.spectrum == std::vector{std::pair{Rat(1, 2), std::size_t{1}},
                                       std::pair{Rat(1), std::size_t{1}},
                                       std::pair{Rat(3, 2), std::size_t{1}}});
}

TEST_CASE("generator sign flip") {
  LieAlgebra g(3);  // [e3,e1] = -e1, [e3,e2] = -e2
  g.set_constant(2, 0, 0, Rat(-1));
  g.set_constant(2, 1, 1, Rat(-1));
  HeintzeDetect d = detect_diagonal_heintze(g);
  REQUIRE(d.ok);
  CHECK(d.data.generator_flipped);
  CHECK(d.data.spectrum == std::vector{std::pair{Rat(1), std::size_t{2}}});
}

TEST_CASE("detection failure reasons") {
  CHECK(!detect_diagonal_heintze(generated("g4_8")).ok);       // mixed signs
  CHECK(!detect_diagonal_heintze(generated("g4_9_0")).ok);     // nilpotent part
  CHECK(!detect_diagonal_heintze(generated("heis")).ok);       // wrong rank
  CHECK(!detect_diagonal_heintze(generated("g5_19", {{"beta", Rat(1, 2)}})).ok);
  for (const std::string& n : {std::string("g4_8"), std::string("heis")})
    CHECK(!detect_diagonal_heintze(generated(n)).reason.empty());
}

TEST_CASE("conformal dimension values") {
  CHECK(cdim(generated("g3_3")) == Rat(2));
  for (const Rat& alpha : {Rat(1, 4), Rat(1, 3), Rat(1, 2), Rat(2, 3)})
    CHECK(cdim(generated("g3_5", {{"alpha", alpha}})) == Rat(1) + alpha.inverse());
  CHECK(cdim(generated("g4_5", {{"alpha", Rat(1, 2)}, {"beta", Rat(1)}})) == Rat(5));
  CHECK(cdim(generated("g4_9", {{"beta", Rat(1)}})) == Rat(4));
}

TEST_CASE("conformal dimension is scale invariant") {
  // [e3,e1] = 2 e1, [e3,e2] = e2 is g3_5 with alpha = 1/2 up to rescaling.
  LieAlgebra g(3);
  g.set_constant(2, 0, 0, Rat(2));
  g.set_constant(2, 1, 1, Rat(1));
  CHECK(cdim(g) == Rat(3));
  CHECK(cdim(generated("g3_5", {{"alpha", Rat(1, 2)}})) == Rat(3));
}

TEST_CASE("rank-one symmetric space tags") {
  auto tag = [](const LieAlgebra& g) {
    HeintzeDetect d = detect_diagonal_heintze(g);
    REQUIRE(d.ok);
    return identify_rank_one_iwasawa(d.data);
  };
  SymmetricTag so3 = tag(generated("g3_3"));
  CHECK(so3.family == SymmetricFamily::SO_n1);
  CHECK(so3.str() == "SO(3,1)");
  CHECK(tag(generated("g4_5", {{"alpha", Rat(1)}, {"beta", Rat(1)}})).str() == "SO(4,1)");
  SymmetricTag su2 = tag(generated("g4_9", {{"beta", Rat(1)}}));
  CHECK(su2.family == SymmetricFamily::SU_n1);
  CHECK(su2.str() == "SU(2,1)");
  CHECK(tag(generated("g3_5", {{"alpha", Rat(1, 2)}})).family == SymmetricFamily::None);
  CHECK(tag(generated("g4_9", {{"beta", Rat(1, 2)}})).family == SymmetricFamily::None);
}

TEST_CASE("strong pointed sphere property rule table") {
  auto spsp = [](const LieAlgebra& g) {
    HeintzeDetect d = detect_diagonal_heintze(g);
    REQUIRE(d.ok);
    return strong_pointed_sphere(d.data);
  };
  // Symmetric-space cases: false.
  CHECK(spsp(generated("g3_3")).value == TriBool::False);
  CHECK(spsp(generated("g4_5", {{"alpha", Rat(1)}, {"beta", Rat(1)}})).value == TriBool::False);
  CHECK(spsp(generated("g4_9", {{"beta", Rat(1)}})).value == TriBool::False);
  // Non-scalar abelian and non-symmetric Heisenberg cases: true.
  CHECK(spsp(generated("g3_5", {{"alpha", Rat(1, 2)}})).value == TriBool::True);
  CHECK(spsp(generated("g4_5", {{"alpha", Rat(1, 2)}, {"beta", Rat(1)}})).value == TriBool::True);
  CHECK(spsp(generated("g4_9", {{"beta", Rat(1, 2)}})).value == TriBool::True);
  // A nilradical shape outside the rule table stays unknown.
  SpspReport u = spsp(filiform_extension());
  CHECK(u.value == TriBool::Unknown);
  CHECK(!u.rule.empty());
}
