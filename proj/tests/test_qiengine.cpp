#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "solv/cli.hpp"
#include "solv/qiengine.hpp"

using namespace solv;

namespace {

std::mt19937 rng(5150);

Matrix random_invertible(std::size_t n) {
  std::uniform_int_distribution<int> entry(-3, 3);
  for (;;) {
    Matrix p(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) p.at(r, c) = Rat(entry(rng));
    if (p.inverse()) return p;
  }
}

LieAlgebra generated(const std::string& name, const ParamMap& params = {}) {
  const CatalogEntry* e = catalog_lookup(name);
  REQUIRE(e != nullptr);
  return e->generator(params);
}

bool has_fired(const Verdict& v, const std::string& rule_id) {
  return std::any_of(v.certificate.begin(), v.certificate.end(),
                     [&](const RuleApplication& r) { return r.rule_id == rule_id && r.fired; });
}

std::vector<ExtendedEntry> load_extended() {
  std::vector<Diagnostic> diags;
  std::vector<ExtendedEntry> entries = load_extended_dir(SOLVQI_EXTENDED_DIR, diags);
  CHECK(diags.empty());
  return entries;
}

}  // namespace

TEST_CASE("growth separation") {
  Verdict v = compare(generated("g3_3"), abelian_algebra(3));
  CHECK(v.kind == VerdictKind::NotQuasiisometric);
  CHECK(has_fired(v, "R0-growth"));
}

TEST_CASE("cone dimension separation") {
  Verdict v = compare(generated("g4_9_0"), generated("g4_9", {{"beta", Rat(1, 2)}}));
  CHECK(v.kind == VerdictKind::NotQuasiisometric);
  CHECK(has_fired(v, "R1-conedim"));
}

TEST_CASE("conformal dimension separation on single images") {
  // Both reductions are single rank-one images: the direct conformal
  // dimension rule applies.
  Verdict v = compare(generated("g3_3"), generated("g3_5", {{"alpha", Rat(1, 2)}}));
  CHECK(v.kind == VerdictKind::NotQuasiisometric);
  CHECK(has_fired(v, "R2-cdim"));
}

TEST_CASE("conformal dimension separation through the product rule") {
  // R^1 x g3_3 against R^1 x g3_5: the product rule separates, with the
  // conformal-dimension multisets recorded as a subcertificate.
  LieAlgebra a = generated("g4_9_0");
  for (const Rat& alpha : {Rat(1, 4), Rat(1, 3), Rat(1, 2), Rat(2, 3)}) {
    LieAlgebra b = direct_sum(abelian_algebra(1), generated("g3_5", {{"alpha", alpha}}));
    Verdict v = compare(a, b);
    CHECK(v.kind == VerdictKind::NotQuasiisometric);
    CHECK(has_fired(v, "R3-product"));
    CHECK(has_fired(v, "R3-cdim-subcertificate"));
  }
}

TEST_CASE("family parameter separation") {
  LieAlgebra a = generated("g5_19", {{"beta", Rat(1, 3)}});
  LieAlgebra b = generated("g5_19", {{"beta", Rat(1, 2)}});
  Verdict v = compare(a, b);
  CHECK(v.kind == VerdictKind::NotQuasiisometric);
  CHECK(has_fired(v, "R3-product"));
}

TEST_CASE("rigidity: isomorphic reductions") {
  LieAlgebra g = generated("g5_19", {{"beta", Rat(1, 2)}});
  Verdict v = compare(g, change_basis(g, random_invertible(5)));
  CHECK(v.kind == VerdictKind::OLogEquivalent);
  CHECK(has_fired(v, "R4-rigidity"));
  CHECK(v.witness.has_value());
}

TEST_CASE("reflexivity") {
  for (const CatalogEntry& e : catalog()) {
    std::vector<ParamMap> params = e.sample_params;
    if (params.empty()) params.push_back({});
    LieAlgebra g = e.generator(params.front());
    Verdict v = compare(g, g);
    CHECK(v.kind == VerdictKind::OLogEquivalent);
  }
}

TEST_CASE("an algebra is never separated from its own reduction") {
  for (const CatalogEntry& e : catalog()) {
    std::vector<ParamMap> params = e.sample_params;
    if (params.empty()) params.push_back({});
    for (const ParamMap& p : params) {
      LieAlgebra g = e.generator(p);
      Verdict v = compare(g, rho1(g).output);
      CHECK(v.kind != VerdictKind::NotQuasiisometric);
    }
  }
}

TEST_CASE("verdicts are symmetric") {
  std::vector<std::pair<LieAlgebra, LieAlgebra>> pairs = {
      {generated("g4_9_0"),
       direct_sum(abelian_algebra(1), generated("g3_5", {{"alpha", Rat(1, 2)}}))},
      {generated("g5_19", {{"beta", Rat(1, 3)}}),
       generated("g5_19", {{"beta", Rat(1, 2)}})},
      {generated("g3_3"), generated("g3_3")},
      {generated("heis"), abelian_algebra(3)},
  };
  for (const auto& [a, b] : pairs) CHECK(compare(a, b).kind == compare(b, a).kind);
}

TEST_CASE("certificates record every evaluated rule and replay") {
  LieAlgebra a = generated("g4_9_0");
  LieAlgebra b = direct_sum(abelian_algebra(1), generated("g3_5", {{"alpha", Rat(1, 2)}}));
  Verdict v = compare(a, b);
  CHECK(!v.certificate.empty());
  for (const RuleApplication& r : v.certificate) {
    CHECK(!r.rule_id.empty());
    CHECK(!r.conclusion.empty());
    CHECK(!r.citation.empty());
  }
  // Rules up to the first separation are present; at least one fired and
  // nothing after the separating rule was evaluated.
  CHECK(std::count_if(v.certificate.begin(), v.certificate.end(),
                      [](const RuleApplication& r) { return r.fired; }) >= 1);
  CHECK(v.certificate.back().fired);
  CHECK(replay(a, b, v));

  Verdict tampered = v;
  tampered.certificate.back().conclusion = "something else";
  CHECK(!replay(a, b, tampered));
}

TEST_CASE("inconclusive when no rule applies") {
  // Mixed-sign rank-one algebras are outside both the conformal-dimension
  // and the product rule; non-isomorphic reductions alone prove nothing.
  LieAlgebra variant(4);  // mixed weights (2, -1, 1) on the Heisenberg part
  variant.set_constant(0, 1, 2, Rat(1));
  variant.set_constant(3, 0, 0, Rat(2));
  variant.set_constant(3, 1, 1, Rat(-1));
  variant.set_constant(3, 2, 2, Rat(1));
  REQUIRE(validate(variant).ok);
  Verdict v = compare(generated("g4_8"), variant);
  CHECK(v.kind == VerdictKind::Inconclusive);
  // Every evaluated rule is recorded even though none fired.
  CHECK(!v.certificate.empty());
  for (const RuleApplication& r : v.certificate) CHECK(!r.fired);
  CHECK(replay(generated("g4_8"), variant, v));
}

TEST_CASE("extended catalog loads cleanly") {
  std::vector<ExtendedEntry> entries = load_extended();
  CHECK(entries.size() == 11);
  for (const ExtendedEntry& e : entries) {
    CHECK(validate(e.algebra).ok);
    CHECK(e.conedim.has_value());
    CHECK(e.dehn != "unknown");
    CHECK(!e.image_factor.empty());
  }
}

TEST_CASE("transcribed rows pass the reduction table") {
  BatchReport r = table1_report(load_extended());
  CHECK(r.all_ok());
  std::size_t passes = 0, skips = 0;
  for (const RowResult& row : r.rows) {
    if (row.status == RowStatus::Pass) ++passes;
    if (row.status == RowStatus::Skipped) ++skips;
    CHECK(row.status != RowStatus::Fail);
  }
  CHECK(passes == 11);
  // Known rows whose constants were not transcribed are reported skipped.
  CHECK(skips == 4);
  for (const RowResult& row : r.rows)
    if (row.status == RowStatus::Skipped) {
      CHECK(!row.detail.empty());
      bool known = row.name == "g5_13" || row.name == "g5_17" ||
                   row.name == "g5_25" || row.name == "g5_37";
      CHECK(known);
    }
}

TEST_CASE("dehn metadata is echoed, never computed") {
  BatchReport r = table1_report(load_extended());
  for (const RowResult& row : r.rows)
    if (row.status == RowStatus::Pass)
      CHECK(row.detail.find("metadata only") != std::string::npos);
}

TEST_CASE("family comparisons") {
  BatchReport r = family_report(load_extended());
  CHECK(r.all_ok());
  CHECK(!r.rows.empty());
  // Same image within a family: equivalent. Across: separated.
  auto find = [&](const std::string& needle) {
    for (const RowResult& row : r.rows)
      if (row.name.find(needle) != std::string::npos) return row.detail;
    return std::string();
  };
  std::string same = find("g5_16_t1 vs g5_16_t2");
  CHECK(same.find("OLogEquivalent") != std::string::npos);
  std::string diff = find("g5_19_1_2 vs g5_19_1_3");
  CHECK(diff.find("NotQuasiisometric") != std::string::npos);
}
