#include <doctest.h>

#include "splitfox/errors.hpp"
#include "splitfox/knotio.hpp"
#include "splitfox/wada.hpp"
#include "test_util.hpp"

using namespace splitfox;
using testutil::P;
using testutil::W;
using testutil::poly;

namespace {

RationalFunction over_one_minus_t(const LaurentPoly& num) {
  return RationalFunction(num, poly({{0, 1}, {1, -1}}));
}

}  // namespace

TEST_CASE("two-relator splitting presentation, trivial representation") {
  KnotFixture f = builtin("5_2");
  WadaResult w = wada_invariant(f.presentation, f.eps, trivial_rep(f.presentation));
  CHECK(w.deleted_column == "t");
  CHECK(w.minors_evaluated == 1);
  CHECK(equal_up_to_unit(w.Q, poly({{0, 2}, {1, -3}, {2, 2}})));
  CHECK(equal_up_to_unit(w.denom, poly({{0, 1}, {1, -1}})));
  CHECK(equal_up_to_unit(w.delta, over_one_minus_t(poly({{0, 2}, {1, -3}, {2, 2}}))));
  CHECK(w.degree == 1);
  CHECK(genus_lower_bound(f.presentation, f.eps, trivial_rep(f.presentation)) == 1);
  CHECK(splitting_rank_lower_bound(f.presentation, f.eps, trivial_rep(f.presentation)) == 2);
}

TEST_CASE("one-relator fibered example") {
  Presentation p = P("< a, b | a b a b^-1 a^-1 b^-1 >");
  Epimorphism eps{{{"a", 1}, {"b", 1}}};
  WadaResult w = wada_invariant(p, eps, trivial_rep(p));
  CHECK(w.deleted_column == "a");
  CHECK(equal_up_to_unit(w.Q, poly({{0, 1}, {1, -1}, {2, 1}})));
  CHECK(w.degree == 1);
  CHECK(genus_lower_bound(p, eps, trivial_rep(p)) == 1);
  CHECK(splitting_rank_lower_bound(p, eps, trivial_rep(p)) == 2);
}

TEST_CASE("ascending-but-not-fibered example has degree 0") {
  KnotFixture f = builtin("bs_1_2");
  WadaResult w = wada_invariant(f.presentation, f.eps, trivial_rep(f.presentation));
  CHECK(equal_up_to_unit(w.Q, poly({{0, -2}, {1, 1}})));
  CHECK(w.degree == 0);
  CHECK(splitting_rank_lower_bound(f.presentation, f.eps, trivial_rep(f.presentation)) == 1);
}

TEST_CASE("rank-1 free group needs no relators and gives a negative degree") {
  Presentation p = P("< a | >");
  Epimorphism eps{{{"a", 1}}};
  WadaResult w = wada_invariant(p, eps, trivial_rep(p));
  CHECK(w.Q.is_one());  // the empty minor
  CHECK(w.degree == -1);
  CHECK(genus_lower_bound(p, eps, trivial_rep(p)) == 0);
  CHECK(splitting_rank_lower_bound(p, eps, trivial_rep(p)) == 0);
}

TEST_CASE("vanishing invariant carries no information") {
  // HNN of F(a, b) over <a> with the identity gluing: the a-column minor dies
  Presentation p = pad_relators(P("< a, b, t | t a t^-1 a^-1 >"), 2);
  Epimorphism eps{{{"a", 0}, {"b", 0}, {"t", 1}}};
  WadaResult w = wada_invariant(p, eps, trivial_rep(p));
  CHECK(w.Q.is_zero());
  CHECK(w.delta.is_zero());
  CHECK(!w.degree.has_value());
  CHECK_THROWS_AS(genus_lower_bound(p, eps, trivial_rep(p)), domain_error);
  CHECK_THROWS_AS(splitting_rank_lower_bound(p, eps, trivial_rep(p)), domain_error);
}

TEST_CASE("preconditions") {
  Presentation free2 = P("< a, b | >");
  Epimorphism eps{{{"a", 1}, {"b", 0}}};
  // deficiency too high: 0 relators < 2 generators - 1
  CHECK_THROWS_AS(wada_invariant(free2, eps, trivial_rep(free2)), domain_error);

  KnotFixture f = builtin("5_2");
  Representation triv = trivial_rep(f.presentation);
  CHECK_THROWS_AS(wada_invariant(f.presentation, f.eps, triv, "a"), domain_error);  // eps 0
  CHECK_THROWS_AS(wada_invariant(f.presentation, f.eps, triv, "zz"), domain_error);
}

TEST_CASE("padding with identity relators does not change the invariant") {
  KnotFixture f = builtin("5_2");
  Representation triv = trivial_rep(f.presentation);
  WadaResult base = wada_invariant(f.presentation, f.eps, triv);
  WadaResult padded = wada_invariant(pad_relators(f.presentation, 4), f.eps, triv);
  CHECK(equal_up_to_unit(base.delta, padded.delta));
  CHECK(base.degree == padded.degree);
  // more rows were scanned, all zero minors ignored by the gcd
  CHECK(padded.minors_evaluated > base.minors_evaluated);
}

TEST_CASE("column independence across admissible columns") {
  // every arc generator of a diagram presentation has eps = 1
  auto [p, eps] = wirtinger_from_pd(parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"));
  ColumnIndependenceReport r = verify_column_independence(p, eps, trivial_rep(p));
  CHECK(r.ok);
  CHECK(!r.vacuous);
  CHECK(r.per_column.size() == 3);
  CHECK(r.pairs_compared == 3);
  for (const auto& [label, res] : r.per_column)
    CHECK(equal_up_to_unit(res.Q, poly({{0, 1}, {1, -1}, {2, 1}})));
}

TEST_CASE("column independence across a generator-introducing variant") {
  KnotFixture f = builtin("5_2");
  Representation triv = trivial_rep(f.presentation);

  // adjoin c = t b^-2 a b^-2 t^-1 as a new generator; same group
  Word c_def = W("t b^-2 a b^-2 t^-1");
  Presentation variant = introduce_generator(f.presentation, "c", c_def);
  Epimorphism veps = f.eps;
  veps.values["c"] = f.eps.eval(c_def);
  Representation valpha = extend_representation(triv, "c", c_def);
  CHECK(veps.values.at("c") == 0);

  ColumnIndependenceReport r = verify_column_independence(
      f.presentation, f.eps, triv, {{variant, veps, valpha, "with c adjoined"}});
  CHECK(r.ok);
  CHECK(!r.vacuous);
  CHECK(r.per_column.size() == 2);  // only t is admissible in the base
  WadaResult base = wada_invariant(f.presentation, f.eps, triv);
  for (const auto& [label, res] : r.per_column)
    CHECK(equal_up_to_unit(res.delta, base.delta));
}

TEST_CASE("classical route through the polynomial Smith form") {
  Presentation trefoil = P("< a, b | a b a b^-1 a^-1 b^-1 >");
  Epimorphism eps{{{"a", 1}, {"b", 1}}};
  LaurentPoly alex = classical_alexander(trefoil, eps);
  CHECK(equal_up_to_unit(alex, poly({{0, 1}, {1, -1}, {2, 1}})));

  // untwisted Wada numerator agrees with the classical polynomial
  WadaResult w = wada_invariant(trefoil, eps, trivial_rep(trefoil));
  CHECK(equal_up_to_unit(w.Q, alex));

  // and the same consistency on a two-relator presentation
  KnotFixture f = builtin("5_2");
  CHECK(equal_up_to_unit(classical_alexander(f.presentation, f.eps),
                         poly({{0, 2}, {1, -3}, {2, 2}})));
}

TEST_CASE("bound arithmetic from degrees") {
  CHECK(genus_bound_from_degree(1, 1) == 1);
  CHECK(genus_bound_from_degree(0, 1) == 1);
  CHECK(genus_bound_from_degree(-1, 1) == 0);
  CHECK(genus_bound_from_degree(3, 2) == 2);
  CHECK(genus_bound_from_degree(4, 2) == 2);
  CHECK(rank_bound_from_degree(1, 1) == 2);
  CHECK(rank_bound_from_degree(0, 1) == 1);
  CHECK(rank_bound_from_degree(-1, 1) == 0);
  CHECK(rank_bound_from_degree(3, 2) == 3);
  CHECK(rank_bound_from_degree(4, 2) == 3);
}

TEST_CASE("twisted computation over a finite field") {
  // 2-dimensional mod-2 images for the fibered example: the invariant stays
  // computable and its degree respects deg Q - deg denom
  Presentation trefoil = P("< a, b | a b a b^-1 a^-1 b^-1 >");
  Epimorphism eps{{{"a", 1}, {"b", 1}}};
  std::vector<Representation> reps = search_homs(trefoil, 2, 2);
  REQUIRE(!reps.empty());
  for (const auto& alpha : reps) {
    WadaResult w = wada_invariant(trefoil, eps, alpha);
    if (!w.Q.is_zero()) {
      CHECK(*w.degree == degree(w.Q) - degree(w.denom));
      // genus of the fibered example is 1: bound must not exceed it
      CHECK(genus_bound_from_degree(*w.degree, alpha.dimension) <= 1);
    }
  }
}
