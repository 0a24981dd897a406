#include <doctest.h>

#include "splitfox/dsl.hpp"
#include "splitfox/errors.hpp"
#include "splitfox/hnn.hpp"
#include "splitfox/knotio.hpp"
#include "test_util.hpp"

using namespace splitfox;
using testutil::P;
using testutil::W;

namespace {

SplittingData geometric_5_2() { return *builtin("5_2").splitting; }

}  // namespace

TEST_CASE("splitting construction checks its inputs") {
  Presentation free2 = P("< a, b | >");

  SplittingData s = SplittingData::make(free2, {W("a"), W("b^-1 a b^-1")},
                                        {W("b"), W("b^-1 a b^-1 a")}, "t");
  CHECK(s.monomorphism_verified);  // free base: checked by folding

  // arity mismatch
  CHECK_THROWS_AS(SplittingData::make(free2, {W("a")}, {}, "t"), domain_error);
  // stable letter collides with a base generator
  CHECK_THROWS_AS(SplittingData::make(free2, {W("a")}, {W("b")}, "a"), domain_error);
  // b_gens not a basis of the subgroup they generate: a, a^2
  CHECK_THROWS_AS(SplittingData::make(free2, {W("a"), W("a a")}, {W("a"), W("b")}, "t"),
                  domain_error);
  // phi not injective: both images equal
  CHECK_THROWS_AS(SplittingData::make(free2, {W("a"), W("b")}, {W("a"), W("a")}, "t"),
                  domain_error);

  // non-free base: taken on trust, flagged
  SplittingData trust =
      SplittingData::make(P("< a, b | a b a^-1 b^-1 >"), {W("a")}, {W("a")}, "t");
  CHECK(!trust.monomorphism_verified);
}

TEST_CASE("HNN presentation relators and epimorphism") {
  auto [p, eps] = hnn_presentation(geometric_5_2());
  CHECK(p.generators() == std::vector<std::string>{"a", "b", "t"});
  REQUIRE(p.relators().size() == 2);
  CHECK(serialize(p.relators()[0]) == "b^-1 t a t^-1");
  CHECK(serialize(p.relators()[1]) == "a^-1 b a^-1 b t b^-1 a b^-1 t^-1");
  CHECK(eps.values.at("a") == 0);
  CHECK(eps.values.at("b") == 0);
  CHECK(eps.values.at("t") == 1);
}

TEST_CASE("level tags") {
  CHECK(level_tag("a", 0) == "a_0");
  CHECK(level_tag("a", 3) == "a_3");
  CHECK(level_tag("b", -1) == "b_n1");
  CHECK(level_tag("b", -12) == "b_n12");
}

TEST_CASE("two-level amalgam") {
  Presentation a01 = amalgam_presentation(geometric_5_2(), 0, 1);
  CHECK(serialize(a01) ==
        "< a_0, b_0, a_1, b_1 | b_0^-1 a_1, a_0^-1 b_0 a_0^-1 b_0 b_1^-1 a_1 b_1^-1 >");
  // one level is just a relabeled copy of the base (free here)
  Presentation a00 = amalgam_presentation(geometric_5_2(), 0, 0);
  CHECK(serialize(a00) == "< a_0, b_0 | >");
}

TEST_CASE("three-level amalgam and level shifts") {
  SplittingData s = geometric_5_2();
  Presentation a02 = amalgam_presentation(s, 0, 2);
  CHECK(a02.generators() ==
        std::vector<std::string>{"a_0", "b_0", "a_1", "b_1", "a_2", "b_2"});
  CHECK(a02.relators().size() == 4);

  Presentation shifted = shift_levels(a02, s, 0, 2, -1);
  CHECK(shifted == amalgam_presentation(s, -1, 1));
  CHECK(shifted.generators().front() == "a_n1");
  CHECK(shift_levels(shifted, s, -1, 1, 1) == a02);

  // shape mismatch is rejected
  CHECK_THROWS_AS(shift_levels(a02, s, 0, 1, 1), domain_error);
}

TEST_CASE("induced splitting on the sub-tower") {
  SplittingData s = geometric_5_2();

  SplittingData ind0 = induced_splitting(s, 0);
  CHECK(ind0.base == amalgam_presentation(s, 0, 1));
  CHECK(ind0.stable == s.stable);
  // B is the whole level-0 copy of the base, pushed up one level by phi
  REQUIRE(ind0.b_gens.size() == 2);
  CHECK(serialize(ind0.b_gens[0]) == "a_0");
  CHECK(serialize(ind0.b_gens[1]) == "b_0");
  CHECK(serialize(ind0.phi_images[0]) == "a_1");
  CHECK(serialize(ind0.phi_images[1]) == "b_1");

  SplittingData ind1 = induced_splitting(s, 1);
  CHECK(ind1.base == amalgam_presentation(s, 0, 2));
  CHECK(ind1.b_gens.size() == 4);  // levels 0 and 1
  CHECK(serialize(ind1.phi_images[2]) == "a_2");

  // the induced extension presents the same group: same invariant
  auto [p0, e0] = hnn_presentation(s);
  auto [p1, e1] = hnn_presentation(ind0);
  WadaResult w0 = wada_invariant(pad_relators(p0, p0.generators().size() - 1), e0,
                                 trivial_rep(p0));
  WadaResult w1 = wada_invariant(pad_relators(p1, p1.generators().size() - 1), e1,
                                 trivial_rep(p1));
  CHECK(equal_up_to_unit(w0.delta, w1.delta));
}

TEST_CASE("Fox matrix block structure P + tQ") {
  for (const char* name : {"5_2", "5_2_rank3", "bs_1_2"}) {
    CAPTURE(name);
    SplittingData s = *builtin(name).splitting;
    auto [p, eps] = hnn_presentation(s);
    BlockStructureReport r = verify_fox_block_structure(s, trivial_rep(p));
    CHECK(r.ok);
    CHECK(r.base_rows == s.base.relators().size());
    CHECK(r.splitting_rows == s.b_gens.size());
    REQUIRE(r.row_t_support.size() == r.base_rows + r.splitting_rows);
    for (std::size_t i = 0; i < r.base_rows; ++i)
      for (long e : r.row_t_support[i]) CHECK(e == 0);
    for (std::size_t i = r.base_rows; i < r.row_t_support.size(); ++i)
      for (long e : r.row_t_support[i]) CHECK((e == 0 || e == 1));
  }
}

TEST_CASE("degree of the invariant against the block-size bound") {
  auto check = [](const std::string& name, long expect_degree, long expect_bound) {
    CAPTURE(name);
    SplittingData s = *builtin(name).splitting;
    auto [p, eps] = hnn_presentation(s);
    DegreeBoundReport r = degree_bound_check(s, trivial_rep(p));
    CHECK(r.ok);
    CHECK(!r.vacuous);
    CHECK(r.degree == expect_degree);
    CHECK(r.bound == expect_bound);
    CHECK(r.slack == expect_bound - expect_degree);
  };
  check("5_2", 1, 1);        // two B-generators, dimension 1
  check("5_2_rank3", 1, 2);  // three B-generators: strict slack
  check("bs_1_2", 0, 0);     // one B-generator: degree forced to 0
}

TEST_CASE("the two geometric splittings of one knot group agree") {
  auto [p2, e2] = hnn_presentation(*builtin("5_2").splitting);
  auto [p3, e3] = hnn_presentation(*builtin("5_2_rank3").splitting);
  WadaResult w2 = wada_invariant(pad_relators(p2, 2), e2, trivial_rep(p2));
  WadaResult w3 = wada_invariant(pad_relators(p3, 3), e3, trivial_rep(p3));
  CHECK(equal_up_to_unit(w2.delta, w3.delta));
  CHECK(equal_up_to_unit(w2.Q, builtin("5_2").known_alexander.value()));
}
