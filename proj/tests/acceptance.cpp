// Acceptance suite: one test case per shipping criterion, each printing a
// final "[criterion N] PASS" / "[criterion N] FAIL" line. All polynomial and
// group-theoretic comparisons are exact (unit-normalized equality, zero
// tolerance); the only numeric guards are wall-clock limits, pinned here.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <iostream>
#include <random>
#include <vector>

#include "splitfox/cli.hpp"
#include "splitfox/dsl.hpp"
#include "splitfox/errors.hpp"
#include "splitfox/foxcalc.hpp"
#include "splitfox/hnn.hpp"
#include "splitfox/knotio.hpp"
#include "splitfox/subgroup_graph.hpp"
#include "splitfox/wada.hpp"
#include "test_util.hpp"

using namespace splitfox;
using testutil::P;
using testutil::W;
using testutil::poly;

namespace {

// Prints the verdict line even when a REQUIRE aborts the case body.
struct Criterion {
  int n;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  bool passed = false;

  explicit Criterion(int n) : n(n) {}
  long ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start)
        .count();
  }
  ~Criterion() {
    std::cout << "[criterion " << n << "] " << (passed ? "PASS" : "FAIL") << std::endl;
  }
};

const std::vector<std::string> kSplittingFixtures{"5_2", "5_2_rank3", "bs_1_2"};

}  // namespace

TEST_CASE("criterion 1: two-bridge splitting fixture, invariant and bounds") {
  Criterion c(1);
  KnotFixture f = builtin("5_2");
  Representation triv = trivial_rep(f.presentation);
  WadaResult w = wada_invariant(f.presentation, f.eps, triv);
  REQUIRE(equal_up_to_unit(w.Q, poly({{0, 2}, {1, -3}, {2, 2}})));
  REQUIRE(w.degree == 1);
  REQUIRE(genus_lower_bound(f.presentation, f.eps, triv) == 1);
  REQUIRE(splitting_rank_lower_bound(f.presentation, f.eps, triv) == 2);
  REQUIRE(c.ms() < 1000);
  c.passed = true;
}

TEST_CASE("criterion 2: fibered genus-1 example attains the degree bound") {
  Criterion c(2);
  KnotFixture f = builtin("trefoil");
  Representation triv = trivial_rep(f.presentation);
  WadaResult w = wada_invariant(f.presentation, f.eps, triv);
  REQUIRE(w.degree.has_value());
  const long k = static_cast<long>(triv.dimension);
  const long g = static_cast<long>(*f.known_genus);
  REQUIRE(*w.degree == k * (2 * g - 1));  // equality: the bound is sharp here
  REQUIRE(genus_lower_bound(f.presentation, f.eps, triv) == g);
  REQUIRE(c.ms() < 1000);
  c.passed = true;
}

TEST_CASE("criterion 3: ascending HNN example splits only over rank 1") {
  Criterion c(3);
  KnotFixture f = builtin("bs_1_2");
  Representation triv = trivial_rep(f.presentation);
  WadaResult w = wada_invariant(f.presentation, f.eps, triv);
  RationalFunction expected(poly({{0, -2}, {1, 1}}), poly({{0, 1}, {1, -1}}));
  REQUIRE(equal_up_to_unit(w.delta, expected));
  REQUIRE(w.degree == 0);
  REQUIRE(splitting_rank_lower_bound(f.presentation, f.eps, triv) == 1);
  REQUIRE(c.ms() < 1000);
  c.passed = true;
}

TEST_CASE("criterion 4: folding certificates for the splitting subgroups") {
  Criterion c(4);
  const std::vector<std::string> ab{"a", "b"};

  std::vector<Word> b_gens{W("a"), W("b^-1 a b^-1"), W("b^-2 a b^-2")};
  REQUIRE(stallings_fold(ab, b_gens).rank() == 3);
  REQUIRE(is_basis(ab, b_gens));

  // index-4 covering graph containing those generators: rank 5, and the
  // rank/index pair satisfies rank = index * (ambient rank - 1) + 1
  std::vector<Word> cover{W("a"), W("b^-1 a b^-1"), W("b^-1 a^2 b"), W("b^-2 a b^-2"),
                          W("b^4")};
  SubgroupGraph g = stallings_fold(ab, cover);
  REQUIRE(g.rank() == 5);
  REQUIRE(g.covering_index() == 4);
  REQUIRE(g.rank() == 4 * (2 - 1) + 1);
  for (const Word& w : b_gens) REQUIRE(g.contains(w));

  // both gluing maps are certified injective
  REQUIRE(free_hom_injective(ab, {W("a"), W("b^-1 a b^-1")},
                             {W("b"), W("b^-1 a b^-1 a")}));
  REQUIRE(free_hom_injective({"a", "b", "c"}, b_gens,
                             {W("b"), W("b^-1 a b^-1 a"), W("c")}));
  REQUIRE(c.ms() < 1000);
  c.passed = true;
}

TEST_CASE("criterion 5: amalgam presentations and non-freeness evidence") {
  Criterion c(5);
  SplittingData s = *builtin("5_2").splitting;

  Presentation a01 = amalgam_presentation(s, 0, 1);
  REQUIRE(a01.generators().size() == 4);
  REQUIRE(a01.relators().size() == 2);
  Presentation a02 = amalgam_presentation(s, 0, 2);
  REQUIRE(a02.generators().size() == 6);
  REQUIRE(a02.relators().size() == 4);

  AbelianizationResult h01 = abelianize(a01);
  REQUIRE(h01.free_rank == 2);
  REQUIRE(h01.torsion.empty());
  AbelianizationResult h02 = abelianize(a02);
  REQUIRE(h02.free_rank == 2);
  REQUIRE(h02.torsion.empty());

  // the three-level amalgam reduces to < e, f, h | e^-2 h^2 = f^3 >: a free
  // product amalgamated over the cyclic subgroups the two sides generate.
  // Neither side's element is primitive, so the amalgam is not free.
  Presentation reduced = P("< e, f, h | e^-2 h^2 = f^3 >");
  AbelianizationResult hr = abelianize(reduced);
  REQUIRE(hr.free_rank == 2);  // consistent with the unreduced form
  REQUIRE(hr.torsion.empty());
  REQUIRE(!is_primitive(abelianized_image(reduced, W("e^-2 h^2"))));
  REQUIRE(!is_primitive(abelianized_image(reduced, W("f^3"))));
  // sanity: a genuine basis element is primitive
  REQUIRE(is_primitive(abelianized_image(reduced, W("f"))));
  REQUIRE(c.ms() < 1000);
  c.passed = true;
}

TEST_CASE("criterion 6: invariant independent of deleted column and Tietze form") {
  Criterion c(6);

  for (const char* name : {"trefoil", "figure8"}) {
    KnotFixture f = builtin(name);
    ColumnIndependenceReport r =
        verify_column_independence(f.presentation, f.eps, trivial_rep(f.presentation));
    REQUIRE(r.ok);
    REQUIRE(!r.vacuous);
    REQUIRE(r.per_column.size() >= 2);  // every generator column is admissible
  }

  // the splitting fixture has a single admissible column, so comparison runs
  // against the generator-adjoining variant of the same group
  KnotFixture f = builtin("5_2");
  Representation triv = trivial_rep(f.presentation);
  Word c_def = W("t b^-2 a b^-2 t^-1");
  Presentation variant = introduce_generator(f.presentation, "c", c_def);
  Epimorphism veps = f.eps;
  veps.values["c"] = f.eps.eval(c_def);
  WadaVariant v{variant, veps, extend_representation(triv, "c", c_def), "adjoined c"};
  ColumnIndependenceReport r = verify_column_independence(f.presentation, f.eps, triv, {v});
  REQUIRE(r.ok);
  REQUIRE(!r.vacuous);
  REQUIRE(r.pairs_compared >= 1);
  c.passed = true;
}

TEST_CASE("criterion 7: degree bound over fixture and randomized splittings") {
  Criterion c(7);

  // fixture splittings: every representation of the full searches
  for (const std::string& name : kSplittingFixtures) {
    SplittingData s = *builtin(name).splitting;
    auto [hp, heps] = hnn_presentation(s);
    for (std::size_t dim : {1, 2}) {
      for (long long p : {2, 3}) {
        for (const Representation& alpha : search_homs(hp, dim, p)) {
          DegreeBoundReport r = degree_bound_check(s, alpha);
          REQUIRE(r.ok);
          if (!r.vacuous) REQUIRE(r.degree <= r.bound);
        }
      }
    }
  }

  // randomized splittings over free bases: construction machine-verifies the
  // basis and injectivity certificates; searches are capped per instance
  std::mt19937_64 rng(20260816);
  auto random_words = [&](const std::vector<std::string>& alphabet, std::size_t count) {
    std::vector<Word> ws;
    for (std::size_t i = 0; i < count; ++i)
      ws.push_back(testutil::random_word(rng, alphabet, 1 + rng() % 3));
    return ws;
  };

  int built = 0;
  while (built < 100) {
    const std::size_t base_rank = 1 + rng() % 3;
    const std::vector<std::string> pool{"a", "b", "c"};
    std::vector<std::string> alphabet(pool.begin(), pool.begin() + base_rank);
    const std::size_t d = 1 + rng() % std::min<std::size_t>(3, base_rank + 1);

    std::vector<Word> b_gens = random_words(alphabet, d);
    if (!is_basis(alphabet, b_gens)) continue;
    std::vector<Word> images = random_words(alphabet, d);
    if (!free_hom_injective(alphabet, b_gens, images)) continue;

    Presentation base(alphabet, {});
    SplittingData s = SplittingData::make(base, b_gens, images, "t");
    REQUIRE(s.monomorphism_verified);
    ++built;

    auto [hp, heps] = hnn_presentation(s);
    for (std::size_t dim : {1, 2}) {
      for (long long p : {2, 3}) {
        for (const Representation& alpha : search_homs(hp, dim, p, 5)) {
          DegreeBoundReport r = degree_bound_check(s, alpha);
          REQUIRE(r.ok);
        }
      }
    }
  }
  REQUIRE(built >= 100);
  REQUIRE(c.ms() < 60000);
  c.passed = true;
}

TEST_CASE("criterion 8: derivative telescoping identity on random words") {
  Criterion c(8);
  std::mt19937_64 rng(424242);
  const std::vector<std::string> gens{"a", "b", "c", "d"};
  for (int trial = 0; trial < 1000; ++trial) {
    Word w = testutil::random_word(rng, gens, 1 + rng() % 40);
    GroupRingElement sum;
    for (const auto& g : gens)
      sum = sum + fox_derivative(w, g) * (GroupRingElement::word(Word::letter(g)) -
                                          GroupRingElement::one());
    REQUIRE(sum == GroupRingElement::word(w) - GroupRingElement::one());
  }
  REQUIRE(c.ms() < 5000);
  c.passed = true;
}

TEST_CASE("criterion 9: two-banded matrix structure of splitting presentations") {
  Criterion c(9);
  for (const std::string& name : kSplittingFixtures) {
    SplittingData s = *builtin(name).splitting;
    auto [hp, heps] = hnn_presentation(s);
    for (std::size_t dim : {1, 2}) {
      for (long long p : {2, 3}) {
        for (const Representation& alpha : search_homs(hp, dim, p)) {
          BlockStructureReport r = verify_fox_block_structure(s, alpha);
          REQUIRE(r.ok);
          for (std::size_t i = 0; i < r.base_rows; ++i)
            for (long e : r.row_t_support[i]) REQUIRE(e == 0);
          for (std::size_t i = r.base_rows; i < r.row_t_support.size(); ++i)
            for (long e : r.row_t_support[i]) REQUIRE((e == 0 || e == 1));
        }
      }
    }
  }
  c.passed = true;
}

TEST_CASE("criterion 10: diagram codes reproduce the table polynomials") {
  Criterion c(10);
  auto ingest = [](const std::string& text) {
    auto [p, eps] = wirtinger_from_pd(parse_pd(text));
    for (const auto& g : p.generators()) REQUIRE(eps.values.at(g) == 1);
    return classical_alexander(p, eps);
  };
  REQUIRE(equal_up_to_unit(ingest("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"),
                           poly({{0, 1}, {1, -1}, {2, 1}})));
  REQUIRE(equal_up_to_unit(ingest("X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]"),
                           poly({{0, 1}, {1, -3}, {2, 1}})));
  c.passed = true;
}

TEST_CASE("criterion 11: documented failures on inadmissible input") {
  Criterion c(11);

  // deleting a column whose epimorphism value is zero
  KnotFixture f = builtin("5_2");
  Representation triv = trivial_rep(f.presentation);
  REQUIRE_THROWS_AS(wada_invariant(f.presentation, f.eps, triv, "a"), domain_error);
  try {
    wada_invariant(f.presentation, f.eps, triv, "a");
  } catch (const domain_error& e) {
    REQUIRE(std::string(e.what()).find("eps") != std::string::npos);
  }

  // a vanishing invariant refuses to produce bounds, in-process and via CLI
  Presentation z2 = pad_relators(P("< a, b, t | t a t^-1 a^-1 >"), 2);
  Epimorphism eps{{{"a", 0}, {"b", 0}, {"t", 1}}};
  REQUIRE_THROWS_AS(genus_lower_bound(z2, eps, trivial_rep(z2)), domain_error);
  REQUIRE_THROWS_AS(splitting_rank_lower_bound(z2, eps, trivial_rep(z2)), domain_error);

  std::ostringstream out, err;
  int code = cli_run({"bound", "--present", "< a, b, t | t a t^-1 a^-1 >", "--eps",
                      "a=0,b=0,t=1"},
                     out, err);
  REQUIRE(code == 1);
  int code2 = cli_run({"wada", "--fixture", "5_2", "--column", "a"}, out, err);
  REQUIRE(code2 == 1);
  c.passed = true;
}
