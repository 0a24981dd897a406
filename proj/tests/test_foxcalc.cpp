#include <doctest.h>

#include <random>

#include "splitfox/foxcalc.hpp"
#include "test_util.hpp"

using namespace splitfox;
using testutil::P;
using testutil::W;

namespace {

GroupRingElement ring(const Word& w, long c = 1) { return GroupRingElement::word(w, c); }

// sum_j (dw/dg_j)(g_j - 1) = w - 1, the product rule's telescoping form
GroupRingElement fundamental_identity_lhs(const Word& w,
                                          const std::vector<std::string>& gens) {
  GroupRingElement sum;
  for (const auto& g : gens)
    sum = sum + fox_derivative(w, g) *
                    (ring(Word::letter(g)) - GroupRingElement::one());
  return sum;
}

}  // namespace

TEST_CASE("group ring arithmetic") {
  GroupRingElement a = ring(W("a"));
  GroupRingElement b = ring(W("b"));
  CHECK(a + b == b + a);
  CHECK(a - a == GroupRingElement::zero());
  CHECK(GroupRingElement::one() * a == a);
  CHECK(a * b == ring(W("a b")));
  CHECK((a + b) * (a - b) == ring(W("a a")) - ring(W("a b")) + ring(W("b a")) - ring(W("b b")));
  CHECK(ring(W("a"), 2) + ring(W("a"), -2) == GroupRingElement::zero());
  CHECK((-a).terms().at(W("a")) == -1);
  // multiplication reduces words: a * a^-1 collapses to 1
  CHECK(ring(W("a")) * ring(W("a^-1")) == GroupRingElement::one());
}

TEST_CASE("derivative of single letters") {
  CHECK(fox_derivative(W("a"), "a") == GroupRingElement::one());
  CHECK(fox_derivative(W("a"), "b") == GroupRingElement::zero());
  CHECK(fox_derivative(W("a^-1"), "a") == -ring(W("a^-1")));
}

TEST_CASE("product rule shapes") {
  // d(ab)/da = 1, d(ab)/db = a
  CHECK(fox_derivative(W("a b"), "a") == GroupRingElement::one());
  CHECK(fox_derivative(W("a b"), "b") == ring(W("a")));
  // d(a^2)/da = 1 + a
  CHECK(fox_derivative(W("a a"), "a") == GroupRingElement::one() + ring(W("a")));
  // d(a^-2)/da = -a^-1 - a^-2
  CHECK(fox_derivative(W("a^-2"), "a") == -ring(W("a^-1")) - ring(W("a^-2")));
  // commutator: d(aba^-1b^-1)/da = 1 - aba^-1
  CHECK(fox_derivative(W("a b a^-1 b^-1"), "a")
        == GroupRingElement::one() - ring(W("a b a^-1")));
}

TEST_CASE("conjugation-relator row used by splitting presentations") {
  Word r = W("t a t^-1 b^-1");
  CHECK(fox_derivative(r, "a") == ring(W("t")));
  CHECK(fox_derivative(r, "b") == -ring(W("t a t^-1 b^-1")));
  CHECK(fox_derivative(r, "t") == GroupRingElement::one() - ring(W("t a t^-1")));
}

TEST_CASE("fundamental identity on fixed words") {
  std::vector<std::string> gens{"a", "b"};
  for (const char* s : {"a", "a^-1", "a b", "a b a^-1 b^-1", "a^3 b^-2 a b"}) {
    Word w = W(s);
    CHECK(fundamental_identity_lhs(w, gens) == ring(w) - GroupRingElement::one());
  }
  CHECK(fundamental_identity_lhs(Word(), gens) == GroupRingElement::zero());
}

TEST_CASE("fundamental identity on random words") {
  std::mt19937_64 rng(8128);
  std::vector<std::string> gens{"a", "b", "c"};
  for (int trial = 0; trial < 300; ++trial) {
    Word w = testutil::random_word(rng, gens, 25);
    CHECK(fundamental_identity_lhs(w, gens) == ring(w) - GroupRingElement::one());
  }
}

TEST_CASE("jacobian layout follows the presentation") {
  Presentation p = pad_relators(P("< a, b, t | t a t^-1 b^-1 >"), 2);
  FoxMatrix m = fox_jacobian(p);
  REQUIRE(m.size() == 2);
  REQUIRE(m[0].size() == 3);
  CHECK(m[0][0] == ring(W("t")));
  CHECK(m[0][1] == -ring(W("t a t^-1 b^-1")));
  CHECK(m[0][2] == GroupRingElement::one() - ring(W("t a t^-1")));
  // padding rows are identically zero
  for (const auto& e : m[1]) CHECK(e.is_zero());
}

TEST_CASE("derivative is linear over the prefix decomposition") {
  // d(uv)/dg = du/dg + u dv/dg on random pairs
  std::mt19937_64 rng(11);
  std::vector<std::string> gens{"a", "b"};
  for (int trial = 0; trial < 100; ++trial) {
    Word u = testutil::random_word(rng, gens, 8);
    Word v = testutil::random_word(rng, gens, 8);
    for (const auto& g : gens) {
      GroupRingElement lhs = fox_derivative(u * v, g);
      GroupRingElement rhs = fox_derivative(u, g) + ring(u) * fox_derivative(v, g);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("printing is stable") {
  CHECK(to_string(GroupRingElement::zero()) == "0");
  CHECK(to_string(GroupRingElement::one() - ring(W("a b"))) == "1*(1) + -1*(a b)");
}
