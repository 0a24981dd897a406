#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "splitfox/laurent.hpp"
#include "splitfox/presentation.hpp"
#include "splitfox/reps.hpp"

namespace splitfox {

// Twisted Alexander invariant of a presented group, well defined up to units
// c * t^k once the deleted column is admissible (eps of the generator != 0).
struct WadaResult {
  LaurentPoly Q;             // gcd of the evaluated minors, unit-normalized
  LaurentPoly denom;         // det((alpha tensor eps)(1 - g_i))
  RationalFunction delta;    // Q / denom, normalized
  std::optional<long> degree;  // degree(Q) - degree(denom); nullopt when Q = 0
  std::string deleted_column;
  std::size_t minors_evaluated = 0;
};

// Requires num_relators >= num_generators - 1 (pad first if not). Deletes the
// column of `column` (default: first generator with eps != 0; must have
// eps != 0), evaluates all row-deleted minors under (alpha tensor eps), and
// takes their gcd. delta = 0 means "no information".
WadaResult wada_invariant(const Presentation& p, const Epimorphism& eps,
                          const Representation& alpha,
                          const std::optional<std::string>& column = std::nullopt);

// Independent route for the untwisted case: Smith normal form over F[t] of
// the eps-evaluated Fox matrix; the product of the invariant factors is the
// classical Alexander polynomial (unit-normalized).
LaurentPoly classical_alexander(const Presentation& p, const Epimorphism& eps,
                                const ExactField& f = ExactField::rationals());

// A presentation/epimorphism/representation triple whose invariant must agree
// with the base one (a Tietze variant of the same group).
struct WadaVariant {
  Presentation presentation;
  Epimorphism eps;
  Representation alpha;
  std::string label;
};

struct ColumnIndependenceReport {
  bool ok = true;
  bool vacuous = false;  // fewer than two invariants compared
  std::vector<std::pair<std::string, WadaResult>> per_column;  // and per variant
  std::size_t pairs_compared = 0;
};

// Computes the invariant for every admissible column of p (and every supplied
// variant triple) and checks pairwise agreement up to units.
ColumnIndependenceReport verify_column_independence(const Presentation& p,
                                                    const Epimorphism& eps,
                                                    const Representation& alpha,
                                                    const std::vector<WadaVariant>& variants = {});

// Extends alpha to the presentation produced by introduce_generator(p, name, w)
// by alpha(name) = alpha(w).
Representation extend_representation(const Representation& alpha, const std::string& name,
                                     const Word& w);

// ceil((degree/k + 1) / 2) with k = alpha.dimension: lower bound for the genus
// of a knot whose group this is. Errors when delta = 0.
long genus_lower_bound(const Presentation& p, const Epimorphism& eps,
                       const Representation& alpha);

// ceil(degree/k) + 1: lower bound for the rank of the base of any splitting.
// Errors when delta = 0.
long splitting_rank_lower_bound(const Presentation& p, const Epimorphism& eps,
                                const Representation& alpha);

long genus_bound_from_degree(long degree, std::size_t dimension);
long rank_bound_from_degree(long degree, std::size_t dimension);

}  // namespace splitfox
