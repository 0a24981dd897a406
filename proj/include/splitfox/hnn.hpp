#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "splitfox/presentation.hpp"
#include "splitfox/reps.hpp"
#include "splitfox/wada.hpp"

namespace splitfox {

// HNN splitting data: base group A (presented), free-rank-d subgroup B given
// by generators (words over A's generators), an injective map phi on B given
// by the images of those generators, and a stable letter. When A is a free
// presentation (no relators) the basis property of b_gens and injectivity of
// phi are machine-checked at construction; otherwise they are taken on trust
// and flagged.
struct SplittingData {
  Presentation base;
  std::vector<Word> b_gens;
  std::vector<Word> phi_images;
  std::string stable;
  bool monomorphism_verified = false;

  static SplittingData make(Presentation base, std::vector<Word> b_gens,
                            std::vector<Word> phi_images, std::string stable);
};

// Presentation of the HNN extension A*_phi = < A, t | t x t^-1 = phi(x) >:
// generators A + t, relators = A's relators + phi(x_j)^-1 t x_j t^-1, with
// eps(t) = 1 and eps = 0 on A.
std::pair<Presentation, Epimorphism> hnn_presentation(const SplittingData& s);

// Level tag used by amalgam generators: g_0, g_1, ... and g_n1 for level -1.
std::string level_tag(const std::string& gen, int level);

// The amalgam A_[n,m] = A_n *_B A_{n+1} *_B ... *_B A_m inside the fiber-sum
// tower: one relabeled copy of A per level (level-major generator order), and
// for each level j in [n, m) and each B-generator x the gluing relator
// (phi(x)@j)^-1 * (x@(j+1)).
Presentation amalgam_presentation(const SplittingData& s, int n, int m);

// Relabels levels by delta: amalgam(n, m) -> amalgam(n+delta, m+delta).
Presentation shift_levels(const Presentation& amalgam, const SplittingData& s, int n, int m,
                          int delta);

// The splitting induced on the sub-tower: base A_[0,n+1], B generated by all
// level-0..n generators, phi = shift one level up, same stable letter. Its
// HNN extension presents the same group as hnn_presentation(s).
SplittingData induced_splitting(const SplittingData& s, int n);

// The stable-letter-deleted, (alpha tensor eps)-evaluated Fox matrix of an
// HNN presentation decomposes as P + tQ: rows of base relators use only
// t-exponent 0, rows of splitting relators only t-exponents {0, 1}.
struct BlockStructureReport {
  bool ok = true;
  std::vector<std::set<long>> row_t_support;  // one entry per relator row
  std::size_t base_rows = 0;
  std::size_t splitting_rows = 0;
};

BlockStructureReport verify_fox_block_structure(const SplittingData& s,
                                                const Representation& alpha);

// degree(delta) <= dim(alpha) * (|b_gens| - 1) whenever delta != 0; vacuous
// when delta = 0. `wada` holds the invariant of hnn_presentation(s), padded
// to deficiency as needed.
struct DegreeBoundReport {
  bool ok = true;
  bool vacuous = false;  // delta = 0
  long degree = 0;       // meaningful when !vacuous
  long bound = 0;        // dim * (d - 1)
  long slack = 0;        // bound - degree
  WadaResult wada;
};

DegreeBoundReport degree_bound_check(const SplittingData& s, const Representation& alpha);

}  // namespace splitfox
