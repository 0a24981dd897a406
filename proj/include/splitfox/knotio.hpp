#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "splitfox/hnn.hpp"
#include "splitfox/laurent.hpp"
#include "splitfox/presentation.hpp"

namespace splitfox {

// Planar diagram code. Each crossing X[a,b,c,d] lists the four edge labels
// counterclockwise starting at the incoming under-strand a, so the under-
// strand runs a -> c and the over-strand occupies b and d. Edge labels run
// 1..2n along the knot, each appearing exactly twice. signs[i] overrides the
// crossing handedness; 0 derives it from the edge numbering (the over-strand
// runs b -> d when d follows b cyclically).
struct PDCode {
  std::vector<std::array<int, 4>> crossings;
  std::vector<int> signs;  // empty or one of {-1, 0, +1} per crossing

  void validate() const;
};

// "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"
PDCode parse_pd(const std::string& text);

// Wirtinger presentation: one generator per arc (maximal over-strand run),
// one conjugation relator per crossing with the redundant last relator
// dropped, eps = 1 on every generator. The convention is pinned empirically:
// ingestion must reproduce the fixture Alexander polynomials.
std::pair<Presentation, Epimorphism> wirtinger_from_pd(const PDCode& pd);

struct KnotFixture {
  std::string name;
  Presentation presentation;
  Epimorphism eps;
  std::optional<int> known_genus;
  std::optional<LaurentPoly> known_alexander;
  std::optional<SplittingData> splitting;
};

// Built-in fixtures: unknot, trefoil, figure8, 5_2, 5_2_rank3, bs_1_2.
KnotFixture builtin(const std::string& name);
std::vector<std::string> builtin_names();

}  // namespace splitfox
