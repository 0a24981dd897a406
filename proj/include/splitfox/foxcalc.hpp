#pragma once

#include <map>
#include <string>
#include <vector>

#include "splitfox/bigint.hpp"
#include "splitfox/presentation.hpp"
#include "splitfox/word.hpp"

namespace splitfox {

// Element of the integral group ring Z[F] of a free group: finite formal sum
// of words with nonzero integer coefficients.
class GroupRingElement {
 public:
  GroupRingElement() = default;  // zero
  static GroupRingElement zero();
  static GroupRingElement one();
  static GroupRingElement word(const Word& w, Int coeff = 1);

  const std::map<Word, Int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  GroupRingElement operator+(const GroupRingElement&) const;
  GroupRingElement operator-(const GroupRingElement&) const;
  GroupRingElement operator-() const;
  GroupRingElement operator*(const GroupRingElement&) const;

  friend bool operator==(const GroupRingElement&, const GroupRingElement&) = default;

 private:
  std::map<Word, Int> terms_;
  void add_term(const Word& w, const Int& c);
};

// Fox free derivative d w / d g in Z[F]: d g / d g = 1, d g^-1 / d g = -g^-1,
// d(uv)/dg = du/dg + u dv/dg. Computed in one left-to-right pass: a positive
// letter g contributes its prefix, an inverse letter contributes minus the
// prefix including that letter.
GroupRingElement fox_derivative(const Word& w, const std::string& g);

// Jacobian (d r_i / d g_j), one row per relator, one column per generator.
// Padding relators give zero rows.
using FoxMatrix = std::vector<std::vector<GroupRingElement>>;
FoxMatrix fox_jacobian(const Presentation& p);

std::string to_string(const GroupRingElement& e);

}  // namespace splitfox
