#pragma once

#include <random>
#include <string>
#include <vector>

#include "splitfox/dsl.hpp"
#include "splitfox/field.hpp"
#include "splitfox/laurent.hpp"
#include "splitfox/presentation.hpp"
#include "splitfox/word.hpp"

namespace splitfox::testutil {

inline Word W(const std::string& s) { return parse_word(s); }
inline Presentation P(const std::string& s) { return parse_presentation(s); }

// integer Laurent polynomial over Q from (exponent, coefficient) pairs
inline LaurentPoly poly(std::initializer_list<std::pair<long, long>> coeffs) {
  ExactField q = ExactField::rationals();
  LaurentPoly p(q);
  for (const auto& [e, c] : coeffs) p = p + LaurentPoly::monomial(q, e, q.from_int(c));
  return p;
}

// uniformly random freely reduced word of exactly `len` letters (shorter only
// if the alphabet has a single generator and reduction is impossible to avoid,
// which cannot happen: we never pick the inverse of the previous letter)
inline Word random_word(std::mt19937_64& rng, const std::vector<std::string>& alphabet,
                        std::size_t len) {
  std::vector<Letter> letters;
  std::uniform_int_distribution<std::size_t> pick_gen(0, alphabet.size() - 1);
  std::uniform_int_distribution<int> pick_sign(0, 1);
  while (letters.size() < len) {
    Letter l{alphabet[pick_gen(rng)], pick_sign(rng) ? 1 : -1};
    if (!letters.empty() && letters.back().gen == l.gen && letters.back().sign == -l.sign)
      continue;
    letters.push_back(l);
  }
  return Word::from_letters(letters);
}

}  // namespace splitfox::testutil
