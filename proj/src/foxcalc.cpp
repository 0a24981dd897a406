#include "splitfox/foxcalc.hpp"

namespace splitfox {

GroupRingElement GroupRingElement::zero() { return GroupRingElement(); }

GroupRingElement GroupRingElement::one() { return word(Word()); }

GroupRingElement GroupRingElement::word(const Word& w, Int coeff) {
  GroupRingElement e;
  e.add_term(w, coeff);
  return e;
}

void GroupRingElement::add_term(const Word& w, const Int& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

GroupRingElement GroupRingElement::operator+(const GroupRingElement& rhs) const {
  GroupRingElement out = *this;
  for (const auto& [w, c] : rhs.terms_) out.add_term(w, c);
  return out;
}

GroupRingElement GroupRingElement::operator-(const GroupRingElement& rhs) const {
  GroupRingElement out = *this;
  for (const auto& [w, c] : rhs.terms_) out.add_term(w, -c);
  return out;
}

GroupRingElement GroupRingElement::operator-() const {
  GroupRingElement out;
  for (const auto& [w, c] : terms_) out.terms_.emplace(w, -c);
  return out;
}

GroupRingElement GroupRingElement::operator*(const GroupRingElement& rhs) const {
  GroupRingElement out;
  for (const auto& [w1, c1] : terms_)
    for (const auto& [w2, c2] : rhs.terms_) out.add_term(w1 * w2, c1 * c2);
  return out;
}

GroupRingElement fox_derivative(const Word& w, const std::string& g) {
  GroupRingElement out;
  Word prefix;
  for (const Letter& l : w.letters()) {
    if (l.gen == g && l.sign > 0) {
      out = out + GroupRingElement::word(prefix);
    }
    prefix = prefix * Word::from_letters({l});
    if (l.gen == g && l.sign < 0) {
      // d(g^-1)/dg = -g^-1, translated: minus the prefix including this letter
      out = out - GroupRingElement::word(prefix);
    }
  }
  return out;
}

FoxMatrix fox_jacobian(const Presentation& p) {
  FoxMatrix m;
  m.reserve(p.num_relators());
  for (const Word& r : p.relators()) {
    std::vector<GroupRingElement> row;
    row.reserve(p.num_generators());
    for (const std::string& g : p.generators()) row.push_back(fox_derivative(r, g));
    m.push_back(std::move(row));
  }
  return m;
}

std::string to_string(const GroupRingElement& e) {
  if (e.is_zero()) return "0";
  std::string s;
  for (const auto& [w, c] : e.terms()) {
    if (!s.empty()) s += " + ";
    s += c.str() + "*(" + to_string(w) + ")";
  }
  return s;
}

}  // namespace splitfox
