#include "splitfox/word.hpp"

#include <algorithm>
#include <cstdlib>

#include "splitfox/errors.hpp"

namespace splitfox {

Word Word::from_letters(const std::vector<Letter>& raw) {
  Word w;
  for (const Letter& l : raw) {
    if (l.sign != 1 && l.sign != -1) throw domain_error("letter sign must be +1 or -1");
    if (!w.letters_.empty() && w.letters_.back().gen == l.gen &&
        w.letters_.back().sign == -l.sign) {
      w.letters_.pop_back();
    } else {
      w.letters_.push_back(l);
    }
  }
  return w;
}

Word Word::letter(const std::string& gen, int sign) {
  return from_letters({Letter{gen, sign}});
}

Word Word::operator*(const Word& rhs) const {
  Word w = *this;
  for (const Letter& l : rhs.letters_) {
    if (!w.letters_.empty() && w.letters_.back().gen == l.gen &&
        w.letters_.back().sign == -l.sign) {
      w.letters_.pop_back();
    } else {
      w.letters_.push_back(l);
    }
  }
  return w;
}

Word Word::inverse() const {
  Word w;
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    w.letters_.push_back(Letter{it->gen, -it->sign});
  return w;
}

Word Word::pow(int e) const {
  Word base = e < 0 ? inverse() : *this;
  Word out;
  for (int i = 0; i < std::abs(e); ++i) out = out * base;
  return out;
}

Word reduce_over(const std::vector<std::string>& alphabet, const std::vector<Letter>& raw) {
  for (const Letter& l : raw) {
    if (std::find(alphabet.begin(), alphabet.end(), l.gen) == alphabet.end())
      throw domain_error("unknown generator symbol: " + l.gen);
  }
  return Word::from_letters(raw);
}

Word substitute(const Word& w, const std::string& gen, const Word& image) {
  Word out;
  for (const Letter& l : w.letters()) {
    if (l.gen == gen) {
      out = out * (l.sign > 0 ? image : image.inverse());
    } else {
      out = out * Word::from_letters({l});
    }
  }
  return out;
}

std::string to_string(const Word& w) {
  if (w.is_identity()) return "1";
  std::string s;
  for (const Letter& l : w.letters()) {
    if (!s.empty()) s += ' ';
    s += l.gen;
    if (l.sign < 0) s += "^-1";
  }
  return s;
}

}  // namespace splitfox
