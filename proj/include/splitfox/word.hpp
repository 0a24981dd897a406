#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace splitfox {

// One letter of a free-group word: a generator symbol or its inverse.
struct Letter {
  std::string gen;
  int sign = +1;  // +1 or -1

  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter& a, const Letter& b) {
    if (auto c = a.gen <=> b.gen; c != 0) return c;
    return a.sign <=> b.sign;
  }
};

// A freely reduced word. The empty word is the identity. Words do not own an
// alphabet; operations that need one (folding, presentations, the DSL) take it
// explicitly and reject unknown symbols there.
class Word {
 public:
  Word() = default;

  // Free-reduces the given letter sequence.
  static Word from_letters(const std::vector<Letter>& raw);
  static Word letter(const std::string& gen, int sign = +1);

  const std::vector<Letter>& letters() const { return letters_; }
  bool is_identity() const { return letters_.empty(); }
  std::size_t length() const { return letters_.size(); }

  Word operator*(const Word& rhs) const;  // reduced concatenation
  Word inverse() const;
  Word pow(int e) const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word& a, const Word& b) {
    return a.letters_ <=> b.letters_;
  }

 private:
  std::vector<Letter> letters_;
};

// Validating reduction: every letter must name a generator of `alphabet`.
Word reduce_over(const std::vector<std::string>& alphabet, const std::vector<Letter>& raw);

// Replaces every occurrence of `gen` in `w` by `image` (inverted for inverse
// letters) and reduces. Letters other than `gen` pass through unchanged.
Word substitute(const Word& w, const std::string& gen, const Word& image);

// Debug/display form; the DSL serializer is the canonical one.
std::string to_string(const Word& w);

}  // namespace splitfox
