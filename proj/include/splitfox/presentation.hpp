#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "splitfox/bigint.hpp"
#include "splitfox/word.hpp"

namespace splitfox {

// A declared generator symbol. Symbols match [A-Za-z][A-Za-z0-9_]* and are
// unique within a presentation.
struct Generator {
  explicit Generator(std::string symbol);
  std::string symbol;
  friend bool operator==(const Generator&, const Generator&) = default;
};

bool valid_generator_symbol(const std::string& s);

// Finite presentation < generators | relators >. Relators are freely reduced
// and nonempty; identity relators exist only as trailing padding added by
// pad_relators (their Fox rows are zero and they change nothing about the
// group).
class Presentation {
 public:
  Presentation(std::vector<std::string> generators, std::vector<Word> relators);

  const std::vector<std::string>& generators() const { return gens_; }
  const std::vector<Word>& relators() const { return relators_; }
  std::size_t num_generators() const { return gens_.size(); }
  std::size_t num_relators() const { return relators_.size(); }
  std::optional<std::size_t> generator_index(const std::string& g) const;
  bool is_padding(std::size_t i) const { return relators_[i].is_identity(); }

  friend bool operator==(const Presentation&, const Presentation&) = default;

  friend Presentation pad_relators(const Presentation& p, std::size_t target);

 private:
  Presentation() = default;
  std::vector<std::string> gens_;
  std::vector<Word> relators_;
};

// H_1 of the presented group: Z^free_rank + sum Z/torsion[i], computed by
// Smith normal form of the relator exponent matrix over exact integers.
struct AbelianizationResult {
  std::size_t free_rank = 0;
  std::vector<Int> torsion;  // divisibility chain, each entry > 1
  friend bool operator==(const AbelianizationResult&, const AbelianizationResult&) = default;
};

AbelianizationResult abelianize(const Presentation& p);

// Exponent-sum vector of w in the generator order of p.
std::vector<Int> abelianized_image(const Presentation& p, const Word& w);

// gcd of the vector's entries is 1. A basis element of a free group must have
// a primitive abelianized image; gcd > 1 certifies "not primitive".
bool is_primitive(const std::vector<Int>& v);

// Homomorphism onto Z, one integer per generator; relators map to 0 and the
// values have gcd 1.
struct Epimorphism {
  std::map<std::string, long long> values;
  long long eval(const Word& w) const;
  long long operator()(const std::string& g) const;
  void validate(const Presentation& p) const;
  friend bool operator==(const Epimorphism&, const Epimorphism&) = default;
};

// The canonical map onto the free part of H_1, defined when free_rank == 1;
// unique up to sign, normalized so the first generator with nonzero value is
// positive. Errors when free_rank != 1.
Epimorphism epimorphism_to_Z(const Presentation& p);

// Appends identity relators until num_relators() == max(target, current).
// The group is unchanged; padding makes deficiency bookkeeping explicit.
Presentation pad_relators(const Presentation& p, std::size_t target);

// Tietze move: add generator `name` with defining relator name^-1 * w.
Presentation introduce_generator(const Presentation& p, const std::string& name, const Word& w);

// Tietze move: relator `relator_index` must contain exactly one occurrence of
// g (either sign); solves it for g, substitutes everywhere, drops g and the
// used relator. Other relators that become freely trivial after substitution
// are dropped too.
Presentation eliminate_generator(const Presentation& p, const std::string& g,
                                 std::size_t relator_index);

}  // namespace splitfox
