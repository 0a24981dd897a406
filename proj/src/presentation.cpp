#include "splitfox/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

#include "splitfox/errors.hpp"
#include "splitfox/intmat.hpp"

namespace splitfox {

bool valid_generator_symbol(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

Generator::Generator(std::string sym) : symbol(std::move(sym)) {
  if (!valid_generator_symbol(symbol))
    throw domain_error("invalid generator symbol: '" + symbol + "'");
}

Presentation::Presentation(std::vector<std::string> generators, std::vector<Word> relators)
    : gens_(std::move(generators)), relators_(std::move(relators)) {
  std::set<std::string> seen;
  for (const auto& g : gens_) {
    (void)Generator(g);
    if (!seen.insert(g).second) throw domain_error("duplicate generator: " + g);
  }
  for (const Word& r : relators_) {
    if (r.is_identity())
      throw domain_error("identity relator (padding is added via pad_relators only)");
    for (const Letter& l : r.letters())
      if (!seen.count(l.gen)) throw domain_error("relator uses unknown generator: " + l.gen);
  }
}

std::optional<std::size_t> Presentation::generator_index(const std::string& g) const {
  auto it = std::find(gens_.begin(), gens_.end(), g);
  if (it == gens_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - gens_.begin());
}

namespace {

IntMatrix exponent_matrix(const Presentation& p) {
  IntMatrix m(p.num_relators(), p.num_generators());
  for (std::size_t i = 0; i < p.num_relators(); ++i)
    for (const Letter& l : p.relators()[i].letters())
      m.at(i, *p.generator_index(l.gen)) += l.sign;
  return m;
}

}  // namespace

AbelianizationResult abelianize(const Presentation& p) {
  SmithResult s = smith_normal_form(exponent_matrix(p));
  AbelianizationResult out;
  out.free_rank = p.num_generators() - s.rank;
  for (const Int& d : s.diagonal())
    if (d > 1) out.torsion.push_back(d);
  return out;
}

std::vector<Int> abelianized_image(const Presentation& p, const Word& w) {
  std::vector<Int> v(p.num_generators(), Int(0));
  for (const Letter& l : w.letters()) {
    auto idx = p.generator_index(l.gen);
    if (!idx) throw domain_error("word uses unknown generator: " + l.gen);
    v[*idx] += l.sign;
  }
  return v;
}

bool is_primitive(const std::vector<Int>& v) {
  Int g = 0;
  for (const Int& x : v) g = boost::multiprecision::gcd(g, x);
  return g == 1;
}

long long Epimorphism::eval(const Word& w) const {
  long long s = 0;
  for (const Letter& l : w.letters()) {
    auto it = values.find(l.gen);
    if (it == values.end()) throw domain_error("epimorphism undefined on generator: " + l.gen);
    s += l.sign * it->second;
  }
  return s;
}

long long Epimorphism::operator()(const std::string& g) const {
  auto it = values.find(g);
  if (it == values.end()) throw domain_error("epimorphism undefined on generator: " + g);
  return it->second;
}

void Epimorphism::validate(const Presentation& p) const {
  long long g = 0;
  for (const auto& gen : p.generators()) {
    auto it = values.find(gen);
    if (it == values.end()) throw domain_error("epimorphism undefined on generator: " + gen);
    g = std::gcd(g, it->second);
  }
  if (g != 1) throw domain_error("epimorphism values are not coprime");
  for (const Word& r : p.relators())
    if (eval(r) != 0) throw domain_error("epimorphism does not kill a relator");
}

Epimorphism epimorphism_to_Z(const Presentation& p) {
  SmithResult s = smith_normal_form(exponent_matrix(p));
  std::size_t free_rank = p.num_generators() - s.rank;
  if (free_rank != 1)
    throw domain_error("abelianization has free rank " + std::to_string(free_rank) +
                       ", epimorphism to Z requires free rank 1");
  // With D = U M V, the free coordinate of H_1 = Z^k / rowspace(M) is the
  // first post-rank column of V; relators land on 0 there by construction.
  Epimorphism e;
  std::size_t col = s.rank;
  long long sign = 0;
  for (std::size_t i = 0; i < p.num_generators(); ++i) {
    Int val = s.v.at(i, col);
    long long x = static_cast<long long>(val);
    if (sign == 0 && x != 0) sign = x > 0 ? 1 : -1;
    e.values[p.generators()[i]] = x;
  }
  if (sign < 0)
    for (auto& [g, x] : e.values) x = -x;
  e.validate(p);
  return e;
}

Presentation pad_relators(const Presentation& p, std::size_t target) {
  Presentation out = p;
  while (out.relators_.size() < target) out.relators_.push_back(Word());
  return out;
}

Presentation introduce_generator(const Presentation& p, const std::string& name, const Word& w) {
  if (p.generator_index(name))
    throw domain_error("introduce_generator: name already in use: " + name);
  (void)Generator(name);
  for (const Letter& l : w.letters())
    if (!p.generator_index(l.gen))
      throw domain_error("introduce_generator: defining word uses unknown generator: " + l.gen);
  auto gens = p.generators();
  gens.push_back(name);
  auto rels = p.relators();
  rels.push_back(Word::letter(name, -1) * w);
  return Presentation(std::move(gens), std::move(rels));
}

Presentation eliminate_generator(const Presentation& p, const std::string& g,
                                 std::size_t relator_index) {
  auto gi = p.generator_index(g);
  if (!gi) throw domain_error("eliminate_generator: unknown generator: " + g);
  if (relator_index >= p.num_relators())
    throw domain_error("eliminate_generator: relator index out of range");
  const Word& r = p.relators()[relator_index];

  int occurrences = 0;
  std::size_t pos = 0;
  for (std::size_t i = 0; i < r.letters().size(); ++i) {
    if (r.letters()[i].gen == g) {
      ++occurrences;
      pos = i;
    }
  }
  if (occurrences == 0) throw domain_error("eliminate_generator: relator does not contain " + g);
  if (occurrences > 1)
    throw domain_error("eliminate_generator: generator occurs more than once in the relator");

  // r = u g^e v = 1  =>  g = (u^-1 v^-1)^e
  Word u = Word::from_letters(
      std::vector<Letter>(r.letters().begin(), r.letters().begin() + pos));
  Word v = Word::from_letters(
      std::vector<Letter>(r.letters().begin() + pos + 1, r.letters().end()));
  int e = r.letters()[pos].sign;
  Word image = (u.inverse() * v.inverse()).pow(e);

  std::vector<std::string> gens;
  for (const auto& x : p.generators())
    if (x != g) gens.push_back(x);
  std::vector<Word> rels;
  for (std::size_t i = 0; i < p.num_relators(); ++i) {
    if (i == relator_index) continue;
    Word s = substitute(p.relators()[i], g, image);
    // a relator may become freely trivial once g is expressed in the rest
    if (!s.is_identity()) rels.push_back(s);
  }
  return Presentation(std::move(gens), std::move(rels));
}

}  // namespace splitfox
