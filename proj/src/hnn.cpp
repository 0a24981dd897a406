#include "splitfox/hnn.hpp"

#include <algorithm>

#include "splitfox/errors.hpp"
#include "splitfox/foxcalc.hpp"
#include "splitfox/subgroup_graph.hpp"

namespace splitfox {

SplittingData SplittingData::make(Presentation base, std::vector<Word> b_gens,
                                  std::vector<Word> phi_images, std::string stable) {
  if (b_gens.size() != phi_images.size())
    throw domain_error("SplittingData: b_gens and phi_images differ in length");
  if (b_gens.empty()) throw domain_error("SplittingData: B must have at least one generator");
  if (!valid_generator_symbol(stable))
    throw domain_error("SplittingData: invalid stable letter symbol: " + stable);
  if (base.generator_index(stable))
    throw domain_error("SplittingData: stable letter collides with a base generator");
  for (const Word& w : b_gens) reduce_over(base.generators(), w.letters());
  for (const Word& w : phi_images) reduce_over(base.generators(), w.letters());

  SplittingData s{std::move(base), std::move(b_gens), std::move(phi_images), std::move(stable),
                  false};
  if (s.base.num_relators() == 0) {
    if (!is_basis(s.base.generators(), s.b_gens))
      throw domain_error("SplittingData: b_gens is not a basis of the subgroup it generates");
    if (!free_hom_injective(s.base.generators(), s.b_gens, s.phi_images))
      throw domain_error("SplittingData: phi is not injective");
    s.monomorphism_verified = true;
  }
  return s;
}

std::pair<Presentation, Epimorphism> hnn_presentation(const SplittingData& s) {
  std::vector<std::string> gens = s.base.generators();
  gens.push_back(s.stable);
  std::vector<Word> rels = s.base.relators();
  Word t = Word::letter(s.stable);
  for (std::size_t j = 0; j < s.b_gens.size(); ++j)
    rels.push_back(s.phi_images[j].inverse() * t * s.b_gens[j] * t.inverse());
  Epimorphism eps;
  for (const auto& g : s.base.generators()) eps.values[g] = 0;
  eps.values[s.stable] = 1;
  return {Presentation(std::move(gens), std::move(rels)), std::move(eps)};
}

std::string level_tag(const std::string& gen, int level) {
  if (level >= 0) return gen + "_" + std::to_string(level);
  return gen + "_n" + std::to_string(-level);
}

namespace {

Word tag_word(const Word& w, int level) {
  std::vector<Letter> out;
  for (const Letter& l : w.letters()) out.push_back({level_tag(l.gen, level), l.sign});
  return Word::from_letters(out);
}

}  // namespace

Presentation amalgam_presentation(const SplittingData& s, int n, int m) {
  if (n > m) throw domain_error("amalgam_presentation: requires n <= m");
  std::vector<std::string> gens;
  std::vector<Word> rels;
  for (int level = n; level <= m; ++level)
    for (const auto& g : s.base.generators()) gens.push_back(level_tag(g, level));
  for (int level = n; level <= m; ++level)
    for (const Word& r : s.base.relators()) rels.push_back(tag_word(r, level));
  for (int level = n; level < m; ++level)
    for (std::size_t j = 0; j < s.b_gens.size(); ++j)
      rels.push_back(tag_word(s.phi_images[j], level).inverse() *
                     tag_word(s.b_gens[j], level + 1));
  return Presentation(std::move(gens), std::move(rels));
}

Presentation shift_levels(const Presentation& amalgam, const SplittingData& s, int n, int m,
                          int delta) {
  if (amalgam != amalgam_presentation(s, n, m))
    throw domain_error("shift_levels: presentation is not amalgam_presentation(s, n, m)");
  return amalgam_presentation(s, n + delta, m + delta);
}

SplittingData induced_splitting(const SplittingData& s, int n) {
  if (n < 0) throw domain_error("induced_splitting: requires n >= 0");
  Presentation base = amalgam_presentation(s, 0, n + 1);
  std::vector<Word> b_gens;
  std::vector<Word> phi_images;
  for (int level = 0; level <= n; ++level)
    for (const auto& g : s.base.generators()) {
      b_gens.push_back(Word::letter(level_tag(g, level)));
      phi_images.push_back(Word::letter(level_tag(g, level + 1)));
    }
  SplittingData out{std::move(base), std::move(b_gens), std::move(phi_images), s.stable, false};
  // the new b_gens are distinct level-0..n generators of the amalgam and phi
  // relabels them one level up; both properties hold by construction
  out.monomorphism_verified = s.monomorphism_verified;
  return out;
}

BlockStructureReport verify_fox_block_structure(const SplittingData& s,
                                                const Representation& alpha) {
  auto [p, eps] = hnn_presentation(s);
  std::size_t stable_col = p.num_generators() - 1;
  std::size_t d = alpha.dimension;
  FoxMatrix jac = fox_jacobian(p);

  BlockStructureReport report;
  report.base_rows = s.base.num_relators();
  report.splitting_rows = s.b_gens.size();
  for (std::size_t i = 0; i < p.num_relators(); ++i) {
    std::set<long> support;
    for (std::size_t j = 0; j < p.num_generators(); ++j) {
      if (j == stable_col) continue;
      PolyMatrix cell = tensor_eval(alpha, eps, jac[i][j]);
      for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b)
          for (const auto& [exp, c] : cell.at(a, b).coeffs()) support.insert(exp);
    }
    bool row_ok = i < report.base_rows
                      ? std::all_of(support.begin(), support.end(),
                                    [](long e) { return e == 0; })
                      : std::all_of(support.begin(), support.end(),
                                    [](long e) { return e == 0 || e == 1; });
    if (!row_ok) report.ok = false;
    report.row_t_support.push_back(std::move(support));
  }
  return report;
}

DegreeBoundReport degree_bound_check(const SplittingData& s, const Representation& alpha) {
  auto [p, eps] = hnn_presentation(s);
  if (p.num_relators() + 1 < p.num_generators())
    p = pad_relators(p, p.num_generators() - 1);
  DegreeBoundReport report{true, false, 0, 0, 0, wada_invariant(p, eps, alpha)};
  report.bound = static_cast<long>(alpha.dimension) *
                 (static_cast<long>(s.b_gens.size()) - 1);
  if (!report.wada.degree) {
    report.vacuous = true;
    return report;
  }
  report.degree = *report.wada.degree;
  report.slack = report.bound - report.degree;
  report.ok = report.degree <= report.bound;
  return report;
}

}  // namespace splitfox
