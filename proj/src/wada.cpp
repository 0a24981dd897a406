#include "splitfox/wada.hpp"

#include <algorithm>

#include "splitfox/errors.hpp"
#include "splitfox/foxcalc.hpp"

namespace splitfox {

namespace {

// admissible = eps(generator) != 0 so that det((alpha tensor eps)(1 - g)) is
// a nonzero polynomial (constant term 1, top term a unit multiple of t^(d*e))
std::size_t pick_column(const Presentation& p, const Epimorphism& eps,
                        const std::optional<std::string>& column) {
  if (column) {
    auto idx = p.generator_index(*column);
    if (!idx) throw domain_error("wada_invariant: unknown generator: " + *column);
    if (eps(*column) == 0)
      throw domain_error("wada_invariant: deleted column must have eps != 0, but eps(" +
                         *column + ") = 0");
    return *idx;
  }
  for (std::size_t i = 0; i < p.num_generators(); ++i)
    if (eps(p.generators()[i]) != 0) return i;
  throw domain_error("wada_invariant: no generator with eps != 0");
}

// subsets of {0..n-1} of size m, lexicographic
bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
  std::size_t m = c.size();
  for (std::size_t i = m; i-- > 0;) {
    if (c[i] + (m - i) < n) {
      ++c[i];
      for (std::size_t j = i + 1; j < m; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

long ceil_div(long a, long b) {
  long q = a / b;
  if (a % b != 0 && ((a > 0) == (b > 0))) ++q;
  return q;
}

}  // namespace

WadaResult wada_invariant(const Presentation& p, const Epimorphism& eps,
                          const Representation& alpha,
                          const std::optional<std::string>& column) {
  std::size_t k = p.num_generators();
  std::size_t l = p.num_relators();
  if (l + 1 < k)
    throw domain_error("wada_invariant: needs at least " + std::to_string(k - 1) +
                       " relators; pad_relators first");
  eps.validate(p);
  std::size_t col = pick_column(p, eps, column);
  std::size_t d = alpha.dimension;
  const ExactField& f = alpha.field;

  FoxMatrix jac = fox_jacobian(p);
  PolyMatrix big(f, l * d, k * d);
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      PolyMatrix cell = tensor_eval(alpha, eps, jac[i][j]);
      for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) big.at(i * d + a, j * d + b) = cell.at(a, b);
    }

  WadaResult out{LaurentPoly(f), LaurentPoly(f),
                 RationalFunction(LaurentPoly(f), LaurentPoly::constant(f, f.one())),
                 std::nullopt, p.generators()[col], 0};

  // Q = gcd over all row selections of the (k-1)x(k-1) block minors
  std::size_t deleted_rows = l + 1 - k;
  LaurentPoly q(f);
  std::vector<std::size_t> J(deleted_rows);
  for (std::size_t i = 0; i < deleted_rows; ++i) J[i] = i;
  bool more = true;
  while (more) {
    PolyMatrix minor = delete_submatrix(big, J, col, d);
    LaurentPoly det = determinant(minor);
    ++out.minors_evaluated;
    if (!det.is_zero()) q = laurent_gcd(q, det);
    if (q.is_one()) break;  // gcd stabilized at a unit
    more = deleted_rows > 0 && next_combination(J, l);
  }
  out.Q = q;

  GroupRingElement one_minus_g =
      GroupRingElement::one() - GroupRingElement::word(Word::letter(p.generators()[col]));
  out.denom = determinant(tensor_eval(alpha, eps, one_minus_g));
  if (out.denom.is_zero())
    throw domain_error("wada_invariant: det((alpha tensor eps)(1 - g)) vanished; "
                       "the representation is degenerate for this column");
  out.delta = RationalFunction(out.Q, out.denom);
  if (!out.Q.is_zero()) out.degree = degree(out.Q) - degree(out.denom);
  return out;
}

LaurentPoly classical_alexander(const Presentation& p, const Epimorphism& eps,
                                const ExactField& f) {
  eps.validate(p);
  FoxMatrix jac = fox_jacobian(p);
  PolyMatrix m(f, p.num_relators(), p.num_generators());
  for (std::size_t i = 0; i < p.num_relators(); ++i)
    for (std::size_t j = 0; j < p.num_generators(); ++j) {
      LaurentPoly e(f);
      for (const auto& [w, c] : jac[i][j].terms())
        e = e + LaurentPoly::monomial(f, static_cast<long>(eps.eval(w)), f.from_int(c));
      m.at(i, j) = e;
    }
  std::vector<LaurentPoly> diag = poly_smith_diagonal(m);
  // the first elementary ideal is generated by the product of the first k-1
  // invariant factors; with rank <= k-1 that is all of them
  LaurentPoly alex = LaurentPoly::constant(f, f.one());
  if (diag.size() + 1 > p.num_generators())
    throw domain_error("classical_alexander: Fox matrix has full rank; is eps a valid "
                       "epimorphism for this presentation?");
  for (const LaurentPoly& d : diag) alex = alex * d;
  return alex.unit_normalized();
}

Representation extend_representation(const Representation& alpha, const std::string& name,
                                     const Word& w) {
  Representation out = alpha;
  out.images.emplace(name, alpha.eval(w));
  return out;
}

ColumnIndependenceReport verify_column_independence(const Presentation& p,
                                                    const Epimorphism& eps,
                                                    const Representation& alpha,
                                                    const std::vector<WadaVariant>& variants) {
  ColumnIndependenceReport report;
  for (const auto& g : p.generators()) {
    if (eps(g) == 0) continue;
    report.per_column.emplace_back(g, wada_invariant(p, eps, alpha, g));
  }
  for (const WadaVariant& v : variants) {
    WadaResult r = wada_invariant(v.presentation, v.eps, v.alpha);
    report.per_column.emplace_back(
        v.label.empty() ? "variant:" + r.deleted_column : v.label, std::move(r));
  }
  for (std::size_t i = 0; i + 1 < report.per_column.size(); ++i)
    for (std::size_t j = i + 1; j < report.per_column.size(); ++j) {
      ++report.pairs_compared;
      if (!equal_up_to_unit(report.per_column[i].second.delta,
                            report.per_column[j].second.delta))
        report.ok = false;
    }
  report.vacuous = report.per_column.size() < 2;
  return report;
}

long genus_bound_from_degree(long deg, std::size_t dimension) {
  long k = static_cast<long>(dimension);
  return ceil_div(deg + k, 2 * k);
}

long rank_bound_from_degree(long deg, std::size_t dimension) {
  return ceil_div(deg, static_cast<long>(dimension)) + 1;
}

namespace {

long bound_or_throw(const Presentation& p, const Epimorphism& eps, const Representation& alpha,
                    bool genus) {
  WadaResult r = wada_invariant(p, eps, alpha);
  if (!r.degree)
    throw domain_error("bound undefined: the invariant vanished (no information)");
  return genus ? genus_bound_from_degree(*r.degree, alpha.dimension)
               : rank_bound_from_degree(*r.degree, alpha.dimension);
}

}  // namespace

long genus_lower_bound(const Presentation& p, const Epimorphism& eps,
                       const Representation& alpha) {
  return bound_or_throw(p, eps, alpha, true);
}

long splitting_rank_lower_bound(const Presentation& p, const Epimorphism& eps,
                                const Representation& alpha) {
  return bound_or_throw(p, eps, alpha, false);
}

}  // namespace splitfox
