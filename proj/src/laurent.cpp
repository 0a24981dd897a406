#include "splitfox/laurent.hpp"

#include <algorithm>

#include "splitfox/errors.hpp"

namespace splitfox {

LaurentPoly LaurentPoly::constant(const ExactField& f, const ExactField::Elem& c) {
  return monomial(f, 0, c);
}

LaurentPoly LaurentPoly::monomial(const ExactField& f, long exp, const ExactField::Elem& c) {
  LaurentPoly p(f);
  p.set(exp, c);
  return p;
}

void LaurentPoly::set(long exp, const ExactField::Elem& c) {
  if (field_.is_zero(c))
    coeffs_.erase(exp);
  else
    coeffs_[exp] = c;
}

bool LaurentPoly::is_one() const {
  return coeffs_.size() == 1 && coeffs_.begin()->first == 0 && coeffs_.begin()->second == 1;
}

long LaurentPoly::lowest_exp() const {
  if (is_zero()) throw domain_error("zero polynomial has no lowest exponent");
  return coeffs_.begin()->first;
}

long LaurentPoly::top_exp() const {
  if (is_zero()) throw domain_error("zero polynomial has no top exponent");
  return coeffs_.rbegin()->first;
}

ExactField::Elem LaurentPoly::coeff(long exp) const {
  auto it = coeffs_.find(exp);
  return it == coeffs_.end() ? field_.zero() : it->second;
}

ExactField::Elem LaurentPoly::leading_coeff() const { return coeffs_.rbegin()->second; }

namespace {

void check_same_field(const LaurentPoly& a, const LaurentPoly& b) {
  if (!(a.field() == b.field())) throw domain_error("mixed coefficient fields");
}

}  // namespace

LaurentPoly LaurentPoly::operator+(const LaurentPoly& rhs) const {
  check_same_field(*this, rhs);
  LaurentPoly out = *this;
  for (const auto& [e, c] : rhs.coeffs_) out.set(e, field_.add(out.coeff(e), c));
  return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& rhs) const {
  check_same_field(*this, rhs);
  LaurentPoly out = *this;
  for (const auto& [e, c] : rhs.coeffs_) out.set(e, field_.sub(out.coeff(e), c));
  return out;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out(field_);
  for (const auto& [e, c] : coeffs_) out.coeffs_.emplace(e, field_.neg(c));
  return out;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& rhs) const {
  check_same_field(*this, rhs);
  LaurentPoly out(field_);
  for (const auto& [e1, c1] : coeffs_)
    for (const auto& [e2, c2] : rhs.coeffs_)
      out.set(e1 + e2, field_.add(out.coeff(e1 + e2), field_.mul(c1, c2)));
  return out;
}

LaurentPoly LaurentPoly::shifted(long delta) const {
  LaurentPoly out(field_);
  for (const auto& [e, c] : coeffs_) out.coeffs_.emplace(e + delta, c);
  return out;
}

LaurentPoly LaurentPoly::scaled(const ExactField::Elem& c) const {
  LaurentPoly out(field_);
  if (field_.is_zero(c)) return out;
  for (const auto& [e, k] : coeffs_) out.coeffs_.emplace(e, field_.mul(k, c));
  return out;
}

LaurentPoly LaurentPoly::unit_normalized() const {
  if (is_zero()) return *this;
  return shifted(-lowest_exp()).scaled(field_.inv(leading_coeff()));
}

long degree(const LaurentPoly& p) {
  if (p.is_zero()) throw domain_error("degree of the zero polynomial is undefined");
  return p.top_exp() - p.lowest_exp();
}

PolyDivMod divmod(const LaurentPoly& a, const LaurentPoly& b) {
  check_same_field(a, b);
  if (b.is_zero()) throw domain_error("polynomial division by zero");
  const ExactField& f = a.field();
  LaurentPoly q(f), r = a;
  while (!r.is_zero() && r.top_exp() >= b.top_exp()) {
    long e = r.top_exp() - b.top_exp();
    ExactField::Elem c = f.div(r.leading_coeff(), b.leading_coeff());
    LaurentPoly m = LaurentPoly::monomial(f, e, c);
    q = q + m;
    r = r - m * b;
  }
  return {q, r};
}

LaurentPoly div_exact(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero()) {
    if (b.is_zero()) throw domain_error("polynomial division by zero");
    return a;
  }
  // units t^k are handled by shifting so ordinary division applies
  long shift = a.lowest_exp() - b.lowest_exp();
  PolyDivMod d = divmod(a.shifted(-a.lowest_exp()), b.shifted(-b.lowest_exp()));
  if (!d.rem.is_zero()) throw domain_error("polynomial division is not exact");
  return d.quot.shifted(shift);
}

LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  check_same_field(a, b);
  LaurentPoly x = a.is_zero() ? a : a.shifted(-a.lowest_exp());
  LaurentPoly y = b.is_zero() ? b : b.shifted(-b.lowest_exp());
  while (!y.is_zero()) {
    LaurentPoly r = divmod(x, y).rem;
    x = y;
    y = r.is_zero() ? r : r.shifted(-r.lowest_exp());
  }
  return x.unit_normalized();
}

LaurentPoly laurent_gcd(const std::vector<LaurentPoly>& ps, const ExactField& f) {
  LaurentPoly g = LaurentPoly::zero(f);
  for (const LaurentPoly& p : ps) {
    g = laurent_gcd(g, p);
    if (g.is_one()) break;  // gcd stabilized at a unit
  }
  return g;
}

bool equal_up_to_unit(const LaurentPoly& p, const LaurentPoly& q) {
  if (p.is_zero() || q.is_zero()) return p.is_zero() && q.is_zero();
  return p.unit_normalized() == q.unit_normalized();
}

RationalFunction::RationalFunction(LaurentPoly num, LaurentPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  check_same_field(num_, den_);
  if (den_.is_zero()) throw domain_error("rational function with zero denominator");
  const ExactField& f = num_.field();
  if (num_.is_zero()) {
    den_ = LaurentPoly::constant(f, f.one());
    return;
  }
  LaurentPoly g = laurent_gcd(num_, den_);
  if (!g.is_one()) {
    num_ = div_exact(num_, g);
    den_ = div_exact(den_, g);
  }
  num_ = num_.shifted(-num_.lowest_exp());
  den_ = den_.shifted(-den_.lowest_exp());
  ExactField::Elem lc = den_.leading_coeff();
  den_ = den_.scaled(f.inv(lc));
  num_ = num_.scaled(f.inv(lc));
}

long degree(const RationalFunction& f) {
  if (f.is_zero()) throw domain_error("degree of the zero rational function is undefined");
  return degree(f.num()) - degree(f.den());
}

bool equal_up_to_unit(const RationalFunction& p, const RationalFunction& q) {
  if (p.is_zero() || q.is_zero()) return p.is_zero() && q.is_zero();
  return equal_up_to_unit(p.num() * q.den(), q.num() * p.den());
}

PolyMatrix::PolyMatrix(ExactField field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)),
      rows_(rows),
      cols_(cols),
      data_(rows * cols, LaurentPoly(field_)) {}

namespace detail {

LaurentPoly det_cofactor(const PolyMatrix& m) {
  const ExactField& f = m.field();
  std::size_t n = m.rows();
  if (n == 0) return LaurentPoly::constant(f, f.one());
  if (n == 1) return m.at(0, 0);
  LaurentPoly det(f);
  for (std::size_t j = 0; j < n; ++j) {
    if (m.at(0, j).is_zero()) continue;
    PolyMatrix minor(f, n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      std::size_t cj = 0;
      for (std::size_t k = 0; k < n; ++k) {
        if (k == j) continue;
        minor.at(i - 1, cj++) = m.at(i, k);
      }
    }
    LaurentPoly term = m.at(0, j) * det_cofactor(minor);
    det = (j % 2 == 0) ? det + term : det - term;
  }
  return det;
}

LaurentPoly det_bareiss(const PolyMatrix& m) {
  const ExactField& f = m.field();
  std::size_t n = m.rows();
  if (n == 0) return LaurentPoly::constant(f, f.one());

  // shift rows to ordinary polynomials; the determinant regains t^total
  long total_shift = 0;
  std::vector<std::vector<LaurentPoly>> a(n, std::vector<LaurentPoly>(n, LaurentPoly(f)));
  for (std::size_t i = 0; i < n; ++i) {
    long low = 0;
    bool any = false;
    for (std::size_t j = 0; j < n; ++j) {
      if (!m.at(i, j).is_zero()) {
        low = any ? std::min(low, m.at(i, j).lowest_exp()) : m.at(i, j).lowest_exp();
        any = true;
      }
    }
    if (!any) return LaurentPoly::zero(f);  // zero row
    total_shift += low;
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m.at(i, j).shifted(-low);
  }

  bool negate = false;
  LaurentPoly prev = LaurentPoly::constant(f, f.one());
  for (std::size_t p = 0; p + 1 < n; ++p) {
    if (a[p][p].is_zero()) {
      std::size_t r = p + 1;
      while (r < n && a[r][p].is_zero()) ++r;
      if (r == n) return LaurentPoly::zero(f);
      std::swap(a[p], a[r]);
      negate = !negate;
    }
    for (std::size_t i = p + 1; i < n; ++i) {
      for (std::size_t j = p + 1; j < n; ++j) {
        // fraction-free step: division by the previous pivot is exact
        a[i][j] = div_exact(a[p][p] * a[i][j] - a[i][p] * a[p][j], prev);
      }
      a[i][p] = LaurentPoly::zero(f);
    }
    prev = a[p][p];
  }
  LaurentPoly det = a[n - 1][n - 1].shifted(total_shift);
  return negate ? -det : det;
}

}  // namespace detail

LaurentPoly determinant(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw domain_error("determinant of a non-square matrix");
  if (m.rows() <= 4) return detail::det_cofactor(m);
  return detail::det_bareiss(m);
}

PolyMatrix delete_submatrix(const PolyMatrix& m, const std::vector<std::size_t>& rows,
                            std::size_t col, std::size_t block) {
  if (block == 0 || m.rows() % block != 0 || m.cols() % block != 0)
    throw domain_error("delete_submatrix: matrix shape is not a multiple of the block size");
  std::size_t row_blocks = m.rows() / block;
  std::size_t col_blocks = m.cols() / block;
  if (col >= col_blocks) throw domain_error("delete_submatrix: column block out of range");
  std::vector<bool> drop(row_blocks, false);
  for (std::size_t r : rows) {
    if (r >= row_blocks) throw domain_error("delete_submatrix: row block out of range");
    if (drop[r]) throw domain_error("delete_submatrix: duplicate row block");
    drop[r] = true;
  }
  PolyMatrix out(m.field(), m.rows() - rows.size() * block, m.cols() - block);
  std::size_t oi = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (drop[i / block]) continue;
    std::size_t oj = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j / block == col) continue;
      out.at(oi, oj++) = m.at(i, j);
    }
    ++oi;
  }
  return out;
}

std::vector<LaurentPoly> poly_smith_diagonal(const PolyMatrix& m) {
  const ExactField& f = m.field();
  // scale each row by a power of t (a unit, so invariant factors only change
  // by units) to land in F[t], where division by degree is Euclidean
  std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::vector<LaurentPoly>> a(rows, std::vector<LaurentPoly>(cols, LaurentPoly(f)));
  for (std::size_t i = 0; i < rows; ++i) {
    long low = 0;
    bool seen = false;
    for (std::size_t j = 0; j < cols; ++j) {
      const LaurentPoly& e = m.at(i, j);
      if (e.is_zero()) continue;
      low = seen ? std::min(low, e.lowest_exp()) : e.lowest_exp();
      seen = true;
    }
    for (std::size_t j = 0; j < cols; ++j) {
      const LaurentPoly& e = m.at(i, j);
      a[i][j] = e.is_zero() ? e : e.shifted(-low);
    }
  }

  auto deg_of = [](const LaurentPoly& p) { return p.top_exp(); };
  std::vector<LaurentPoly> diag;
  std::size_t t = 0;
  while (t < rows && t < cols) {
    // pivot: lowest degree nonzero entry, row-major tie-break
    bool found = false;
    std::size_t pi = t, pj = t;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j) {
        if (a[i][j].is_zero()) continue;
        if (!found || deg_of(a[i][j]) < deg_of(a[pi][pj])) {
          pi = i;
          pj = j;
          found = true;
        }
      }
    if (!found) break;
    std::swap(a[t], a[pi]);
    for (std::size_t i = t; i < rows; ++i) std::swap(a[i][t], a[i][pj]);

    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t].is_zero()) continue;
        PolyDivMod d = divmod(a[i][t], a[t][t]);
        for (std::size_t j = t; j < cols; ++j) a[i][j] = a[i][j] - d.quot * a[t][j];
        if (!a[i][t].is_zero()) {
          std::swap(a[t], a[i]);
          dirty = true;
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j].is_zero()) continue;
        PolyDivMod d = divmod(a[t][j], a[t][t]);
        for (std::size_t i = t; i < rows; ++i) a[i][j] = a[i][j] - d.quot * a[i][t];
        if (!a[t][j].is_zero()) {
          for (std::size_t i = t; i < rows; ++i) std::swap(a[i][t], a[i][j]);
          dirty = true;
        }
      }
    }

    bool fixed = false;
    for (std::size_t i = t + 1; i < rows && !fixed; ++i)
      for (std::size_t j = t + 1; j < cols && !fixed; ++j) {
        if (!divmod(a[i][j], a[t][t]).rem.is_zero()) {
          for (std::size_t jj = t; jj < cols; ++jj) a[t][jj] = a[t][jj] + a[i][jj];
          fixed = true;
        }
      }
    if (fixed) continue;

    diag.push_back(a[t][t].unit_normalized());
    ++t;
  }
  return diag;
}

std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (const auto& [e, c] : p.coeffs()) {
    if (!s.empty()) s += " + ";
    s += p.field().to_string(c);
    if (e != 0) s += "*t^" + std::to_string(e);
  }
  return s;
}

std::string to_string(const RationalFunction& f) {
  return "(" + to_string(f.num()) + ") / (" + to_string(f.den()) + ")";
}

}  // namespace splitfox
