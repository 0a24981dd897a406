#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "splitfox/field.hpp"

namespace splitfox {

// Laurent polynomial in t over an ExactField: finite map from integer
// exponents to nonzero coefficients.
class LaurentPoly {
 public:
  explicit LaurentPoly(ExactField field) : field_(std::move(field)) {}
  static LaurentPoly zero(const ExactField& f) { return LaurentPoly(f); }
  static LaurentPoly constant(const ExactField& f, const ExactField::Elem& c);
  static LaurentPoly monomial(const ExactField& f, long exp, const ExactField::Elem& c);

  const ExactField& field() const { return field_; }
  const std::map<long, ExactField::Elem>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const;
  // c * t^k for some nonzero c
  bool is_unit() const { return coeffs_.size() == 1; }

  long lowest_exp() const;  // errors on zero
  long top_exp() const;     // errors on zero
  ExactField::Elem coeff(long exp) const;
  ExactField::Elem leading_coeff() const;

  LaurentPoly operator+(const LaurentPoly&) const;
  LaurentPoly operator-(const LaurentPoly&) const;
  LaurentPoly operator-() const;
  LaurentPoly operator*(const LaurentPoly&) const;
  LaurentPoly shifted(long delta) const;  // multiply by t^delta
  LaurentPoly scaled(const ExactField::Elem& c) const;

  // Lowest exponent 0 and monic; canonical representative modulo the unit
  // group { c * t^k : c != 0 }. Zero stays zero.
  LaurentPoly unit_normalized() const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  ExactField field_;
  std::map<long, ExactField::Elem> coeffs_;
  void set(long exp, const ExactField::Elem& c);
};

// Spread degree: top exponent minus lowest exponent. Errors on zero.
long degree(const LaurentPoly& p);

// Division that must be exact (remainder zero); errors otherwise.
LaurentPoly div_exact(const LaurentPoly& a, const LaurentPoly& b);

// Quotient and remainder of ordinary polynomial division (nonnegative
// exponents assumed after shifting; callers normalize).
struct PolyDivMod {
  LaurentPoly quot;
  LaurentPoly rem;
};
PolyDivMod divmod(const LaurentPoly& a, const LaurentPoly& b);

// gcd under the unit group { c * t^k }: unit-normalized, gcd of an all-zero
// set is 0, zero entries are ignored otherwise.
LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly laurent_gcd(const std::vector<LaurentPoly>& ps, const ExactField& f);

// p = c * t^k * q for some nonzero constant c and integer k?
bool equal_up_to_unit(const LaurentPoly& p, const LaurentPoly& q);

// Quotient of Laurent polynomials, normalized on construction: the polynomial
// gcd of numerator and denominator is cancelled, both are shifted to lowest
// exponent 0, and the denominator is made monic. Denominator must be nonzero.
class RationalFunction {
 public:
  RationalFunction(LaurentPoly num, LaurentPoly den);
  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

 private:
  LaurentPoly num_;
  LaurentPoly den_;
};

// degree(num) - degree(den). Errors when the numerator is zero.
long degree(const RationalFunction& f);
bool equal_up_to_unit(const RationalFunction& p, const RationalFunction& q);

// Dense matrix of Laurent polynomials. Row/column blocks of size `block`
// correspond to generators/relators when the matrix holds an evaluated Fox
// Jacobian; scalar matrices use block = 1.
class PolyMatrix {
 public:
  PolyMatrix(ExactField field, std::size_t rows, std::size_t cols);
  const ExactField& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  LaurentPoly& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const LaurentPoly& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

 private:
  ExactField field_;
  std::size_t rows_, cols_;
  std::vector<LaurentPoly> data_;
};

// Exact determinant of a square matrix. Cofactor expansion for dimension <= 4;
// otherwise rows are shifted to nonnegative exponents (tracked as a unit
// correction) and eliminated fraction-free (Bareiss). det of a 0x0 matrix = 1.
LaurentPoly determinant(const PolyMatrix& m);

namespace detail {
LaurentPoly det_cofactor(const PolyMatrix& m);
LaurentPoly det_bareiss(const PolyMatrix& m);
}  // namespace detail

// Deletes row blocks `rows` and column block `col` (block-structured deletion,
// block = representation dimension). A column must be deleted; indices are
// block indices and must be in range.
PolyMatrix delete_submatrix(const PolyMatrix& m, const std::vector<std::size_t>& rows,
                            std::size_t col, std::size_t block = 1);

// Diagonal of the Smith normal form over the PID F[t] (Euclidean reduction by
// degree), monic-normalized, in divisibility order. Used as the independent
// route to classical Alexander polynomials.
std::vector<LaurentPoly> poly_smith_diagonal(const PolyMatrix& m);

std::string to_string(const LaurentPoly& p);
std::string to_string(const RationalFunction& f);

}  // namespace splitfox
