#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "splitfox/field.hpp"
#include "splitfox/foxcalc.hpp"
#include "splitfox/laurent.hpp"
#include "splitfox/presentation.hpp"

namespace splitfox {

// Dense square matrix over an ExactField.
class FieldMatrix {
 public:
  FieldMatrix(ExactField field, std::size_t n);
  static FieldMatrix identity(const ExactField& f, std::size_t n);

  const ExactField& field() const { return field_; }
  std::size_t dim() const { return n_; }
  ExactField::Elem& at(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const ExactField::Elem& at(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  FieldMatrix operator*(const FieldMatrix&) const;
  FieldMatrix operator+(const FieldMatrix&) const;
  FieldMatrix scaled(const ExactField::Elem& c) const;
  std::optional<FieldMatrix> inverse() const;  // nullopt if singular
  bool is_identity() const;

  friend bool operator==(const FieldMatrix&, const FieldMatrix&) = default;

 private:
  ExactField field_;
  std::size_t n_;
  std::vector<ExactField::Elem> data_;
};

// Linear representation of a presented group: one invertible matrix per
// generator.
struct Representation {
  std::size_t dimension = 1;
  ExactField field = ExactField::rationals();
  std::map<std::string, FieldMatrix> images;

  FieldMatrix eval(const Word& w) const;  // errors on unknown generator
  friend bool operator==(const Representation&, const Representation&) = default;
};

// All images invertible and every relator maps to the identity.
bool verify(const Representation& r, const Presentation& p);

// Dimension-1 representation sending every generator to 1.
Representation trivial_rep(const Presentation& p,
                           const ExactField& f = ExactField::rationals());

// (alpha tensor eps)(x) for x in Z[F]: each word w contributes
// coeff * t^eps(w) * alpha(w), extended Z-linearly. Result is d x d over
// Laurent polynomials.
PolyMatrix tensor_eval(const Representation& r, const Epimorphism& eps,
                       const GroupRingElement& x);

// Brute-force search for representations P -> GL(d, F_p). Enumerates image
// tuples in lexicographic order of matrix encodings (row-major entries,
// residues ascending) and returns those satisfying every relator, all of them
// or the first `limit`. Without a limit the search space |GL(d,p)|^k must stay
// within `budget` tuples.
std::vector<Representation> search_homs(const Presentation& p, std::size_t dim, long long mod,
                                        std::optional<std::size_t> limit = std::nullopt,
                                        unsigned long long budget = 20'000'000ULL);

}  // namespace splitfox
