#pragma once

#include <string>

#include "splitfox/bigint.hpp"

namespace splitfox {

enum class FieldKind { rationals, prime };

// Exact coefficient field: Q, or F_p for a prime p. Elements are stored as
// exact rationals; for F_p they are integer residues in [0, p). Every
// arithmetic operation goes through the field object so that reduction mod p
// is never skipped. No floating point anywhere.
class ExactField {
 public:
  using Elem = Rational;

  static ExactField rationals();
  static ExactField prime(long long p);  // rejects non-primes

  FieldKind kind() const { return kind_; }
  long long modulus() const { return p_; }  // 0 for Q

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  Elem from_int(const Int& n) const;
  Elem from_rational(const Rational& q) const;  // F_p: num * den^-1 mod p

  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem div(const Elem& a, const Elem& b) const;  // errors on zero divisor
  Elem neg(const Elem& a) const;
  Elem inv(const Elem& a) const;  // errors on zero

  bool is_zero(const Elem& a) const { return a == 0; }
  std::string to_string(const Elem& a) const;

  friend bool operator==(const ExactField&, const ExactField&) = default;

 private:
  ExactField(FieldKind k, long long p) : kind_(k), p_(p) {}
  FieldKind kind_;
  long long p_;
};

}  // namespace splitfox
