#include "splitfox/field.hpp"

#include "splitfox/errors.hpp"

namespace splitfox {

namespace {

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// residue of an integer mod p in [0, p)
Int mod_reduce(const Int& n, long long p) {
  Int r = n % p;
  if (r < 0) r += p;
  return r;
}

Int mod_inverse(const Int& a, long long p) {
  // extended Euclid; p prime, a nonzero mod p
  Int t = 0, newt = 1, r = p, newr = mod_reduce(a, p);
  while (newr != 0) {
    Int q = r / newr;
    Int tmp = t - q * newt;
    t = newt;
    newt = tmp;
    tmp = r - q * newr;
    r = newr;
    newr = tmp;
  }
  if (r != 1) throw domain_error("element has no inverse mod p");
  return mod_reduce(t, p);
}

}  // namespace

ExactField ExactField::rationals() { return ExactField(FieldKind::rationals, 0); }

ExactField ExactField::prime(long long p) {
  if (!is_prime(p)) throw domain_error("field modulus must be prime, got " + std::to_string(p));
  return ExactField(FieldKind::prime, p);
}

ExactField::Elem ExactField::from_int(const Int& n) const {
  if (kind_ == FieldKind::rationals) return Elem(n);
  return Elem(mod_reduce(n, p_));
}

ExactField::Elem ExactField::from_rational(const Rational& q) const {
  if (kind_ == FieldKind::rationals) return q;
  Int den = denominator(q);
  return Elem(mod_reduce(numerator(q) * mod_inverse(den, p_), p_));
}

ExactField::Elem ExactField::add(const Elem& a, const Elem& b) const {
  Elem r = a + b;
  if (kind_ == FieldKind::prime) r = Elem(mod_reduce(numerator(r), p_));
  return r;
}

ExactField::Elem ExactField::sub(const Elem& a, const Elem& b) const {
  Elem r = a - b;
  if (kind_ == FieldKind::prime) r = Elem(mod_reduce(numerator(r), p_));
  return r;
}

ExactField::Elem ExactField::mul(const Elem& a, const Elem& b) const {
  Elem r = a * b;
  if (kind_ == FieldKind::prime) r = Elem(mod_reduce(numerator(r), p_));
  return r;
}

ExactField::Elem ExactField::div(const Elem& a, const Elem& b) const {
  if (b == 0) throw domain_error("division by zero field element");
  if (kind_ == FieldKind::rationals) return a / b;
  return mul(a, inv(b));
}

ExactField::Elem ExactField::neg(const Elem& a) const {
  if (kind_ == FieldKind::rationals) return -a;
  return Elem(mod_reduce(-numerator(a), p_));
}

ExactField::Elem ExactField::inv(const Elem& a) const {
  if (a == 0) throw domain_error("inverse of zero field element");
  if (kind_ == FieldKind::rationals) return 1 / a;
  return Elem(mod_inverse(numerator(a), p_));
}

std::string ExactField::to_string(const Elem& a) const {
  if (kind_ == FieldKind::prime || denominator(a) == 1) return numerator(a).str();
  return numerator(a).str() + "/" + denominator(a).str();
}

}  // namespace splitfox
