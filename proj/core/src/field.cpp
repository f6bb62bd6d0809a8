#include "normalcone/field.hpp"

namespace normalcone {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

}  // namespace

Field Field::prime(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime(p))
    throw std::invalid_argument("field characteristic must be a prime below 2^31: " + std::to_string(p));
  return Field(p);
}

std::string Field::name() const {
  return is_rational() ? "Q" : "F" + std::to_string(p_);
}

Scalar Field::from_int(long v) const {
  if (is_rational()) return Scalar(v);
  long r = v % static_cast<long>(p_);
  if (r < 0) r += p_;
  return Scalar(r);
}

Scalar Field::from_rational(const mpq_class& value) const {
  mpq_class q = value;
  q.canonicalize();
  if (is_rational()) return q;
  mpz_class num = q.get_num() % p_;
  mpz_class den = q.get_den() % p_;
  if (num < 0) num += p_;
  if (den == 0) throw std::domain_error("denominator divisible by the characteristic");
  std::uint64_t n = num.get_ui();
  std::uint64_t d = den.get_ui();
  return make(n * pow_mod(d, p_ - 2, p_));
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  if (is_rational()) return a + b;
  return make(residue(a) + residue(b));
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
  if (is_rational()) return a - b;
  return make(residue(a) + p_ - residue(b));
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  if (is_rational()) return a * b;
  return make(residue(a) * residue(b));
}

Scalar Field::neg(const Scalar& a) const {
  if (is_rational()) return -a;
  std::uint64_t r = residue(a);
  return r == 0 ? Scalar(0) : make(p_ - r);
}

Scalar Field::inv(const Scalar& a) const {
  if (is_zero(a)) throw std::domain_error("division by zero");
  if (is_rational()) return Scalar(1) / a;
  return make(pow_mod(residue(a), p_ - 2, p_));
}

}  // namespace normalcone
