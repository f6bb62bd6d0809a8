#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace normalcone {

/// Exact scalar. Over Q it is a canonical rational; over F_p it holds an
/// integer residue in [0, p). All arithmetic goes through Field.
using Scalar = mpq_class;
/// Exact rational for derived quantities (multiplicity coefficients).
using Rational = mpq_class;

class Field {
 public:
  Field() = default;

  static Field rationals() { return Field(); }
  /// Throws std::invalid_argument unless p is a prime below 2^31.
  static Field prime(std::uint32_t p);

  bool is_rational() const { return p_ == 0; }
  std::uint32_t characteristic() const { return p_; }

  Scalar zero() const { return Scalar(0); }
  Scalar one() const { return Scalar(1); }
  Scalar from_int(long v) const;
  Scalar from_rational(const mpq_class& q) const;

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  /// Throws std::domain_error on zero.
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

  static bool is_zero(const Scalar& a) { return sgn(a) == 0; }
  static bool is_one(const Scalar& a) { return a == 1; }

  std::string to_string(const Scalar& a) const { return a.get_str(); }
  std::string name() const;

  bool operator==(const Field& o) const { return p_ == o.p_; }
  bool operator!=(const Field& o) const { return p_ != o.p_; }

 private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint64_t residue(const Scalar& a) const { return mpz_get_ui(a.get_num_mpz_t()); }
  Scalar make(std::uint64_t r) const { return Scalar(static_cast<unsigned long>(r % p_)); }

  std::uint32_t p_ = 0;
};

}  // namespace normalcone
