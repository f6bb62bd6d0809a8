#pragma once

#include <string>
#include <vector>

#include "normalcone/field.hpp"
#include "normalcone/monomial.hpp"

namespace normalcone {

struct Term {
  Monomial mono;
  Scalar coeff;
};

/// Sparse polynomial with terms sorted descending in degrevlex, no zero
/// coefficients. Equality is structural.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(Field field, std::size_t nvars) : field_(field), nvars_(nvars) {}

  static Polynomial constant(Field field, std::size_t nvars, const Scalar& c);
  static Polynomial monomial(Field field, const Monomial& m, const Scalar& c);
  static Polynomial monomial(Field field, const Monomial& m) { return monomial(field, m, field.one()); }
  static Polynomial variable(Field field, std::size_t nvars, std::size_t i);
  /// Builds from arbitrary terms: sorts, merges duplicates, drops zeros.
  static Polynomial from_terms(Field field, std::size_t nvars, std::vector<Term> terms);

  const Field& field() const { return field_; }
  std::size_t nvars() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

  /// Total degree; -1 for zero.
  int degree() const { return terms_.empty() ? -1 : static_cast<int>(terms_.front().mono.degree()); }
  /// Lowest total degree of a term (the m-adic order in the polynomial ring); -1 for zero.
  int low_degree() const;
  Scalar coefficient(const Monomial& m) const;
  Scalar constant_term() const;

  Polynomial homogeneous_part(int d) const;
  Polynomial lowest_form() const { return homogeneous_part(low_degree()); }
  /// Terms of total degree <= n.
  Polynomial jet(int n) const;
  /// Terms of total degree > n.
  Polynomial tail(int n) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial scaled(const Scalar& c) const;
  Polynomial times(const Monomial& m, const Scalar& c) const;
  Polynomial pow(unsigned e) const;
  /// Divides all coefficients by the coefficient of the degrevlex-leading term.
  Polynomial monic() const;

  /// Moves variable i to slot map[i] in a ring with new_nvars variables.
  Polynomial remapped(std::size_t new_nvars, const std::vector<std::size_t>& map) const;
  /// Same ring shape, first nvars slots kept; more slots appended.
  Polynomial extended(std::size_t new_nvars) const;
  /// Drops trailing variables; requires they do not occur.
  Polynomial truncated_vars(std::size_t new_nvars) const;
  /// Substitutes var i := 1.
  Polynomial dehomogenized(std::size_t var) const;
  bool uses_variable(std::size_t i) const;

  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  std::string to_string(const std::vector<std::string>& names) const;

 private:
  void add_scaled(const Polynomial& o, const Scalar& c);

  Field field_;
  std::size_t nvars_ = 0;
  std::vector<Term> terms_;
};

std::string monomial_to_string(const Monomial& m, const std::vector<std::string>& names);

}  // namespace normalcone
