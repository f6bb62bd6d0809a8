#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "normalcone/polynomial.hpp"

namespace normalcone {

/// Row-echelon subspace of the polynomials supported on a fixed finite
/// monomial set (degrees below `bound`). Terms of higher degree are dropped
/// on insertion, so the space lives in P/m^bound.
class TruncatedSpace {
 public:
  TruncatedSpace(Field field, std::size_t nvars, int bound);

  /// Adds f (truncated); returns true when it enlarged the space.
  bool add(const Polynomial& f);
  bool contains(const Polynomial& f) const;
  std::size_t dimension() const { return rows_.size(); }
  /// Number of monomials of degree < bound.
  std::size_t ambient_dimension() const { return index_.size(); }

 private:
  using Row = std::vector<Scalar>;
  Row vectorize(const Polynomial& f) const;
  /// Reduces v against the echelon rows; returns the pivot of the result.
  std::optional<std::size_t> reduce(Row& v) const;

  Field field_;
  std::size_t nvars_;
  int bound_;
  std::unordered_map<Monomial, std::size_t, MonomialHash> index_;
  std::vector<Row> rows_;
  std::vector<std::size_t> pivots_;
};

/// f in (gens) + m^bound inside k[x], decided by linear algebra on all
/// multiples mu*g of degree < bound.
bool truncated_member(const Polynomial& f, const std::vector<Polynomial>& gens, int bound);

/// dim_k k[x]/((gens) + m^bound).
long truncated_colength(const std::vector<Polynomial>& gens, std::size_t nvars, int bound);

/// f in (gens) inside the polynomial ring, using multiples up to total
/// degree `degree` (exact once `degree` exceeds the degree of a certificate).
bool degree_bounded_member(const Polynomial& f, const std::vector<Polynomial>& gens, int degree);

}  // namespace normalcone
