#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "normalcone/monomial.hpp"
#include "normalcone/polynomial.hpp"

namespace normalcone {

/// Engine-side monomial order given by an integer weight matrix; the
/// leading term of a polynomial is its LARGEST term. Rows may be negative,
/// so local (all variables < 1) and mixed orders are representable. Unit
/// rows e_1..e_n are appended so the order is always total.
class TermOrder {
 public:
  TermOrder() = default;
  TermOrder(std::size_t nvars, std::vector<std::vector<int>> rows);

  static TermOrder degrevlex(std::size_t n);
  static TermOrder deglex(std::size_t n);
  static TermOrder lex(std::size_t n);
  /// Negative degree reverse lexicographic ("ds"): local, degree-compatible.
  static TermOrder local_degrevlex(std::size_t n);
  /// Local order whose first row is -w (w >= 0), then ds.
  static TermOrder local_weighted(const std::vector<int>& w);
  /// Variables of `first` come first and dominate; `second` breaks ties.
  static TermOrder block(const TermOrder& first, const TermOrder& second);
  /// The order with every comparison reversed.
  TermOrder reversed() const;

  std::size_t nvars() const { return nvars_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }

  int compare(const Monomial& a, const Monomial& b) const {
    for (const auto& r : rows_) {
      long s = 0;
      for (std::size_t i = 0; i < nvars_; ++i) s += long(r[i]) * (long(a[i]) - long(b[i]));
      if (s) return s > 0 ? 1 : -1;
    }
    return 0;
  }
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  /// Every variable > 1 (a well-order; Buchberger applies).
  bool is_global() const;
  /// Every variable < 1.
  bool is_local() const;
  /// Sign of variable i against 1: +1 if x_i > 1, -1 if x_i < 1.
  int variable_sign(std::size_t i) const;

  auto operator<=>(const TermOrder&) const = default;

 private:
  std::size_t nvars_ = 0;
  std::vector<std::vector<int>> rows_;
};

enum class Ordering { LT = -1, EQ = 0, GT = 1 };

/// User-facing order with the "initial monomial is the smallest"
/// convention. Variable priority lists variable indices from most to least
/// significant for the lex tie-break (default: declaration order).
class MonomialOrder {
 public:
  enum class Kind { Lex, Deglex, Degrevlex, Weighted, Block };

  static MonomialOrder lex(std::size_t n, std::vector<std::size_t> priority = {});
  static MonomialOrder deglex(std::size_t n, std::vector<std::size_t> priority = {});
  static MonomialOrder degrevlex(std::size_t n, std::vector<std::size_t> priority = {});
  /// Weighted degree first, then lex on the priority.
  static MonomialOrder weighted(std::vector<int> weights, std::vector<std::size_t> priority = {});
  /// Block composition: the first block's variables dominate.
  static MonomialOrder block(const MonomialOrder& first, const MonomialOrder& second);

  Kind kind() const { return kind_; }
  std::size_t nvars() const { return nvars_; }
  const std::vector<int>& weights() const { return weights_; }
  const std::vector<std::size_t>& priority() const { return priority_; }
  bool noetherian() const { return noetherian_; }
  std::string name() const;

  /// Standard comparison (GT means "a comes later / is larger").
  Ordering compare(const Monomial& a, const Monomial& b) const;
  /// Matrix realizing this order with larger = later.
  const TermOrder& matrix() const { return matrix_; }
  /// Engine order whose leading term is this order's smallest monomial.
  TermOrder engine_order() const { return matrix_.reversed(); }
  /// First row of the matrix when it is a strictly positive weight vector.
  std::optional<std::vector<int>> positive_weight() const;

  bool operator==(const MonomialOrder& o) const {
    return kind_ == o.kind_ && nvars_ == o.nvars_ && weights_ == o.weights_ && priority_ == o.priority_ &&
           matrix_ == o.matrix_;
  }

 private:
  Kind kind_ = Kind::Deglex;
  std::size_t nvars_ = 0;
  std::vector<int> weights_;
  std::vector<std::size_t> priority_;
  bool noetherian_ = false;
  TermOrder matrix_;
};

/// Minimum of the support under `order`. Throws on the zero polynomial or a
/// non-Noetherian order.
Monomial smallest_monomial(const Polynomial& f, const MonomialOrder& order);
bool is_noetherian(const MonomialOrder& order);
Ordering compare(const MonomialOrder& order, const Monomial& a, const Monomial& b);
/// jet(f, n): terms of total degree <= n.
inline Polynomial jet(const Polynomial& f, int n) { return f.jet(n); }

}  // namespace normalcone
