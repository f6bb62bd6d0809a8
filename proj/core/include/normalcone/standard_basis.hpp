#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "normalcone/monomial_order.hpp"
#include "normalcone/polynomial.hpp"

namespace normalcone {

enum class SbMethod {
  Mora,    ///< Buchberger with Mora's ecart normal form (plain reduction for global orders)
  Lazard,  ///< homogenize, global Buchberger under the degree-first extension, dehomogenize
  Auto,    ///< Mora for global and local orders, Lazard for mixed ones
};

/// Work budget per standard-basis computation; exceeding it throws
/// ResourceExceeded. Process-wide, set once at startup.
struct EngineLimits {
  std::uint64_t max_reduction_steps = 20'000'000;
  std::uint64_t max_basis_size = 20'000;
};
EngineLimits& engine_limits();

/// Engine-side copy of a basis in its working coefficient representation.
struct EngineStore;

/// Standard basis of the ideal generated in Loc_>(k[x]), the localization
/// at the multiplicative set {u : LM(u) = 1}. For a global order this is a
/// Groebner basis (and reduced); for a local order it is a minimal standard
/// basis with monic leading terms.
class StandardBasis {
 public:
  StandardBasis() = default;
  static StandardBasis compute(const std::vector<Polynomial>& gens, const TermOrder& order,
                               SbMethod method = SbMethod::Auto);

  const TermOrder& order() const { return order_; }
  SbMethod method() const { return method_; }
  const std::vector<Polynomial>& elements() const { return elems_; }
  const std::vector<Monomial>& leading_monomials() const { return leads_; }
  bool is_unit() const;
  bool is_zero() const { return elems_.empty(); }

  /// Mora weak normal form (full reduction for global orders). Zero iff f is
  /// in the ideal.
  Polynomial normal_form(const Polynomial& f) const;
  bool contains(const Polynomial& f) const;
  /// Global orders only: fully reduced remainder (canonical modulo the ideal).
  Polynomial reduced_form(const Polynomial& f) const;

  /// Leading monomial of f under this basis' order.
  Monomial leading_monomial(const Polynomial& f) const;

 private:
  TermOrder order_;
  SbMethod method_ = SbMethod::Mora;
  Field field_;
  std::size_t nvars_ = 0;
  std::vector<Polynomial> elems_;
  std::vector<Monomial> leads_;
  std::shared_ptr<const EngineStore> store_;  // elements in engine form, ascending
};

/// u*f = sum q_i*g_i + r with LM(u) = 1 and r a weak normal form of f with
/// respect to the divisors (Mora's division with tracking).
struct Division {
  Polynomial unit;
  std::vector<Polynomial> quotients;
  Polynomial remainder;
};
Division divide(const Polynomial& f, const std::vector<Polynomial>& divisors, const TermOrder& order);

/// Leading monomial under `order` (largest term). f must be nonzero.
Monomial leading_monomial(const Polynomial& f, const TermOrder& order);

/// Minimal monomial generators of the ideal generated by `ms`.
std::vector<Monomial> minimalize_monomials(std::vector<Monomial> ms);

}  // namespace normalcone
