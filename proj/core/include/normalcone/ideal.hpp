#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "normalcone/ring.hpp"
#include "normalcone/standard_basis.hpp"

namespace normalcone {

/// Ideal of R = P_loc/K given by generators. Immutable; standard bases are
/// cached per order (write-once, recomputation is idempotent).
class Ideal {
 public:
  Ideal() = default;
  Ideal(Ring ring, std::vector<Polynomial> gens);

  static Ideal zero(Ring ring) { return Ideal(std::move(ring), {}); }
  static Ideal unit(Ring ring);
  static Ideal maximal(Ring ring);

  const Ring& ring() const { return ring_; }
  const std::vector<Polynomial>& gens() const { return gens_; }
  /// Generators of the preimage in P: gens plus the relations K.
  std::vector<Polynomial> cover_generators() const;
  /// Generators of the same preimage in P_loc with small support: when
  /// m^k is contained in it, the (k-1)-jets of a standard basis plus the
  /// monomials of degree k; otherwise cover_generators().
  const std::vector<Polynomial>& compact_cover_generators() const;

  /// Standard basis of the preimage under the ring's local order.
  const StandardBasis& standard_basis() const { return standard_basis(ring_->local_order()); }
  const StandardBasis& standard_basis(const TermOrder& order, SbMethod method = SbMethod::Auto) const;

  bool contains(const Polynomial& f) const;
  bool contains(const Ideal& o) const;
  bool is_unit() const { return standard_basis().is_unit(); }
  /// True when every generator lies in K.
  bool is_zero() const;
  /// J^n as an ideal (cached, including its standard bases).
  const Ideal& power(int n) const;
  const std::vector<Polynomial>& power_generators(int n) const { return power(n).gens(); }

  std::string to_string() const;

 private:
  struct Cache {
    std::mutex mu;
    std::map<std::pair<TermOrder, int>, std::shared_ptr<const StandardBasis>> bases;
    std::map<int, std::shared_ptr<const Ideal>> powers;
    std::shared_ptr<const std::vector<Polynomial>> compact;
  };

  Ring ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);
Ideal ideal_power(const Ideal& j, int n);
Ideal ideal_intersection(const Ideal& a, const Ideal& b);
/// {g : g*B subset A}.
Ideal ideal_quotient(const Ideal& a, const Ideal& b);
/// {g : g*f in A}.
Ideal ideal_quotient(const Ideal& a, const Polynomial& f);
/// A : B^infinity.
Ideal saturation(const Ideal& a, const Ideal& b);
/// Eliminates the listed variables. The eliminated variables are treated as
/// polynomial (global) variables, the rest as local ones.
Ideal eliminate(const Ideal& i, const std::vector<std::size_t>& vars);
bool ideal_member(const Polynomial& f, const Ideal& i);
bool ideal_equal(const Ideal& a, const Ideal& b);
/// dim_k R/I, or nullopt when infinite.
std::optional<long> colength(const Ideal& i);
/// Krull dimension of R/I, from the leading monomials of a local standard
/// basis; -1 when I is the unit ideal.
int krull_dimension(const Ideal& i);
/// Preimage of I in the cover ring P.
Ideal lift_to_cover(const Ideal& i);

/// Intersection of generator sets in P_loc (no relations added).
std::vector<Polynomial> cover_intersection(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b,
                                           const Field& field, std::size_t nvars);

/// Monomials of the given degree in n variables, degrevlex-descending.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, int degree);

}  // namespace normalcone
