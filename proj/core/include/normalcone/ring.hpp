#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "normalcone/monomial_order.hpp"
#include "normalcone/polynomial.hpp"
#include "normalcone/standard_basis.hpp"

namespace normalcone {

class RingContext;
using Ring = std::shared_ptr<const RingContext>;

/// R = P_loc / K where P_loc is k[x_1..x_n] localized at the origin.
/// All computations are exact in the localization (Mora), so trunc_cap is
/// the certification cap: any degree, order or index an operation certifies
/// must stay below it, else TruncationCapExceeded.
class RingContext {
 public:
  static constexpr int kDefaultCap = 40;

  static Ring make(Field field, std::vector<std::string> names, std::vector<Polynomial> relations = {},
                   std::optional<int> trunc_cap = std::nullopt);

  const Field& field() const { return field_; }
  std::size_t nvars() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  /// Minimal local standard basis of K (monic leading terms).
  const std::vector<Polynomial>& relations() const { return relations_; }
  /// Relations as declared.
  const std::vector<Polynomial>& declared_relations() const { return declared_; }
  bool is_quotient() const { return !relations_.empty(); }
  std::optional<int> trunc_cap() const { return trunc_cap_; }
  int cap() const { return trunc_cap_.value_or(kDefaultCap); }
  /// Throws TruncationCapExceeded when `degree` >= cap().
  void certify(int degree, const std::string& what) const;

  /// Same variables and field, no relations.
  Ring cover() const;
  Ring with_cap(std::optional<int> cap) const;
  /// Local degree order (negative degrevlex) used for all ideal queries.
  const TermOrder& local_order() const { return local_order_; }

  Polynomial zero() const { return Polynomial(field_, nvars()); }
  Polynomial one() const { return Polynomial::constant(field_, nvars(), field_.one()); }
  Polynomial var(std::size_t i) const { return Polynomial::variable(field_, nvars(), i); }
  Polynomial monomial(const Monomial& m) const { return Polynomial::monomial(field_, m); }

  /// Canonical representative of f modulo K in the polynomial ring (full
  /// reduction by a degrevlex Groebner basis of the declared relations). Equal
  /// to f in R, with no unit factor introduced.
  Polynomial reduce(const Polynomial& f) const { return declared_.empty() ? f : global_relations_.reduced_form(f); }

  bool same_ambient(const RingContext& o) const;
  std::string to_string() const;

 private:
  Field field_;
  std::vector<std::string> names_;
  std::vector<Polynomial> relations_;
  std::vector<Polynomial> declared_;
  std::optional<int> trunc_cap_;
  TermOrder local_order_;
  StandardBasis global_relations_;
};

}  // namespace normalcone
