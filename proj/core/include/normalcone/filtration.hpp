#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "normalcone/perturbation.hpp"

namespace normalcone {

/// A filtration R = J_0 ⊇ J_1 ⊇ J_2 ⊇ ... with J_m J_n ⊆ J_{m+n}.
/// Immutable; levels are materialized on demand and cached.
class Filtration {
 public:
  enum class Kind { Adic, OrderInduced, Weighted, Table };
  static constexpr int kDefaultCap = 64;

  /// J_n = J^n.
  static Filtration adic(const Ideal& J, int cap = kDefaultCap);
  /// J_n generated by all monomials >= g_n, where g_0 = 1 < g_1 < ... lists
  /// the monomials in increasing order. Throws PreconditionError unless the
  /// order is Noetherian.
  static Filtration from_order(const Ring& R, const MonomialOrder& order, int cap = kDefaultCap);
  /// J_n generated by the monomials of w-degree >= n (all w_i >= 1).
  static Filtration weighted(const Ring& R, std::vector<int> w, int cap = kDefaultCap);
  /// Explicit J_1..J_c; beyond c, J_n = sum_{i=1..c} J_i J_{n-i}. Throws
  /// PreconditionError when the axioms fail for indices <= min(cap, 6).
  static Filtration table(const Ring& R, std::vector<std::vector<Polynomial>> levels, int cap = kDefaultCap);

  Kind kind() const;
  const Ring& ring() const;
  /// Largest accessible index.
  int cap() const;
  std::string name() const;
  /// Generators of J_n; J_0 = (1). Throws TruncationCapExceeded beyond cap().
  const std::vector<Polynomial>& level_generators(int n) const;
  /// J_n as a cached ideal (standard bases and powers are shared).
  const Ideal& level(int n) const;
  LevelFn level_fn() const;

  /// Adic kind: J.
  const Ideal& adic_ideal() const;
  /// OrderInduced kind: the order and the enumeration g_0..g_{count-1}.
  const MonomialOrder& order() const;
  std::vector<Monomial> enumeration(int count) const;
  /// OrderInduced kind: index n with g_n = m.
  int position(const Monomial& m) const;
  /// Table kind: the number c of explicit levels.
  int table_length() const;
  /// Weighted kind: the weights.
  const std::vector<int>& weights() const;
  /// Noetherian by construction (adic, weighted, table, one-variable order).
  bool noetherian_by_construction() const;

 private:
  struct State;
  std::shared_ptr<State> st_;
};

struct FiltrationAxioms {
  bool unit_level0 = false;
  bool decreasing = false;
  bool multiplicative = false;
  int checked_through = 0;
  std::string detail;
  bool ok() const { return unit_level0 && decreasing && multiplicative; }
};
/// J_0 = R, J_m ⊆ J_n for m > n, J_m J_n ⊆ J_{m+n}, for m, n <= upto.
FiltrationAxioms check_axioms(const Filtration& F, int upto = 6);

enum class DeltaStatus { Certified, Heuristic };
std::string to_string(DeltaStatus s);

struct ReesDelta {
  int delta = 0;
  DeltaStatus status = DeltaStatus::Heuristic;
  int checked_through = 0;
  std::vector<int> fresh_degrees;  ///< degrees with a new algebra generator
  /// Minimal algebra generators (g, n): g in J_n not in sum_{0<i<n} J_i J_{n-i}.
  std::vector<std::pair<Polynomial, int>> generators;
};
/// Minimal algebra generators of ⊕_{n<=cap} J_n, degree by degree. Certified
/// when the last ceil(cap/2) degrees add nothing or the kind guarantees it.
ReesDelta rees_delta(const Filtration& F, int cap = 8);

struct LemmaJ1Check {
  bool holds = true;
  std::optional<int> first_failure;
  int checked_through = 0;
};
/// J_{n delta} ⊆ J_1^n for n = 0..n_max.
LemmaJ1Check check_lemma_J1(const Filtration& F, int delta, int n_max);

/// in_F(I). Adic and table filtrations: degreewise generators certified by
/// the Rees route; weighted: certified by the weighted standard-basis route;
/// order-induced: the monomial initial ideal in_<(I) from a standard basis
/// (degrees are enumeration positions).
InitialIdeal initial_ideal_filtration(const Ideal& I, const Filtration& F);
/// Top w-degree of minimal generators of in_w(I) in k[x]/in_w(K), from the
/// w-lowest forms of a standard basis under a local order refining -w.
int weighted_initial_degree(const Ideal& I, const std::vector<int>& w);
/// Lead monomials (smallest terms) of a minimal standard basis of I under
/// the order.
std::vector<Monomial> monomial_initial_ideal(const Ideal& I, const MonomialOrder& order);
/// Order-induced F: for n <= window, in_F(I)_n != 0 iff g_n in in_<(I),
/// checked with J_n ∩ I ⊄ J_{n+1}. Returns the first disagreement.
std::optional<int> order_initial_cross_check(const Ideal& I, const Filtration& F, int window);

/// J_n ∩ I == sum_{t=0..c} J_{n-t} (J_t ∩ I). The t = 0 term J_n I is
/// redundant unless I is not contained in J_1.
bool decomposition_holds(const Ideal& I, const Filtration& F, int c, int n);

struct FiltrationArtinRees {
  int value = 0;
  /// Certificate route: d(Q) from the Rees algebra (adic, table, one-variable
  /// order) or the top w-degree of in_w(I) from a weighted standard basis.
  int rees_route = 0;
  std::string certificate;  ///< "rees" or "weighted-standard-basis"
  int degreewise_route = 0;
  bool decomposition_verified = false;     ///< at n = c, c+1, c+2
  std::optional<bool> predecessor_fails;   ///< c-1 fails at some n in c-1..c+1
};
/// ar_F(I) = d(in_F(I)); both routes asserted equal, decomposition checked.
/// Throws TruncationCapExceeded when delta cannot be certified.
FiltrationArtinRees artin_rees_filtration(const Ideal& I, const Filtration& F);

struct FiltrationBound {
  BoundCertificate cert;           ///< formula Filtration (or Regular)
  int theorem_N = 0;               ///< the general formula, always computed
  std::optional<int> regular_N;    ///< ar_F(f_1..f_r) + 1 when all a_i = 0
  std::optional<int> adic_main_N;  ///< adic F: the J-adic main bound, for comparison
};
/// N = max{(sum 2^{i-1} a_i + 1) delta, ar_F(f_1) + 1, ..., ar_F(f_1..f_r) + 1}
/// with a_i taken with respect to J_1.
FiltrationBound bound_filtration(const std::vector<Polynomial>& fs, const Filtration& F);

struct JetLevel {
  int n = 0;
  bool tail_in_JN = false;
  std::optional<bool> regular;
  std::optional<bool> initial_equal;
  std::vector<Monomial> initial;
};
struct JetReport {
  int N = 0;
  std::vector<int> weights;  ///< leading weight row used for N
  std::vector<Monomial> initial;
  int minimal_admissible = 0;
  std::vector<JetLevel> levels;
  bool passed() const;
};
/// For a regular sequence fs and a Noetherian order: N from the weight
/// filtration of the order's leading row, then for n in [lo, hi] with tails
/// in J_N, checks that the jets form a regular sequence with the same
/// monomial initial ideal.
JetReport jet_pipeline(const Ring& R, const std::vector<Polynomial>& fs, const MonomialOrder& order, int lo,
                       int hi);

/// ε drawn from J_N of F (generators times monomials up to degree_cap).
std::vector<Polynomial> filtration_perturbation_basis(const Filtration& F, int N, int degree_cap);

/// Trials of f_i + ε_i with ε_i in J_N: checks in_F equality, ar_F equality
/// and J_1-filter-regularity. Trial 0 is the zero perturbation.
std::vector<PerturbationReport> verify_invariance_filtration(const std::vector<Polynomial>& fs, const Filtration& F,
                                                             int N, std::size_t trials, std::uint64_t seed);

std::optional<DestabilizingWitness> search_destabilizing_filtration(const std::vector<Polynomial>& fs,
                                                                    const Filtration& F, int N, std::size_t trials,
                                                                    std::uint64_t seed);

}  // namespace normalcone
