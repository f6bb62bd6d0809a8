#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "normalcone/ideal.hpp"

namespace normalcone {

/// o(f): largest n with f in J^n (in R). Throws PreconditionError when f is
/// zero in R, TruncationCapExceeded when the order reaches the cap.
int order_of(const Polynomial& f, const Ideal& J);

struct InitialForm {
  int degree = -1;  ///< -1 encodes 0* = 0
  Polynomial representative;
  /// For J = m: the homogeneous form in k[X]/in(K), reduced and monic.
  std::optional<Polynomial> form;
};
InitialForm initial_form(const Polynomial& f, const Ideal& J);

struct InitialGenerator {
  int degree = 0;
  Polynomial representative;  ///< element of J^n ∩ I (preimage in P)
  std::optional<Polynomial> form;
};

/// Generators of the n-th level of a filtration (level 0 is R).
using LevelFn = std::function<std::vector<Polynomial>(int)>;

/// Graded minimal generators of in_J(I) inside gr_J(R).
struct InitialIdeal {
  Ideal ideal;
  Ideal filtration;  ///< J (adic) or J_1 (general filtration)
  LevelFn level;     ///< generators of J_n
  std::vector<InitialGenerator> generators;
  int top_degree = 0;            ///< d(in(I)); 0 when in(I) = 0
  int checked_through = 0;       ///< degrees 0..checked_through were examined
  std::optional<int> rees_degree;  ///< d(Q) certificate when computed
  bool certified = false;
  std::string method;

  std::vector<Polynomial> generators_in_degree(int n) const;
};

/// Degreewise route: in(I)_n = (J^n ∩ I + J^{n+1})/J^{n+1}, for n <= n_max.
InitialIdeal initial_ideal_degreewise(const Ideal& I, const Ideal& J, int n_max);
/// Same route for a filtration given by its levels: in(I)_n =
/// (J_n ∩ I + J_{n+1})/J_{n+1}.
InitialIdeal initial_ideal_levels(const Ideal& I, const Ideal& J1, const LevelFn& level, int n_max);
/// Tangent-cone route (J must be the maximal ideal): lowest forms of a
/// local-degree standard basis.
InitialIdeal initial_ideal_tangent_cone(const Ideal& I);
/// Degreewise generators, certified by d(Q) from the Rees route and
/// cross-checked two degrees past it.
InitialIdeal initial_ideal(const Ideal& I, const Ideal& J);

/// Q = ⊕ (J^n ∩ I) presented as Q~ ⊆ P[y_1..y_s] modulo the Rees relations.
struct ReesIdealPresentation {
  std::size_t base_vars = 0;
  std::size_t rees_vars = 0;  ///< s, one per generator of J
  std::vector<Polynomial> generators;  ///< Q~ (variables x then y)
  std::vector<Polynomial> relations;   ///< kernel of P[y] -> R[Jt]
  /// (degree, number of minimal generators in that degree)
  std::vector<std::pair<int, int>> minimal_degrees;
  int top_degree = 0;  ///< d(Q)
};
ReesIdealPresentation rees_ideal(const Ideal& I, const Ideal& J);
/// Rees presentation for the algebra generated by g*t^k over the listed
/// (g, k) pairs; y-degrees are weighted by k.
ReesIdealPresentation rees_ideal_graded(const Ideal& I, const std::vector<std::pair<Polynomial, int>>& rees_gens);

struct ArtinReesResult {
  int value = 0;
  int rees_route = 0;
  int degreewise_route = 0;
  std::optional<int> tangent_cone_route;
};
/// Both routes, asserted equal (InternalInconsistency otherwise). For J = m
/// the tangent-cone route is a third witness.
ArtinReesResult artin_rees(const Ideal& I, const Ideal& J);
inline int artin_rees_number(const Ideal& I, const Ideal& J) { return artin_rees(I, J).value; }

/// E_n = sum_t J^{n-t} G_t + J^{n+1}: preimage of in(I)_n + gr_{>n}.
Ideal initial_component(const InitialIdeal& in, int n);
/// Equality of graded ideals in the same ambient, compared degreewise up to
/// the larger top degree.
bool initial_ideals_equal(const InitialIdeal& a, const InitialIdeal& b);
/// First degree where the graded ideals differ, if any (checked to `through`).
std::optional<int> first_difference(const InitialIdeal& a, const InitialIdeal& b, int through);
/// For J = m: does in(I) equal the ideal generated by the given homogeneous
/// forms (modulo in(K))?
bool initial_ideal_matches(const InitialIdeal& in, const std::vector<Polynomial>& forms);

struct AssociatedGraded {
  /// Relations of gr_J(R) = gr_J(P)/in(K): for J = m, minimal homogeneous
  /// generators of the tangent cone of K; otherwise representatives.
  std::vector<Polynomial> ambient_relations;
  InitialIdeal initial;
  std::string description;
};
AssociatedGraded assoc_graded(const Ideal& I, const Ideal& J);

/// Homogeneous generators of in_m(K) (reduced degrevlex Groebner basis).
std::vector<Polynomial> tangent_cone_relations(const Ring& R);

/// Least n with J^n * N ⊆ D, nullopt when no such n exists.
std::optional<int> annihilation_index(const Ideal& N, const Ideal& D, const Ideal& J);
/// a_J((A:f)/A).
std::optional<int> a_index(const Ideal& A, const Polynomial& f, const Ideal& J);

struct NumericalFunctionTable {
  enum class Kind { HilbertSamuel, AchillesManaresi };
  Kind kind = Kind::HilbertSamuel;
  std::vector<long> hs;                        ///< HS(n), n = 0..n_max
  std::vector<std::vector<long>> am_lengths;   ///< l(G_uv), [u][v]
  std::vector<std::vector<long>> am_sums;      ///< h(r, s), [r][s]
};

NumericalFunctionTable hilbert_samuel(const Ideal& I, const Ideal& J, int n_max);
NumericalFunctionTable achilles_manaresi(const Ideal& I, const Ideal& J, int r_max, int s_max);
/// l_n(gr_J(R/I)) = HS(n+1) - HS(n), from a HS table.
std::vector<long> graded_lengths(const NumericalFunctionTable& hs);

struct MultiplicitySequence {
  std::vector<Rational> c;  ///< c_0..c_d
  int d = -1;
  bool stable = false;
};
MultiplicitySequence multiplicity_sequence(const NumericalFunctionTable& am);

struct Multiplicity {
  long e = 0;
  int dimension = 0;
};
/// Throws PreconditionError when the table is too small to stabilize.
Multiplicity multiplicity_hs(const Ideal& I, const Ideal& J, int n_max = 10);
Multiplicity multiplicity_from_table(const NumericalFunctionTable& hs);

/// True when J is the ideal generated by all variables.
bool is_maximal_ideal(const Ideal& J);
/// True when J + I + K has finite colength.
bool is_m_primary(const Ideal& J, const Ideal& I);

}  // namespace normalcone
