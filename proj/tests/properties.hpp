#pragma once

#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "normalcone/adic.hpp"
#include "normalcone/linear_algebra.hpp"
#include "support.hpp"

namespace normalcone::testing {

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& d) {
    if (ok) detail = d;
    ok = false;
  }
};

inline long binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// dim_k in_m(I)_n inside gr_m(k[x]) by truncated linear algebra:
/// dim gr_n(P) - [l(P/(I + m^{n+1})) - l(P/(I + m^n))].
inline long cover_initial_dim(const std::vector<Polynomial>& gens, std::size_t nvars, int n) {
  const long gr = binomial(static_cast<long>(nvars) + n - 1, n);
  const long hi = truncated_colength(gens, nvars, n + 1);
  const long lo = n == 0 ? 0 : truncated_colength(gens, nvars, n);
  return gr - (hi - lo);
}

/// dim_k in(I)_n inside gr_m(R) using the library's quotient-ring lengths.
inline long quotient_initial_dim(const Ideal& I, int n) {
  const Ideal m = Ideal::maximal(I.ring());
  const auto hr = hilbert_samuel(Ideal::zero(I.ring()), m, n + 1).hs;
  const auto hi = hilbert_samuel(I, m, n + 1).hs;
  return (hr[n + 1] - hr[n]) - (hi[n + 1] - hi[n]);
}

/// A random instance for the Rees/degreewise agreement: 2-3 variables, one
/// or two generators of degree <= 3, J from a small family.
struct AdicInstance {
  Ring R;
  Ideal I;
  Ideal J;
  std::string text;
};

inline AdicInstance random_adic_instance(std::mt19937_64& rng, std::uint32_t p) {
  std::uniform_int_distribution<int> nv(2, 3), ng(1, 2), jk(0, 3);
  const int n = nv(rng);
  std::vector<std::string> names = {"x", "y", "z"};
  names.resize(n);
  auto R = make_ring(names, "", p);
  std::vector<Polynomial> gens;
  const int k = ng(rng);
  for (int i = 0; i < k; ++i) gens.push_back(random_poly(R, rng, 1, 3, 3));
  Ideal J;
  switch (jk(rng)) {
    case 0:
    case 1: J = Ideal::maximal(R); break;
    case 2: J = ideal(R, n == 2 ? "x, y^2" : "x, y^2, z"); break;
    default: J = ideal(R, "x"); break;
  }
  std::ostringstream os;
  os << R->to_string() << " I=" << Ideal(R, gens).to_string() << " J=" << J.to_string();
  return {R, Ideal(R, gens), J, os.str()};
}

/// d(Q) from Rees elimination equals d(in(I)) from the degreewise route.
inline Outcome rees_matches_degreewise(const AdicInstance& in) {
  Outcome o;
  const auto q = rees_ideal(in.I, in.J);
  const auto dw = initial_ideal_degreewise(in.I, in.J, q.top_degree + 2);
  if (q.top_degree != dw.top_degree)
    o.fail(in.text + ": d(Q)=" + std::to_string(q.top_degree) + " d(in)=" + std::to_string(dw.top_degree));
  return o;
}

/// Random K subset I in k[x,y] or k[x,y,z]: I = (g1, g2), K = (h1 g1 + h2 g2).
struct QuotientTriple {
  Ring P;
  std::vector<Polynomial> I;
  std::vector<Polynomial> K;
  Ideal J;  ///< in P
  std::string text;
};

inline QuotientTriple random_quotient_triple(std::mt19937_64& rng, std::uint32_t p) {
  std::uniform_int_distribution<int> nv(2, 3), jk(0, 2);
  const int n = nv(rng);
  std::vector<std::string> names = {"x", "y", "z"};
  names.resize(n);
  auto P = make_ring(names, "", p);
  std::vector<Polynomial> I = {random_poly(P, rng, 1, 2, 3), random_poly(P, rng, 1, 3, 3)};
  std::vector<Polynomial> K = {random_poly(P, rng, 1, 1, 2) * I[0] + random_poly(P, rng, 0, 1, 2) * I[1]};
  Ideal J = jk(rng) == 2 ? ideal(P, n == 2 ? "x, y^2" : "x, y^2, z^2") : Ideal::maximal(P);
  std::ostringstream os;
  os << P->to_string() << " I=" << Ideal(P, I).to_string() << " K=" << Ideal(P, K).to_string()
     << " J=" << J.to_string();
  return {P, I, K, J, os.str()};
}

inline Ring quotient_of(const QuotientTriple& t) {
  return RingContext::make(t.P->field(), t.P->names(), t.K);
}

inline Ideal image(const Ring& R, const std::vector<Polynomial>& gens) { return Ideal(R, gens); }

/// Quotient rule for J = m: dim in(I/K)_n (quotient-ring computation) equals
/// dim in(I)_n - dim in(K)_n (cover linear algebra), for n <= d + 2.
inline Outcome quotient_rule(const QuotientTriple& t) {
  Outcome o;
  const Ring R = quotient_of(t);
  const Ideal Ibar(R, t.I);
  const int d = initial_ideal(Ibar, Ideal::maximal(R)).top_degree;
  for (int n = 0; n <= d + 2; ++n) {
    const long lhs = quotient_initial_dim(Ibar, n);
    const long rhs = cover_initial_dim(t.I, t.P->nvars(), n) - cover_initial_dim(t.K, t.P->nvars(), n);
    if (lhs != rhs)
      o.fail(t.text + ": degree " + std::to_string(n) + " quotient " + std::to_string(lhs) + " cover " +
             std::to_string(rhs));
  }
  return o;
}

/// Artin-Rees descends to quotients: ar_{J/K}(I/K) <= ar_J(I).
inline Outcome artin_rees_descends(const QuotientTriple& t) {
  Outcome o;
  const Ring R = quotient_of(t);
  const int top = artin_rees_number(Ideal(t.P, t.I), t.J);
  const int bar = artin_rees_number(Ideal(R, t.I), Ideal(R, t.J.gens()));
  if (bar > top) o.fail(t.text + ": ar(bar)=" + std::to_string(bar) + " > ar=" + std::to_string(top));
  return o;
}

/// l(N/(D + m^{n+1} N)), computed inside R/m^T with T = n + 1 + ar_m(N).
inline long truncated_length(const Ideal& N, const Ideal& D, int n, int ar_N) {
  const Ring& R = N.ring();
  const Ideal m = Ideal::maximal(R);
  const int T = n + 1 + ar_N;
  const Ideal mT = ideal_power(m, T);
  const Ideal top = ideal_sum(N, mT);
  const Ideal bottom = ideal_sum(ideal_sum(D, ideal_product(ideal_power(m, n + 1), N)), mT);
  return *colength(bottom) - *colength(top);
}

struct ExchangePair {
  Ring R;
  Polynomial f1, f2;
  std::string text;
};

inline ExchangePair random_exchange_pair(std::mt19937_64& rng, std::uint32_t p) {
  static const std::vector<std::string> quotients = {"", "x*y", "x^2", "x*y, y^3", "x^2 - y^3", "x^2, x*y"};
  std::uniform_int_distribution<std::size_t> q(0, quotients.size() - 1);
  const std::string rel = quotients[q(rng)];
  auto R = make_ring({"x", "y"}, rel, p, 8);
  Polynomial f1 = R->reduce(random_poly(R, rng, 1, 2, 3)), f2 = R->reduce(random_poly(R, rng, 1, 2, 3));
  if (f1.is_zero()) f1 = R->var(0);
  if (f2.is_zero()) f2 = R->var(1);
  std::ostringstream os;
  os << R->to_string() << " f1=" << f1.to_string(R->names()) << " f2=" << f2.to_string(R->names());
  return {R, f1, f2, os.str()};
}

/// Exchange property: ((f1):f2)/((f1) + 0:f2) and ((f2):f1)/((f2) + 0:f1) have the
/// same m-adic truncation lengths for n <= trunc_cap - 2 and the same
/// annihilator.
inline Outcome exchange_agrees(const ExchangePair& e) {
  Outcome o;
  const Ring& R = e.R;
  const Ideal zero = Ideal::zero(R);
  const Ideal A1(R, {e.f1}), A2(R, {e.f2});
  const Ideal N1 = ideal_quotient(A1, e.f2), D1 = ideal_sum(A1, ideal_quotient(zero, e.f2));
  const Ideal N2 = ideal_quotient(A2, e.f1), D2 = ideal_sum(A2, ideal_quotient(zero, e.f1));
  const Ideal m = Ideal::maximal(R);
  const int c1 = artin_rees_number(N1, m), c2 = artin_rees_number(N2, m);
  for (int n = 0; n <= R->cap() - 2; ++n) {
    const long l1 = truncated_length(N1, D1, n, c1), l2 = truncated_length(N2, D2, n, c2);
    if (l1 != l2) {
      o.fail(e.text + ": n=" + std::to_string(n) + " lengths " + std::to_string(l1) + " vs " + std::to_string(l2));
      return o;
    }
  }
  if (!ideal_equal(ideal_quotient(D1, N1), ideal_quotient(D2, N2))) o.fail(e.text + ": annihilators differ");
  return o;
}

/// AM/HS consistency for m-primary J: h(r, s) is eventually constant in r
/// with value l(R/(I + J^{s+1})), s <= s_max.
inline Outcome am_matches_hs(const Ideal& I, const Ideal& J, int r_max, int s_max) {
  Outcome o;
  const auto am = achilles_manaresi(I, J, r_max, s_max);
  const auto hs = hilbert_samuel(I, J, s_max + 1).hs;
  for (int s = 0; s <= s_max; ++s) {
    const long last = am.am_sums[r_max][s];
    if (am.am_sums[r_max - 1][s] != last) o.fail("h(r," + std::to_string(s) + ") not stable in r");
    if (last != hs[s + 1])
      o.fail("h(" + std::to_string(r_max) + "," + std::to_string(s) + ")=" + std::to_string(last) +
             " but HS=" + std::to_string(hs[s + 1]));
  }
  return o;
}

}  // namespace normalcone::testing
