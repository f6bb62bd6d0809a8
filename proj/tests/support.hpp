#pragma once

#include <random>
#include <string>
#include <vector>

#include "normalcone/ideal.hpp"
#include "normalcone/runner.hpp"

namespace normalcone::testing {

/// Ring over Q (p = 0) or F_p with relations given as script text.
inline Ring make_ring(std::vector<std::string> vars, const std::string& relations = "", std::uint32_t p = 0,
                      std::optional<int> cap = std::nullopt) {
  const Field F = p ? Field::prime(p) : Field::rationals();
  auto cover = RingContext::make(F, vars);
  std::vector<Polynomial> rels;
  if (!relations.empty()) rels = parse_polynomials(cover, relations);
  return RingContext::make(F, std::move(vars), std::move(rels), cap);
}

inline Polynomial poly(const Ring& R, const std::string& text) { return parse_polynomials(R, text).at(0); }
inline std::vector<Polynomial> polys(const Ring& R, const std::string& text) { return parse_polynomials(R, text); }
inline Ideal ideal(const Ring& R, const std::string& text) { return Ideal(R, parse_polynomials(R, text)); }

/// Random polynomial with terms of degree in [lo, hi] and coefficients in
/// {-3..3} \ {0}.
inline Polynomial random_poly(const Ring& R, std::mt19937_64& rng, int lo, int hi, int max_terms) {
  std::uniform_int_distribution<int> deg(lo, hi), coef(-3, 3), count(1, max_terms);
  std::uniform_int_distribution<std::size_t> var(0, R->nvars() - 1);
  Polynomial f = R->zero();
  const int k = count(rng);
  for (int t = 0; t < k; ++t) {
    Monomial m(R->nvars());
    const int d = deg(rng);
    for (int i = 0; i < d; ++i) m = m * Monomial::variable(R->nvars(), var(rng));
    int c = coef(rng);
    if (c == 0) c = 1;
    f += R->monomial(m).scaled(R->field().from_int(c));
  }
  if (f.is_zero()) f = R->var(0).pow(static_cast<unsigned>(std::max(lo, 1)));
  return f;
}

}  // namespace normalcone::testing
