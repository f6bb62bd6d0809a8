#include <random>

#include "doctest.h"
#include "normalcone/ideal.hpp"
#include "normalcone/linear_algebra.hpp"
#include "support.hpp"

using namespace normalcone;
using namespace normalcone::testing;

TEST_SUITE("ideal-engine") {
  TEST_CASE("standard basis examples") {
    auto R = make_ring({"x", "y"});
    auto sb = StandardBasis::compute(polys(R, "x, y"), TermOrder::deglex(2));
    CHECK(sb.elements().size() == 2);
    CHECK(ideal(R, "x - x^2").contains(poly(R, "x")));
    auto g = StandardBasis::compute(polys(R, "x*y - 1, y^2 - 1"), TermOrder::deglex(2));
    CHECK(g.contains(poly(R, "x - y")));
    CHECK(g.contains(poly(R, "y^2 - 1")));
    CHECK_FALSE(g.contains(poly(R, "x - 1")));
    CHECK(ideal_equal(Ideal(R, g.elements()), ideal(R, "y^2 - 1, x - y")));
  }

  TEST_CASE("ideal calculus examples") {
    auto R = make_ring({"x", "y"});
    CHECK(ideal_equal(ideal_quotient(ideal(R, "x^2"), ideal(R, "x")), ideal(R, "x")));
    CHECK(ideal_equal(ideal_intersection(ideal(R, "x"), ideal(R, "y")), ideal(R, "x*y")));
    CHECK(ideal_equal(saturation(ideal(R, "x^2*y"), ideal(R, "y")), ideal(R, "x^2")));
    CHECK(ideal_equal(ideal_power(Ideal::maximal(R), 2), ideal(R, "x^2, x*y, y^2")));
    CHECK(*colength(ideal(R, "x^2, y^2")) == 4);
    CHECK(*colength(Ideal::unit(R)) == 0);
    CHECK_FALSE(colength(ideal(R, "x")).has_value());
    auto A = ideal(R, "x^3, y");
    CHECK(ideal_equal(ideal_quotient(A, Ideal::unit(R)), A));
  }

  TEST_CASE("colon in k[x,y]/(xy, y^4)") {
    auto R = make_ring({"x", "y"}, "x*y, y^4");
    auto c = ideal_quotient(Ideal::zero(R), poly(R, "x"));
    CHECK(ideal_equal(c, ideal(R, "y")));
    CHECK(c.contains(poly(R, "y")));
    CHECK_FALSE(c.contains(poly(R, "x")));
  }

  TEST_CASE("local membership agrees with a truncated linear-algebra oracle (oracle)") {
    std::mt19937_64 rng(17);
    for (std::uint32_t p : {0u, 32003u}) {
      auto R = make_ring({"x", "y"}, "", p);
      for (int t = 0; t < 25; ++t) {
        std::vector<Polynomial> gens = {random_poly(R, rng, 1, 3, 3), random_poly(R, rng, 1, 3, 3)};
        for (const auto& mu : monomials_of_degree(2, 5)) gens.push_back(R->monomial(mu));
        Ideal I(R, gens);
        auto f = random_poly(R, rng, 1, 4, 4);
        // m^5 is inside I, so membership in P_loc equals membership modulo m^5.
        CHECK(I.contains(f) == truncated_member(f, gens, 5));
        CHECK(*colength(I) == truncated_colength(gens, 2, 5));
      }
    }
  }

  TEST_CASE("Mora and Lazard agree on local bases (oracle)") {
    std::mt19937_64 rng(23);
    auto R = make_ring({"x", "y", "z"});
    for (int t = 0; t < 20; ++t) {
      std::vector<Polynomial> gens = {random_poly(R, rng, 1, 3, 3), random_poly(R, rng, 1, 3, 3)};
      const auto order = TermOrder::local_degrevlex(3);
      auto mora = StandardBasis::compute(gens, order, SbMethod::Mora);
      auto lazard = StandardBasis::compute(gens, order, SbMethod::Lazard);
      auto lm = mora.leading_monomials(), ll = lazard.leading_monomials();
      CHECK(minimalize_monomials(lm).size() == minimalize_monomials(ll).size());
      for (const auto& g : lazard.elements()) CHECK(mora.contains(g));
      for (const auto& g : mora.elements()) CHECK(lazard.contains(g));
    }
  }

  TEST_CASE("intersection and quotient satisfy their defining memberships (property)") {
    std::mt19937_64 rng(29);
    auto R = make_ring({"x", "y"});
    for (int t = 0; t < 20; ++t) {
      Ideal A(R, {random_poly(R, rng, 1, 3, 3), R->var(0).pow(4)});
      Ideal B(R, {random_poly(R, rng, 1, 2, 2)});
      auto C = ideal_intersection(A, B);
      CHECK(A.contains(C));
      CHECK(B.contains(C));
      CHECK(C.contains(ideal_product(A, B)));
      auto Q = ideal_quotient(A, B);
      CHECK(Q.contains(A));
      for (const auto& q : Q.gens())
        for (const auto& b : B.gens()) CHECK(A.contains(q * b));
    }
  }

  TEST_CASE("lift to cover") {
    auto R = make_ring({"x", "y"}, "x*y, y^4");
    auto L = lift_to_cover(ideal(R, "x"));
    CHECK(L.ring()->relations().empty());
    CHECK(L.contains(poly(L.ring(), "x*y")));
    CHECK(L.contains(poly(L.ring(), "y^4")));
  }
}
