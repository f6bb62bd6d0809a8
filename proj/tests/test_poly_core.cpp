#include <random>

#include "doctest.h"
#include "normalcone/monomial_order.hpp"
#include "support.hpp"

using namespace normalcone;
using namespace normalcone::testing;

namespace {

Monomial mono(std::initializer_list<int> e) { return Monomial(e); }

Monomial random_monomial(std::mt19937_64& rng, std::size_t n, int maxdeg) {
  std::uniform_int_distribution<int> e(0, maxdeg);
  Monomial m(n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, e(rng));
  return m;
}

}  // namespace

TEST_SUITE("poly-core") {
  TEST_CASE("field arithmetic") {
    const Field Q = Field::rationals();
    CHECK(Q.inv(Q.from_int(3)) == mpq_class(1, 3));
    CHECK(Q.from_rational(mpq_class(4, 6)) == mpq_class(2, 3));
    const Field F = Field::prime(7);
    CHECK(F.inv(F.from_int(3)) == F.from_int(5));
    CHECK(F.from_int(-1) == F.from_int(6));
    CHECK(F.from_rational(mpq_class(1, 2)) == F.from_int(4));
    CHECK_THROWS_AS(Field::prime(8), std::invalid_argument);
    CHECK_THROWS_AS(F.inv(F.zero()), std::domain_error);
  }

  TEST_CASE("polynomial arithmetic and printing") {
    auto R = make_ring({"x", "y"});
    auto f = poly(R, "x^2 - y^3");
    CHECK(f.to_string(R->names()) == "-y^3 + x^2");
    CHECK((f * f - poly(R, "x^4 - 2*x^2*y^3 + y^6")).is_zero());
    CHECK(poly(R, "(x + y)^3") == poly(R, "x^3 + 3*x^2*y + 3*x*y^2 + y^3"));
    CHECK(poly(R, "x/2 + x/2") == poly(R, "x"));
    CHECK(f.low_degree() == 2);
    CHECK(f.lowest_form() == poly(R, "x^2"));
  }

  TEST_CASE("compare examples") {
    auto dl = MonomialOrder::deglex(2);
    CHECK(compare(dl, mono({1, 0}), mono({0, 1})) == Ordering::GT);
    CHECK(compare(dl, mono({0, 1}), mono({2, 0})) == Ordering::LT);
    CHECK(compare(dl, mono({3, 2}), mono({3, 2})) == Ordering::EQ);
    auto w = MonomialOrder::weighted({1, 2});
    CHECK(compare(w, mono({3, 0}), mono({0, 1})) == Ordering::GT);
  }

  TEST_CASE("smallest monomial and jets") {
    auto R = make_ring({"x", "y"});
    auto dl = MonomialOrder::deglex(2);
    CHECK(smallest_monomial(poly(R, "x^2 - y^3"), dl) == mono({2, 0}));
    CHECK(smallest_monomial(poly(R, "x + y^3"), dl) == mono({1, 0}));
    CHECK(smallest_monomial(poly(R, "5"), dl).is_one());
    auto g = poly(R, "x^2 - y^3 + y^5");
    CHECK(jet(g, 3) == poly(R, "x^2 - y^3"));
    CHECK(jet(poly(R, "7 + x + y^2"), 0) == poly(R, "7"));
    CHECK(jet(g, 9) == g);
  }

  TEST_CASE("noetherian orders") {
    CHECK(is_noetherian(MonomialOrder::deglex(2)));
    CHECK(is_noetherian(MonomialOrder::degrevlex(3)));
    CHECK(is_noetherian(MonomialOrder::weighted({3, 2})));
    CHECK_FALSE(is_noetherian(MonomialOrder::lex(2)));
    CHECK(is_noetherian(MonomialOrder::lex(1)));
  }

  TEST_CASE("orders are total, multiplicative, and 1 is minimal (property)") {
    std::mt19937_64 rng(11);
    const std::vector<MonomialOrder> orders = {MonomialOrder::lex(3), MonomialOrder::deglex(3),
                                               MonomialOrder::degrevlex(3), MonomialOrder::weighted({1, 2, 3}),
                                               MonomialOrder::deglex(3, {2, 0, 1})};
    for (const auto& o : orders) {
      for (int t = 0; t < 300; ++t) {
        auto a = random_monomial(rng, 3, 4), b = random_monomial(rng, 3, 4), c = random_monomial(rng, 3, 4);
        const auto ab = compare(o, a, b), ba = compare(o, b, a);
        CHECK(int(ab) == -int(ba));
        CHECK((ab == Ordering::EQ) == (a == b));
        CHECK(compare(o, a * c, b * c) == ab);
        if (compare(o, a, b) == Ordering::LT && compare(o, b, c) == Ordering::LT)
          CHECK(compare(o, a, c) == Ordering::LT);
        if (o.noetherian()) CHECK(compare(o, Monomial(3), a * Monomial::variable(3, 0)) == Ordering::LT);
      }
    }
  }

  TEST_CASE("ring axioms on random polynomials (property)") {
    std::mt19937_64 rng(5);
    for (std::uint32_t p : {0u, 32003u}) {
      auto R = make_ring({"x", "y", "z"}, "", p);
      for (int t = 0; t < 100; ++t) {
        auto a = random_poly(R, rng, 0, 3, 4), b = random_poly(R, rng, 0, 3, 4), c = random_poly(R, rng, 0, 3, 4);
        CHECK((a * b) == (b * a));
        CHECK((a * (b + c)) == (a * b + a * c));
        CHECK(((a * b) * c) == (a * (b * c)));
        CHECK((a - a).is_zero());
        CHECK(jet(a, 1) + a.tail(1) == a);
      }
    }
  }

  TEST_CASE("quotient rings reduce relations") {
    auto R = make_ring({"x", "y"}, "x*y, y^4");
    CHECK(R->reduce(poly(R, "x*y + y^5 + x")) == poly(R, "x"));
    CHECK(R->is_quotient());
  }
}
