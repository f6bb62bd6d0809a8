#include <random>

#include "doctest.h"
#include "normalcone/errors.hpp"
#include "properties.hpp"

using namespace normalcone;
using namespace normalcone::testing;

TEST_SUITE("filtration-adic") {
  TEST_CASE("order and initial forms") {
    auto R = make_ring({"x", "y"});
    auto m = Ideal::maximal(R);
    CHECK(order_of(poly(R, "x + y^2"), m) == 1);
    CHECK(order_of(poly(R, "1 + x"), m) == 0);
    auto f = initial_form(poly(R, "x^2 - y^3"), m);
    CHECK(f.degree == 2);
    CHECK(*f.form == poly(R, "x^2"));
    CHECK(initial_form(R->zero(), m).degree == -1);

    auto R39 = make_ring({"x", "y"}, "x*y, y^4");
    auto g = initial_form(poly(R39, "x + y^2"), Ideal::maximal(R39));
    CHECK(g.degree == 1);
    CHECK(*g.form == poly(R39, "x"));

    auto R42 = make_ring({"x", "y", "z"}, "x*z, y*z, z^4");
    CHECK(*initial_form(poly(R42, "x + z^2"), Ideal::maximal(R42)).form == poly(R42, "x"));
  }

  TEST_CASE("initial ideals of the worked examples") {
    auto R39 = make_ring({"x", "y"}, "x*y, y^4");
    auto m = Ideal::maximal(R39);
    auto a = initial_ideal(ideal(R39, "x"), m);
    CHECK(initial_ideal_matches(a, polys(R39, "x")));
    CHECK(a.top_degree == 1);
    auto b = initial_ideal(ideal(R39, "x + y^2"), m);
    CHECK(initial_ideal_matches(b, polys(R39, "x, y^3")));
    CHECK(b.top_degree == 3);
    CHECK(artin_rees_number(ideal(R39, "x"), m) == 1);

    auto P = make_ring({"x", "y"});
    auto cusp = initial_ideal(ideal(P, "x^2 - y^3"), Ideal::maximal(P));
    CHECK(initial_ideal_matches(cusp, polys(P, "x^2")));
  }

  TEST_CASE("cusp initial ideal against a truncated linear-algebra oracle (oracle)") {
    auto P = make_ring({"x", "y"});
    const auto gens = polys(P, "x^2 - y^3");
    // in((x^2 - y^3)) = (x^2): dimension n - 1 in degree n >= 2.
    for (int n = 0; n < 8; ++n) {
      const long want = n < 2 ? 0 : n - 1;
      CHECK(cover_initial_dim(gens, 2, n) == want);
      CHECK(quotient_initial_dim(Ideal(P, gens), n) == want);
    }
  }

  TEST_CASE("Rees degrees") {
    auto P = make_ring({"x", "y"});
    auto m = Ideal::maximal(P);
    CHECK(rees_ideal(Ideal::zero(P), m).top_degree == 0);
    CHECK(rees_ideal(m, m).top_degree == 1);
    CHECK(rees_ideal(ideal(P, "x^2 - y^3"), m).top_degree == 2);
    CHECK(artin_rees_number(Ideal::zero(P), m) == 0);
    CHECK(artin_rees_number(Ideal::unit(P), m) == 0);
    auto r = artin_rees(ideal(P, "x^2 - y^3"), m);
    CHECK(r.value == 2);
    CHECK(r.rees_route == r.degreewise_route);
    // J^n ∩ I = J (J^{n-1} ∩ I) directly for I = J.
    for (int n = 1; n <= 4; ++n)
      CHECK(ideal_equal(ideal_intersection(ideal_power(m, n + 1), m),
                        ideal_product(m, ideal_intersection(ideal_power(m, n), m))));
  }

  TEST_CASE("Artin-Rees definition holds at c and fails at c - 1 for the cusp") {
    auto P = make_ring({"x", "y"});
    auto m = Ideal::maximal(P);
    auto I = ideal(P, "x^2 - y^3");
    const int c = artin_rees_number(I, m);
    for (int n = c; n <= c + 2; ++n)
      CHECK(ideal_equal(ideal_intersection(ideal_power(m, n + 1), I),
                        ideal_product(m, ideal_intersection(ideal_power(m, n), I))));
    // n = c - 1 = 1: m^2 ∩ I = I but m (m ∩ I) = m I.
    CHECK_FALSE(ideal_equal(ideal_intersection(ideal_power(m, 2), I),
                            ideal_product(m, ideal_intersection(ideal_power(m, 1), I))));
  }

  TEST_CASE("associated graded rings") {
    auto R39 = make_ring({"x", "y"}, "x*y, y^4");
    auto g = assoc_graded(Ideal::zero(R39), Ideal::maximal(R39));
    CHECK(ideal_equal(Ideal(make_ring({"x", "y"}), g.ambient_relations), ideal(make_ring({"x", "y"}), "x*y, y^4")));
    auto R42 = make_ring({"x", "y", "z"}, "x*z, y*z, z^4");
    auto h = assoc_graded(Ideal::zero(R42), Ideal::maximal(R42));
    auto P3 = make_ring({"x", "y", "z"});
    CHECK(ideal_equal(Ideal(P3, h.ambient_relations), ideal(P3, "x*z, y*z, z^4")));
  }

  TEST_CASE("a-index examples") {
    auto R39 = make_ring({"x", "y"}, "x*y, y^4");
    auto zero = Ideal::zero(R39);
    auto m = Ideal::maximal(R39);
    CHECK(a_index(zero, poly(R39, "x"), m) == 3);
    CHECK(a_index(zero, poly(R39, "1 + x"), m) == 0);
    auto Rn = make_ring({"x", "y"}, "x^2, x*y");
    CHECK_FALSE(a_index(Ideal::zero(Rn), poly(Rn, "x"), Ideal::maximal(Rn)).has_value());
  }

  TEST_CASE("Hilbert-Samuel tables against colength (oracle)") {
    auto P = make_ring({"x", "y"});
    auto m = Ideal::maximal(P);
    CHECK(hilbert_samuel(Ideal::zero(P), m, 4).hs == std::vector<long>{0, 1, 3, 6, 10});
    auto hs = hilbert_samuel(ideal(P, "x^2 - y^3"), m, 7).hs;
    for (int n = 1; n <= 7; ++n) {
      CHECK(hs[n] == 2 * n - 1);
      CHECK(hs[n] == truncated_colength(polys(P, "x^2 - y^3"), 2, n));
    }
    CHECK(multiplicity_hs(ideal(P, "x^2 - y^3"), m).e == 2);
    CHECK(multiplicity_hs(m, m).e == 1);
    auto R42 = make_ring({"x", "y", "z"}, "x*z, y*z, z^4");
    CHECK(multiplicity_hs(ideal(R42, "x"), Ideal::maximal(R42)).e == 1);
    CHECK_THROWS_AS(hilbert_samuel(Ideal::zero(P), ideal(P, "x"), 3), PreconditionError);
  }

  TEST_CASE("embedded-point tables first differ one degree past n in gr") {
    for (int n : {2, 3}) {
      auto R = make_ring({"x", "y", "z"}, "x*z, y*z, z^" + std::to_string(n + 2));
      auto m = Ideal::maximal(R);
      auto a = hilbert_samuel(ideal(R, "x"), m, n + 4);
      auto b = hilbert_samuel(ideal(R, "x + z^" + std::to_string(n)), m, n + 4);
      auto la = graded_lengths(a), lb = graded_lengths(b);
      for (int k = 0; k <= n; ++k) CHECK(la[k] == lb[k]);
      CHECK(la[n + 1] != lb[n + 1]);
      for (int k = 0; k <= n + 1; ++k) CHECK(a.hs[k] == b.hs[k]);
      CHECK(a.hs[n + 2] != b.hs[n + 2]);
    }
  }

  TEST_CASE("Achilles-Manaresi tables") {
    auto P = make_ring({"x", "y"});
    auto m = Ideal::maximal(P);
    auto am = achilles_manaresi(Ideal::zero(P), m, 3, 3);
    for (int u = 1; u <= 3; ++u)
      for (int v = 0; v <= 3; ++v) CHECK(am.am_lengths[u][v] == 0);
    for (int s = 0; s <= 3; ++s) CHECK(am.am_sums[3][s] == binomial(s + 2, 2));
    auto jx = achilles_manaresi(Ideal::zero(P), ideal(P, "x"), 3, 3);
    for (const auto& row : jx.am_lengths)
      for (long l : row) CHECK(l == 1);
    CHECK(am_matches_hs(ideal(P, "x^2 - y^3"), m, 4, 3).ok);
    auto ms = multiplicity_sequence(achilles_manaresi(Ideal::zero(P), m, 4, 4));
    int nonzero = 0;
    for (const auto& c : ms.c) nonzero += sgn(c) != 0;
    CHECK(nonzero == 1);
  }

  TEST_CASE("property suites on a few random instances") {
    std::mt19937_64 rng(101);
    for (int t = 0; t < 6; ++t) {
      auto in = random_adic_instance(rng, t % 2 ? 32003 : 0);
      auto o = rees_matches_degreewise(in);
      CHECK_MESSAGE(o.ok, o.detail);
    }
    for (int t = 0; t < 4; ++t) {
      auto tr = random_quotient_triple(rng, 0);
      auto a = quotient_rule(tr);
      CHECK_MESSAGE(a.ok, a.detail);
      auto b = artin_rees_descends(tr);
      CHECK_MESSAGE(b.ok, b.detail);
    }
    for (int t = 0; t < 4; ++t) {
      auto e = random_exchange_pair(rng, 0);
      auto o = exchange_agrees(e);
      CHECK_MESSAGE(o.ok, o.detail);
    }
  }
}
