#include "doctest.h"
#include "normalcone/errors.hpp"
#include "normalcone/filtration.hpp"
#include "support.hpp"

using namespace normalcone;
using namespace normalcone::testing;

namespace {

Monomial mono(std::initializer_list<int> e) { return Monomial(e); }

}  // namespace

TEST_SUITE("filtration-general") {
  TEST_CASE("order-induced enumeration") {
    auto P = make_ring({"x", "y"});
    // Priority [y, x] makes x < y inside a degree.
    auto F = Filtration::from_order(P, MonomialOrder::deglex(2, {1, 0}));
    auto g = F.enumeration(4);
    CHECK(g == std::vector<Monomial>{mono({0, 0}), mono({1, 0}), mono({0, 1}), mono({2, 0})});
    CHECK(ideal_equal(F.level(1), Ideal::maximal(P)));
    CHECK(F.level(0).is_unit());
    CHECK(F.position(mono({2, 0})) == 3);

    auto P1 = make_ring({"x"});
    auto F1 = Filtration::from_order(P1, MonomialOrder::deglex(1));
    for (int n = 0; n <= 5; ++n) CHECK(ideal_equal(F1.level(n), Ideal(P1, {P1->var(0).pow(n)})));
    CHECK_THROWS_AS(Filtration::from_order(P, MonomialOrder::lex(2)), PreconditionError);
  }

  TEST_CASE("axioms and delta") {
    auto P = make_ring({"x", "y"});
    auto m = Ideal::maximal(P);
    const std::vector<Filtration> fs = {Filtration::adic(m), Filtration::weighted(P, {3, 2}),
                                        Filtration::weighted(P, {1, 2}),
                                        Filtration::table(P, {polys(P, "x, y"), polys(P, "x^2, y")}),
                                        Filtration::from_order(P, MonomialOrder::deglex(2), 20)};
    for (const auto& F : fs) CHECK_MESSAGE(check_axioms(F).ok(), F.name());
    CHECK(rees_delta(fs[0]).delta == 1);
    CHECK(rees_delta(fs[0]).status == DeltaStatus::Certified);
    CHECK(rees_delta(fs[1]).delta == 3);
    CHECK(rees_delta(fs[2]).delta == 2);
    CHECK(rees_delta(fs[3]).delta == 2);
    CHECK(rees_delta(fs[4]).status == DeltaStatus::Heuristic);
    auto P1 = make_ring({"x"});
    auto d1 = rees_delta(Filtration::from_order(P1, MonomialOrder::deglex(1)));
    CHECK(d1.delta == 1);
    CHECK(d1.status == DeltaStatus::Certified);
    CHECK_THROWS_AS(Filtration::table(P, {polys(P, "x"), polys(P, "y")}), PreconditionError);
  }

  TEST_CASE("filtration power containments") {
    auto P = make_ring({"x", "y"});
    for (const auto& F : {Filtration::adic(Ideal::maximal(P)), Filtration::weighted(P, {3, 2}),
                          Filtration::table(P, {polys(P, "x, y"), polys(P, "x^2, y")})}) {
      auto rd = rees_delta(F);
      auto chk = check_lemma_J1(F, rd.delta, 5);
      CHECK_MESSAGE(chk.holds, F.name());
    }
    auto D = Filtration::from_order(P, MonomialOrder::deglex(2));
    CHECK(check_lemma_J1(D, rees_delta(D).delta, 5).holds);
  }

  TEST_CASE("initial ideals for filtrations") {
    auto P = make_ring({"x", "y"});
    auto D = Filtration::from_order(P, MonomialOrder::deglex(2), 30);
    auto in = initial_ideal_filtration(ideal(P, "x^2 - y^3"), D);
    REQUIRE(in.generators.size() == 1);
    CHECK(in.generators[0].representative.terms().size() >= 1);
    CHECK(monomial_initial_ideal(ideal(P, "x^2 - y^3"), MonomialOrder::deglex(2)) ==
          std::vector<Monomial>{mono({2, 0})});
    CHECK_FALSE(order_initial_cross_check(ideal(P, "x^2 - y^3"), D, 6).has_value());

    auto P1 = make_ring({"x"});
    auto D1 = Filtration::from_order(P1, MonomialOrder::deglex(1));
    auto in1 = initial_ideal_filtration(ideal(P1, "x - x^2"), D1);
    CHECK(in1.top_degree == 1);
    CHECK(initial_ideal_filtration(Ideal::zero(P), D).generators.empty());
  }

  TEST_CASE("Artin-Rees numbers for filtrations") {
    auto P = make_ring({"x", "y"});
    auto m = Ideal::maximal(P);
    auto cusp = ideal(P, "x^2 - y^3");
    auto W = Filtration::weighted(P, {3, 2});
    auto r = artin_rees_filtration(cusp, W);
    CHECK(r.value == 6);
    CHECK(r.decomposition_verified);
    CHECK(r.predecessor_fails == true);
    CHECK(artin_rees_filtration(Ideal::unit(P), W).value == 0);
    auto T = Filtration::table(P, {polys(P, "x, y"), polys(P, "x^2, y")});
    CHECK(artin_rees_filtration(cusp, T).rees_route == artin_rees_filtration(cusp, T).degreewise_route);
    CHECK_THROWS_AS(artin_rees_filtration(cusp, Filtration::from_order(P, MonomialOrder::deglex(2), 20)),
                    TruncationCapExceeded);
    for (int n = 6; n <= 8; ++n) CHECK(decomposition_holds(cusp, W, 6, n));
  }

  TEST_CASE("adic bridge reproduces the adic operations") {
    auto R39 = make_ring({"x", "y"}, "x*y, y^4");
    auto m = Ideal::maximal(R39);
    auto A = Filtration::adic(m);
    for (const char* text : {"x", "x + y^2"}) {
      auto I = ideal(R39, text);
      auto a = initial_ideal(I, m), b = initial_ideal_filtration(I, A);
      REQUIRE(a.generators.size() == b.generators.size());
      for (std::size_t i = 0; i < a.generators.size(); ++i) {
        CHECK(a.generators[i].degree == b.generators[i].degree);
        CHECK(a.generators[i].representative == b.generators[i].representative);
      }
      CHECK(artin_rees_filtration(I, A).value == artin_rees_number(I, m));
    }
    auto P = make_ring({"x", "y"});
    auto fb = bound_filtration(polys(P, "x^2 - y^3"), Filtration::adic(Ideal::maximal(P)));
    CHECK(fb.adic_main_N == bound_main(polys(P, "x^2 - y^3"), Ideal::maximal(P)).N);
  }

  TEST_CASE("filtration bounds") {
    auto P = make_ring({"x", "y"});
    auto W = Filtration::weighted(P, {3, 2});
    auto b = bound_filtration(polys(P, "x^2 - y^3"), W);
    CHECK(b.cert.N == 7);
    CHECK(b.regular_N == 7);
    CHECK(b.theorem_N == 7);
  }

  TEST_CASE("jets") {
    auto P = make_ring({"x", "y"});
    auto order = MonomialOrder::deglex(2);
    auto cusp = jet_pipeline(P, polys(P, "x^2 - y^3 + y^5"), order, 2, 8);
    CHECK(cusp.passed());
    CHECK(cusp.initial == std::vector<Monomial>{mono({2, 0})});
    auto pair = jet_pipeline(P, polys(P, "x + y^7, y + x^7"), order, 2, 8);
    CHECK(pair.passed());
    CHECK(jet(poly(P, "x^2 - y^3 + y^5"), 3) == poly(P, "x^2 - y^3"));
  }

  TEST_CASE("invariance and destabilization under filtrations") {
    auto P = make_ring({"x", "y"});
    auto W = Filtration::weighted(P, {3, 2});
    auto fs = polys(P, "x^2 - y^3");
    for (const auto& r : verify_invariance_filtration(fs, W, 7, 8, 4)) CHECK_MESSAGE(r.passed(), r.detail);
    CHECK_FALSE(search_destabilizing_filtration(fs, W, 7, 8, 4).has_value());
    auto Rn = make_ring({"x", "y"}, "x^2, x*y");
    CHECK(search_destabilizing_filtration(polys(Rn, "x"), Filtration::adic(Ideal::maximal(Rn)), 3, 8, 1)
              .has_value());
  }
}
