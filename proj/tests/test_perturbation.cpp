#include "doctest.h"
#include "normalcone/errors.hpp"
#include "normalcone/perturbation.hpp"
#include "support.hpp"

using namespace normalcone;
using namespace normalcone::testing;

TEST_SUITE("perturbation") {
  TEST_CASE("filter-regularity certificates") {
    auto R39 = make_ring({"x", "y"}, "x*y, y^4");
    auto c = certify_filter_regular(polys(R39, "x"), Ideal::maximal(R39));
    CHECK(c.filter_regular);
    CHECK(c.a.at(0) == 3);

    auto P = make_ring({"x", "y"});
    auto r = certify_filter_regular(polys(P, "x, y"), Ideal::maximal(P));
    CHECK(r.filter_regular);
    CHECK(r.a == std::vector<std::optional<int>>{0, 0});

    auto Rn = make_ring({"x", "y"}, "x^2, x*y");
    auto n = certify_filter_regular(polys(Rn, "x"), Ideal::maximal(Rn));
    CHECK_FALSE(n.filter_regular);
    CHECK_FALSE(n.a.at(0).has_value());
    CHECK(n.first_failure == 0u);
  }

  TEST_CASE("bounds") {
    auto R39 = make_ring({"x", "y"}, "x*y, y^4");
    auto b = bound_main(polys(R39, "x"), Ideal::maximal(R39));
    CHECK(b.N == 4);
    CHECK(b.single_c == 3);
    CHECK(b.a == std::vector<int>{3});
    CHECK(b.ar == std::vector<int>{1});

    auto P = make_ring({"x", "y"});
    auto m = Ideal::maximal(P);
    CHECK(bound_main(polys(P, "x^2 - y^3"), m).N == 3);
    CHECK(bound_regular(polys(P, "x^2 - y^3"), m).N == 3);
    CHECK(bound_regular(polys(P, "x, y"), m).N == 2);
    CHECK(bound_regular(polys(P, "x, y"), ideal(P, "x, y")).N == 2);
    CHECK(bound_via_hilbert(polys(P, "x^2 - y^3"), m, 2).N == 3);

    auto Rn = make_ring({"x", "y"}, "x^2, x*y");
    CHECK_THROWS_AS(bound_main(polys(Rn, "x"), Ideal::maximal(Rn)), PreconditionError);
  }

  TEST_CASE("sampling is deterministic and lands in J^N") {
    auto P = make_ring({"x", "y"});
    auto m = Ideal::maximal(P);
    auto a = sample_perturbation(m, 3, 2, 12, 99);
    auto b = sample_perturbation(m, 3, 2, 12, 99);
    CHECK(a == b);
    for (const auto& eps : a[0]) CHECK(eps.is_zero());
    for (std::size_t t = 1; t < a.size(); ++t)
      for (const auto& e : a[t])
        if (!e.is_zero()) CHECK(order_of(e, m) >= 3);
    CHECK(sample_perturbation(m, 3, 2, 12, 100) != a);
  }

  TEST_CASE("worked perturbations") {
    auto R39 = make_ring({"x", "y"}, "x*y, y^4");
    auto m39 = Ideal::maximal(R39);
    auto pass = check_perturbation(polys(R39, "x"), m39, 3, polys(R39, "y^3"));
    CHECK(pass.initial_ideal_equal == true);
    auto fail = check_perturbation(polys(R39, "x"), m39, 2, polys(R39, "y^2"));
    CHECK(fail.initial_ideal_equal == false);

    auto P = make_ring({"x", "y"});
    auto m = Ideal::maximal(P);
    CHECK(check_perturbation(polys(P, "x^2 - y^3"), m, 3, polys(P, "y^3")).passed());
    CHECK(check_perturbation(polys(P, "x^2 - y^3"), m, 2, polys(P, "y^2")).initial_ideal_equal == false);
  }

  TEST_CASE("colon ideal is unchanged at level c") {
    auto R39 = make_ring({"x", "y"}, "x*y, y^4");
    auto m = Ideal::maximal(R39);
    const int c = *bound_main(polys(R39, "x"), m).single_c;
    for (const auto& eps : sample_perturbation(m, c, 1, 10, 5)) {
      auto f = R39->reduce(poly(R39, "x") + eps[0]);
      CHECK(ideal_equal(ideal_quotient(Ideal::zero(R39), f), ideal_quotient(Ideal::zero(R39), poly(R39, "x"))));
    }
  }

  TEST_CASE("single-index perturbation for r = 2") {
    auto P = make_ring({"x", "y"});
    auto m = Ideal::maximal(P);
    auto fs = polys(P, "x^2 + y^3, y^2");
    auto b = bound_main(fs, m);
    PerturbationOptions opt;
    opt.single_index = 0;
    for (const auto& r : verify_invariance(fs, m, *b.single_c, 8, 3, opt)) CHECK_MESSAGE(r.passed(), r.detail);
  }

  TEST_CASE("invariance and destabilization") {
    auto P = make_ring({"x", "y"});
    auto m = Ideal::maximal(P);
    auto fs = polys(P, "x^2 - y^3");
    auto reps = verify_invariance(fs, m, 3, 10, 7);
    CHECK(reps.size() == 10);
    for (const auto& r : reps) CHECK_MESSAGE(r.passed(), r.detail);
    CHECK_FALSE(search_destabilizing(fs, m, 3, 10, 7).has_value());

    auto Rn = make_ring({"x", "y"}, "x^2, x*y");
    for (int N = 1; N <= 6; ++N) {
      auto w = search_destabilizing(polys(Rn, "x"), Ideal::maximal(Rn), N, 10, 1);
      REQUIRE(w.has_value());
      CHECK(order_of(w->eps[0], Ideal::maximal(Rn)) >= N);
    }
    auto w4 = check_perturbation(polys(Rn, "x"), Ideal::maximal(Rn), 4, polys(Rn, "y^4"));
    CHECK(w4.initial_ideal_equal == false);
  }

  TEST_CASE("AM tables survive perturbation for non-m-primary J") {
    auto P = make_ring({"x", "y"});
    auto J = ideal(P, "x");
    auto fs = polys(P, "y^2 + x*y");
    auto b = bound_main(fs, J);
    for (const auto& r : verify_invariance(fs, J, b.N, 6, 2)) {
      CHECK_MESSAGE(r.passed(), r.detail);
      CHECK(r.am_equal == true);
    }
  }

  TEST_CASE("Hilbert index estimates") {
    auto R = make_ring({"x", "y", "z"}, "x*z, y*z, z^4");
    auto e = estimate_hilbert_index(polys(R, "x"), Ideal::maximal(R), 6, 10, 1);
    CHECK(e.p_hat >= 3);
    CHECK(e.status == "lower-bound");
  }
}
