#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>

#include "fuzz.hpp"
#include "normalcone/errors.hpp"
#include "normalcone/filtration.hpp"
#include "normalcone/runner.hpp"
#include "normalcone/script.hpp"
#include "properties.hpp"

using namespace normalcone;
using namespace normalcone::testing;

namespace {

/// Every criterion is exact: integer and ideal equalities, zero failures.
constexpr long kTolerance = 0;
constexpr int kCrossCheckInstances = 60;     ///< criterion 3, >= 50
constexpr std::size_t kSoundnessTrials = 100;  ///< criterion 4, >= 100 per instance
constexpr std::uint64_t kSoundnessSeed = 42;
constexpr int kQuotientTriples = 30;         ///< criterion 7, >= 30
constexpr int kExchangePairs = 30;           ///< criterion 8, >= 30
constexpr int kFuzzCases = 10000;            ///< criterion 11

struct Criterion {
  int id;
  std::string title;
  std::function<Outcome()> run;
};

void expect(Outcome& o, bool cond, const std::string& what) {
  if (!cond) o.fail(what);
}

bool matches(const Ideal& I, const Ideal& J, const std::string& forms) {
  return initial_ideal_matches(initial_ideal(I, J), polys(I.ring(), forms));
}

Outcome xy_ring() {
  Outcome o;
  auto R = make_ring({"x", "y"}, "x*y, y^4");
  auto m = Ideal::maximal(R);
  expect(o, artin_rees_number(ideal(R, "x"), m) == 1, "ar_m((x)) != 1");
  expect(o, matches(ideal(R, "x"), m, "x"), "in((x)) != (x*)");
  expect(o, matches(ideal(R, "x + y^2"), m, "x, y^3"), "in((x + y^2)) != (x*, (y*)^3)");
  return o;
}

Outcome embedded_point() {
  Outcome o;
  for (int n : {2, 3}) {
    const std::string ns = std::to_string(n);
    auto R = make_ring({"x", "y", "z"}, "x*z, y*z, z^" + std::to_string(n + 2));
    auto m = Ideal::maximal(R);
    auto I = ideal(R, "x"), Ip = ideal(R, "x + z^" + ns);
    expect(o, matches(I, m, "x"), "n=" + ns + ": in((x)) != (x*)");
    expect(o, matches(Ip, m, "x, z^" + std::to_string(n + 1)), "n=" + ns + ": in((x + z^n)) wrong");
    expect(o, multiplicity_hs(I, m).e == 1, "n=" + ns + ": e(m, R/(x)) != 1");
    // Graded lengths l_k(gr(R/I)) = l(R/(I + m^{k+1})) - l(R/(I + m^k)).
    auto a = hilbert_samuel(I, m, n + 4), b = hilbert_samuel(Ip, m, n + 4);
    auto la = graded_lengths(a), lb = graded_lengths(b);
    std::optional<std::size_t> first;
    for (std::size_t k = 0; k < la.size() && !first; ++k)
      if (std::labs(la[k] - lb[k]) > kTolerance) first = k;
    expect(o, first == static_cast<std::size_t>(n + 1), "n=" + ns + ": graded first difference not at n+1");
    // The same fact in HS-table indexing, HS(k) = l(R/(I + m^k)), lands one step later.
    std::optional<std::size_t> hs_first;
    for (std::size_t k = 0; k < a.hs.size() && !hs_first; ++k)
      if (std::labs(a.hs[k] - b.hs[k]) > kTolerance) hs_first = k;
    expect(o, hs_first == static_cast<std::size_t>(n + 2), "n=" + ns + ": HS first difference not at n+2");
  }
  return o;
}

Outcome cross_algorithm() {
  Outcome o;
  std::mt19937_64 rng(3);
  for (int t = 0; t < kCrossCheckInstances; ++t) {
    auto in = random_adic_instance(rng, t % 2 ? 32003 : 0);
    auto r = rees_matches_degreewise(in);
    if (!r.ok) o.fail(r.detail);
  }
  return o;
}

struct CorpusInstance {
  std::string name;
  Ring R;
  std::vector<Polynomial> fs;
  Ideal J;
};

std::vector<CorpusInstance> soundness_corpus() {
  std::vector<CorpusInstance> v;
  auto add = [&](std::string name, Ring R, const std::string& fs, const std::string& J) {
    Ideal Jd = J == "m" ? Ideal::maximal(R) : ideal(R, J);
    v.push_back({std::move(name), R, polys(R, fs), Jd});
  };
  add("xy_y4", make_ring({"x", "y"}, "x*y, y^4"), "x", "m");
  add("embedded z^4", make_ring({"x", "y", "z"}, "x*z, y*z, z^4"), "x", "m");
  add("embedded z^5", make_ring({"x", "y", "z"}, "x*z, y*z, z^5"), "x", "m");
  add("cusp", make_ring({"x", "y"}), "x^2 - y^3", "m");
  add("cusp over F_32003", make_ring({"x", "y"}, "", 32003), "x^2 - y^3", "m");
  add("node", make_ring({"x", "y"}), "x*y + x^3 + y^3", "m");
  add("regular pair", make_ring({"x", "y"}), "x, y", "m");
  add("product", make_ring({"x", "y"}), "x*y", "m");
  add("complete intersection", make_ring({"x", "y"}), "x^2 + y^3, y^2", "m");
  add("J = (x)", make_ring({"x", "y"}), "y^2 + x*y", "x");
  add("dual numbers", make_ring({"x", "y"}, "x^2"), "y", "m");
  add("embedded point", make_ring({"x", "y", "z"}, "x*z, y*z, z^2"), "x, y", "m");
  return v;
}

Outcome soundness() {
  Outcome o;
  for (const auto& in : soundness_corpus()) {
    auto cert = certify_filter_regular(in.fs, in.J);
    if (!cert.filter_regular) {
      o.fail(in.name + ": not filter-regular");
      continue;
    }
    const int N = bound_main(in.fs, in.J).N;
    auto reps = verify_invariance(in.fs, in.J, N, kSoundnessTrials, kSoundnessSeed);
    std::size_t failed = 0;
    std::string first;
    for (const auto& r : reps)
      if (!r.passed()) {
        if (!failed++) first = "trial " + std::to_string(r.trial) + ": " + r.detail + (r.error ? " " + *r.error : "");
      }
    if (failed) o.fail(in.name + ": " + std::to_string(failed) + " failing trials, first " + first);
    std::cerr << "  soundness " << in.name << ": N=" << N << ", " << reps.size() - failed << "/" << reps.size()
              << " pass\n";
  }
  return o;
}

Outcome sharpness() {
  Outcome o;
  auto R = make_ring({"x", "y"}, "x*y, y^4");
  auto r = check_perturbation(polys(R, "x"), Ideal::maximal(R), 2, polys(R, "y^2"));
  expect(o, r.initial_ideal_equal == false, "xy_y4 with eps = y^2 kept in(I)");
  auto P = make_ring({"x", "y"});
  auto c = check_perturbation(polys(P, "x^2 - y^3"), Ideal::maximal(P), 2, polys(P, "y^2"));
  expect(o, c.initial_ideal_equal == false, "cusp with eps = y^2 kept in(I)");
  return o;
}

Outcome converse() {
  Outcome o;
  auto R = make_ring({"x", "y"}, "x^2, x*y");
  auto m = Ideal::maximal(R);
  auto fs = polys(R, "x");
  expect(o, !certify_filter_regular(fs, m).filter_regular, "(x) is filter-regular");
  for (int N = 1; N <= 6; ++N) {
    const std::string y = "y^" + std::to_string(N);
    auto fam = check_perturbation(fs, m, N, polys(R, y));
    expect(o, fam.initial_ideal_equal == false, "eps = " + y + " does not destabilize");
    auto w = search_destabilizing(fs, m, N, 20, 1);
    expect(o, w.has_value(), "no witness found at N = " + std::to_string(N));
  }
  return o;
}

Outcome quotient_lemmas() {
  Outcome o;
  std::mt19937_64 rng(7);
  for (int t = 0; t < kQuotientTriples; ++t) {
    auto tr = random_quotient_triple(rng, t % 3 == 2 ? 32003 : 0);
    auto a = quotient_rule(tr);
    if (!a.ok) o.fail("quotient rule: " + a.detail);
    auto b = artin_rees_descends(tr);
    if (!b.ok) o.fail("Artin-Rees descent: " + b.detail);
  }
  return o;
}

Outcome exchange() {
  Outcome o;
  std::mt19937_64 rng(11);
  for (int t = 0; t < kExchangePairs; ++t) {
    auto e = random_exchange_pair(rng, t % 3 == 2 ? 32003 : 0);
    auto r = exchange_agrees(e);
    if (!r.ok) o.fail(r.detail);
  }
  return o;
}

Outcome am_hs() {
  Outcome o;
  for (const auto& in : soundness_corpus()) {
    if (!is_m_primary(in.J, Ideal::zero(in.R))) continue;
    auto r = am_matches_hs(Ideal(in.R, in.fs), in.J, 6, 4);
    if (!r.ok) o.fail(in.name + ": " + r.detail);
  }
  auto P = make_ring({"x", "y"});
  auto r = am_matches_hs(ideal(P, "x^2 - y^3"), ideal(P, "x, y^2"), 8, 4);
  if (!r.ok) o.fail("cusp, J = (x, y^2): " + r.detail);
  auto jx = achilles_manaresi(Ideal::zero(P), ideal(P, "x"), 4, 4);
  for (const auto& row : jx.am_lengths)
    for (long l : row) expect(o, l == 1, "l(G_uv) != 1 for J = (x)");
  return o;
}

Outcome general_filtrations() {
  Outcome o;
  auto P = make_ring({"x", "y"});
  auto m = Ideal::maximal(P);
  const std::vector<Filtration> corpus = {Filtration::adic(m), Filtration::weighted(P, {3, 2}),
                                          Filtration::weighted(P, {1, 2}),
                                          Filtration::table(P, {polys(P, "x, y"), polys(P, "x^2, y")}),
                                          Filtration::from_order(P, MonomialOrder::deglex(2))};
  for (const auto& F : corpus) {
    const auto rd = rees_delta(F);
    expect(o, check_lemma_J1(F, rd.delta, 5).holds, "power containment fails for " + F.name());
  }
  // Both routes and the decomposition identity at c..c+2.
  const std::vector<std::string> ideals = {"x^2 - y^3", "x*y", "x + y^2"};
  for (std::size_t k = 0; k + 1 < corpus.size(); ++k)
    for (const auto& text : ideals) {
      auto r = artin_rees_filtration(ideal(P, text), corpus[k]);
      expect(o, r.rees_route == r.degreewise_route && r.decomposition_verified,
             "filtration Artin-Rees fails for " + text + " under " + corpus[k].name());
      for (int n = r.value; n <= r.value + 2; ++n)
        expect(o, decomposition_holds(ideal(P, text), corpus[k], r.value, n), "decomposition fails");
    }
  // Adic bridge: the filtration operations at F = adic(J) equal the adic ones.
  for (const auto& [ring, gens] : std::vector<std::pair<Ring, std::string>>{
           {make_ring({"x", "y"}, "x*y, y^4"), "x + y^2"}, {P, "x^2 - y^3"}, {P, "x, y"}}) {
    auto J = Ideal::maximal(ring);
    auto A = Filtration::adic(J);
    auto I = ideal(ring, gens);
    auto a = initial_ideal(I, J), b = initial_ideal_filtration(I, A);
    bool same = a.generators.size() == b.generators.size() && a.top_degree == b.top_degree;
    for (std::size_t i = 0; same && i < a.generators.size(); ++i)
      same = a.generators[i].degree == b.generators[i].degree &&
             a.generators[i].representative == b.generators[i].representative;
    expect(o, same, "adic bridge: initial ideals differ for " + gens);
    expect(o, artin_rees_filtration(I, A).value == artin_rees_number(I, J), "adic bridge: ar differs");
    auto fs = polys(ring, gens);
    if (certify_filter_regular(fs, J).filter_regular) {
      auto fb = bound_filtration(fs, A);
      expect(o, fb.adic_main_N == bound_main(fs, J).N, "adic bridge: bound differs");
    }
  }
  // Jet pipeline.
  auto order = MonomialOrder::deglex(2);
  for (const std::string fam : {"x^2 - y^3", "x^2 - y^3 + y^5", "x^2 - y^3 + x*y^4", "x + y^7, y + x^7"}) {
    auto rep = jet_pipeline(P, polys(P, fam), order, 2, 8);
    expect(o, rep.passed(), "jet pipeline fails for " + fam);
  }
  return o;
}

Outcome determinism_and_fuzz() {
  Outcome o;
  const auto corpus = corpus_scripts(NORMALCONE_SCRIPTS_DIR);
  RunOptions opt;
  opt.seed = 7;
  opt.trials = 10;
  for (const auto& text : corpus) {
    for (auto fmt : {ReportFormat::Json, ReportFormat::Text}) {
      opt.format = fmt;
      expect(o, run_script(text, opt).report == run_script(text, opt).report, "report not byte-identical");
    }
  }
  std::mt19937_64 rng(1);
  for (int t = 0; t < kFuzzCases; ++t) {
    const auto input = fuzz_case(corpus, rng);
    try {
      script::parse(input);
    } catch (const script::ScriptError& e) {
      if (e.diagnostic().pos.line < 1 || e.diagnostic().pos.column < 1) o.fail("diagnostic without position");
    } catch (const std::exception& e) {
      o.fail(std::string("parser threw ") + e.what());
    }
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "k[x,y]/(xy, y^4) regression", xy_ring},
      {2, "embedded-point regression (n = 2, 3)", embedded_point},
      {3, "Rees route equals degreewise route", cross_algorithm},
      {4, "perturbation soundness sweep", soundness},
      {5, "sharpness below the bound", sharpness},
      {6, "converse without filter-regularity", converse},
      {7, "quotient rule and Artin-Rees descent", quotient_lemmas},
      {8, "colon exchange", exchange},
      {9, "AM/HS consistency", am_hs},
      {10, "general filtrations", general_filtrations},
      {11, "determinism and parser robustness", determinism_and_fuzz},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("criterion %2d: %s  %s%s%s\n", c.id, o.ok ? "PASS" : "FAIL", c.title.c_str(),
                o.ok ? "" : "  ", o.detail.c_str());
    std::fflush(stdout);
    std::cerr << "  (criterion " << c.id << " took " << dt << " s)\n";
    failed += !o.ok;
  }
  return failed ? 1 : 0;
}
