#include "normalcone/perturbation.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>
#include <thread>

#include "normalcone/errors.hpp"
#include "parallel.hpp"

namespace normalcone {

namespace {

using detail::parallel_for;

std::vector<Polynomial> perturbed(const std::vector<Polynomial>& fs, const std::vector<Polynomial>& eps) {
  std::vector<Polynomial> out = fs;
  for (std::size_t i = 0; i < fs.size() && i < eps.size(); ++i) out[i] += eps[i];
  return out;
}

/// f_i + eps_i, written with the representative modulo K of least support.
std::vector<Polynomial> perturbed(const Ring& R, const std::vector<Polynomial>& fs, const std::vector<Polynomial>& eps) {
  std::vector<Polynomial> out = perturbed(fs, eps);
  for (auto& f : out) {
    Polynomial r = R->reduce(f);
    if (r.size() < f.size()) f = std::move(r);
  }
  return out;
}

std::vector<Polynomial> prefix(const std::vector<Polynomial>& fs, std::size_t n) {
  return {fs.begin(), fs.begin() + static_cast<long>(n)};
}

/// Everything verify_invariance compares against, computed once.
struct Baseline {
  Ideal I;
  FilterRegularCertificate cert;
  InitialIdeal in;
  bool m_primary = false;
  int hs_window = 0;
  std::vector<long> hs;
  std::vector<long> lengths;
  std::vector<std::vector<long>> am;
};

Baseline make_baseline(const std::vector<Polynomial>& fs, const Ideal& J, int N, const PerturbationOptions& opt) {
  const Ring& R = J.ring();
  Baseline b;
  b.I = Ideal(R, fs);
  b.cert = certify_filter_regular(fs, J);
  b.in = initial_ideal(b.I, J);
  b.m_primary = is_m_primary(J, Ideal::zero(R));
  b.hs_window = opt.hs_window.value_or(std::max(N, b.in.top_degree) + 2);
  if (b.m_primary) {
    b.hs = hilbert_samuel(b.I, J, b.hs_window).hs;
    NumericalFunctionTable t;
    t.hs = b.hs;
    b.lengths = graded_lengths(t);
  }
  if (opt.am_window >= 0) b.am = achilles_manaresi(b.I, J, opt.am_window, opt.am_window).am_lengths;
  return b;
}

PerturbationReport run_check(const std::vector<Polynomial>& fs, const Ideal& J, int N,
                             const std::vector<Polynomial>& eps, const Baseline& b, const PerturbationOptions& opt) {
  const Ring& R = J.ring();
  PerturbationReport rep;
  rep.N = N;
  rep.eps = eps;
  auto fail = [&](const std::string& what) {
    if (rep.detail.empty()) rep.detail = what;
  };
  try {
    const auto fp = perturbed(R, fs, eps);
    Ideal Ip(R, fp);

    auto cert = certify_filter_regular(fp, J);
    rep.a_perturbed = cert.a;
    if (b.cert.filter_regular) {
      bool ok = cert.filter_regular;
      for (std::size_t i = 0; ok && i < fs.size(); ++i)
        if (*cert.a[i] > (1 << i) * *b.cert.a[i]) ok = false;
      rep.filter_regular_preserved = ok;
      if (!ok) fail("filter-regularity or a_i bound");
    }

    InitialIdeal in = initial_ideal(Ip, J);
    rep.initial_ideal_equal = initial_ideals_equal(b.in, in);
    if (!*rep.initial_ideal_equal) fail("initial ideal");
    rep.artin_rees_equal = in.top_degree == b.in.top_degree;
    if (!*rep.artin_rees_equal) fail("Artin-Rees number");

    if (b.m_primary) {
      auto hs = hilbert_samuel(Ip, J, b.hs_window);
      rep.hilbert_equal = hs.hs == b.hs;
      if (!*rep.hilbert_equal) fail("Hilbert-Samuel function");
      if (N >= b.in.top_degree + 1) {
        auto lengths = graded_lengths(hs);
        bool dom = true;
        for (std::size_t n = 0; n < lengths.size(); ++n)
          if (b.lengths[n] < lengths[n]) dom = false;
        rep.graded_lengths_dominated = dom;
        if (!dom) fail("graded length inequality");
      }
    }
    if (opt.am_window >= 0) {
      rep.am_equal = achilles_manaresi(Ip, J, opt.am_window, opt.am_window).am_lengths == b.am;
      if (!*rep.am_equal) fail("Achilles-Manaresi window");
    }
  } catch (const TruncationCapExceeded& e) {
    rep.error = e.what();
  } catch (const ResourceExceeded& e) {
    rep.error = e.what();
  }
  return rep;
}

std::uint64_t mix(std::uint64_t seed, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
  std::uint32_t out[2];
  seq.generate(out, out + 2);
  return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

}  // namespace

FilterRegularCertificate certify_filter_regular(const std::vector<Polynomial>& fs, const Ideal& J) {
  const Ring& R = J.ring();
  FilterRegularCertificate c;
  c.sequence = fs;
  c.filter_regular = true;
  const int n = static_cast<int>(R->nvars());
  for (std::size_t i = 0; i < fs.size(); ++i) {
    // P_loc is Cohen-Macaulay: f_1..f_{i+1} is regular iff the dimension
    // drops by one per element, and then a_{i+1} = 0 without a colon.
    std::optional<int> a;
    if (!R->is_quotient() && krull_dimension(Ideal(R, prefix(fs, i + 1))) == n - static_cast<int>(i) - 1 &&
        (i == 0 || c.a.back() == 0))
      a = 0;
    else
      a = a_index(Ideal(R, prefix(fs, i)), fs[i], J);
    c.a.push_back(a);
    if (!a) {
      c.filter_regular = false;
      c.first_failure = i;
      break;
    }
  }
  return c;
}

std::string to_string(BoundFormula f) {
  switch (f) {
    case BoundFormula::Main: return "main";
    case BoundFormula::Regular: return "regular";
    case BoundFormula::Filtration: return "filtration";
    case BoundFormula::Hilbert: return "hilbert";
  }
  return "?";
}

BoundCertificate bound_main(const std::vector<Polynomial>& fs, const Ideal& J) {
  if (fs.empty()) throw PreconditionError("bound_main needs a nonempty sequence");
  auto cert = certify_filter_regular(fs, J);
  if (!cert.filter_regular)
    throw PreconditionError("sequence is not filter-regular (index " + std::to_string(*cert.first_failure + 1) + ")");
  BoundCertificate b;
  b.formula = BoundFormula::Main;
  int weighted = 0;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    b.a.push_back(*cert.a[i]);
    weighted += (1 << i) * *cert.a[i];
  }
  int m = weighted;
  for (std::size_t i = 1; i <= fs.size(); ++i) {
    b.ar.push_back(artin_rees_number(Ideal(J.ring(), prefix(fs, i)), J));
    m = std::max(m, b.ar.back());
  }
  b.N = m + 1;
  if (fs.size() == 1) b.single_c = std::max(b.a[0], b.ar[0] + 1);
  if (fs.size() == 2) b.single_c = std::max({b.a[0] + b.a[1], b.ar[0], b.ar[1]}) + 1;
  return b;
}

BoundCertificate bound_regular(const std::vector<Polynomial>& fs, const Ideal& J) {
  if (fs.empty()) throw PreconditionError("bound_regular needs a nonempty sequence");
  auto cert = certify_filter_regular(fs, J);
  for (std::size_t i = 0; i < fs.size(); ++i)
    if (!cert.filter_regular || *cert.a[i] != 0)
      throw PreconditionError("sequence is not regular (index " + std::to_string(i + 1) + ")");
  BoundCertificate b;
  b.formula = BoundFormula::Regular;
  b.a.assign(fs.size(), 0);
  for (std::size_t i = 1; i <= fs.size(); ++i) b.ar.push_back(artin_rees_number(Ideal(J.ring(), prefix(fs, i)), J));
  b.N = b.ar.back() + 1;
  return b;
}

BoundCertificate bound_via_hilbert(const std::vector<Polynomial>& fs, const Ideal& J, int p) {
  if (!is_m_primary(J, Ideal::zero(J.ring()))) throw PreconditionError("bound_via_hilbert needs an m-primary J");
  if (p < 1) throw PreconditionError("Hilbert perturbation index must be positive");
  BoundCertificate b;
  b.formula = BoundFormula::Hilbert;
  b.p = p;
  b.ar.push_back(artin_rees_number(Ideal(J.ring(), fs), J));
  b.N = std::max(p, b.ar.back() + 1);
  return b;
}

std::vector<Polynomial> perturbation_basis(const Ideal& J, int N, int degree_cap) {
  const Ring& R = J.ring();
  if (N < 1) throw PreconditionError("perturbation level must be at least 1");
  int min_deg = -1;
  for (const auto& g : J.gens()) min_deg = min_deg < 0 ? g.low_degree() : std::min(min_deg, g.low_degree());
  if (min_deg < 0) throw PreconditionError("perturbation from the zero ideal");
  if (degree_cap < N * min_deg) throw PreconditionError("degree cap below N times the least degree of J");
  std::vector<Polynomial> out;
  for (const auto& g : J.power_generators(N))
    for (int d = 0; d + g.degree() <= degree_cap; ++d)
      for (const auto& m : monomials_of_degree(R->nvars(), d)) {
        Polynomial p = g.times(m, R->field().one());
        if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(std::move(p));
      }
  return out;
}

std::vector<Polynomial> sample_trial(const std::vector<Polynomial>& basis, std::size_t r, std::uint64_t seed,
                                     std::uint64_t trial) {
  std::vector<Polynomial> eps;
  if (basis.empty()) return eps;
  const Field& F = basis.front().field();
  const std::size_t n = basis.front().nvars();
  if (trial == 0) return std::vector<Polynomial>(r, Polynomial(F, n));
  std::mt19937_64 rng(mix(seed, trial));
  for (std::size_t i = 0; i < r; ++i) {
    Polynomial e(F, n);
    for (const auto& b : basis) {
      const long c = static_cast<long>(rng() % 5) - 2;
      if (c != 0) e += b.scaled(F.from_int(c));
    }
    eps.push_back(std::move(e));
  }
  return eps;
}

std::vector<std::vector<Polynomial>> sample_perturbation(const Ideal& J, int N, std::size_t r, std::size_t count,
                                                         std::uint64_t seed, std::optional<int> degree_cap) {
  auto basis = perturbation_basis(J, N, degree_cap.value_or(N + 3));
  std::vector<std::vector<Polynomial>> out;
  for (std::size_t t = 0; t < count; ++t) out.push_back(sample_trial(basis, r, seed, t));
  return out;
}

bool PerturbationReport::passed() const {
  if (error) return false;
  for (const auto& o : {filter_regular_preserved, initial_ideal_equal, artin_rees_equal, hilbert_equal,
                        graded_lengths_dominated, am_equal})
    if (o && !*o) return false;
  return true;
}

unsigned default_threads() {
  if (const char* env = std::getenv("NORMALCONE_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<PerturbationReport> verify_invariance(const std::vector<Polynomial>& fs, const Ideal& J, int N,
                                                  std::size_t trials, std::uint64_t seed,
                                                  const PerturbationOptions& options) {
  const Baseline b = make_baseline(fs, J, N, options);
  const auto basis = perturbation_basis(J, N, options.degree_cap.value_or(N + 3));
  std::vector<PerturbationReport> reports(trials);
  parallel_for(trials, options.threads ? options.threads : default_threads(), [&](std::size_t t) {
    auto eps = sample_trial(basis, fs.size(), seed, t);
    if (options.single_index)
      for (std::size_t i = 0; i < eps.size(); ++i)
        if (i != *options.single_index) eps[i] = Polynomial(eps[i].field(), eps[i].nvars());
    reports[t] = run_check(fs, J, N, eps, b, options);
    reports[t].seed = seed;
    reports[t].trial = t;
  });
  return reports;
}

PerturbationReport check_perturbation(const std::vector<Polynomial>& fs, const Ideal& J, int N,
                                      const std::vector<Polynomial>& eps, const PerturbationOptions& options) {
  return run_check(fs, J, N, eps, make_baseline(fs, J, N, options), options);
}

std::optional<DestabilizingWitness> search_destabilizing(const std::vector<Polynomial>& fs, const Ideal& J, int N,
                                                         std::size_t trials, std::uint64_t seed) {
  const Ring& R = J.ring();
  const std::size_t r = fs.size();
  std::vector<InitialIdeal> base;
  for (std::size_t i = 1; i <= r; ++i) base.push_back(initial_ideal(Ideal(R, prefix(fs, i)), J));

  // Structured candidates: single generators of J^N at each position, then
  // generators of J^N times colon witnesses outside the saturation.
  std::vector<std::vector<Polynomial>> cands;
  const auto& gN = J.power_generators(N);
  const Polynomial zero = R->zero();
  for (std::size_t i = 0; i < r; ++i)
    for (const auto& g : gN) {
      std::vector<Polynomial> e(r, zero);
      e[i] = g;
      cands.push_back(std::move(e));
    }
  for (std::size_t i = 0; i < r; ++i) {
    Ideal A(R, prefix(fs, i));
    Ideal colon = ideal_quotient(A, fs[i]);
    Ideal sat = saturation(A, J);
    for (const auto& w : colon.gens()) {
      if (sat.contains(w)) continue;
      for (const auto& g : gN) {
        std::vector<Polynomial> e(r, zero);
        e[i] = g * w;
        cands.push_back(std::move(e));
      }
    }
  }
  const std::size_t structured = cands.size();
  const auto basis = perturbation_basis(J, N, N + 3);
  for (std::size_t t = 1; t <= trials; ++t) cands.push_back(sample_trial(basis, r, seed, t));

  for (std::size_t c = 0; c < cands.size(); ++c) {
    const auto fp = perturbed(R, fs, cands[c]);
    for (std::size_t i = 0; i < r; ++i) {
      InitialIdeal in = initial_ideal(Ideal(R, prefix(fp, i + 1)), J);
      auto diff = first_difference(base[i], in, std::max(base[i].top_degree, in.top_degree));
      if (diff) return DestabilizingWitness{cands[c], i, *diff, c, c < structured};
    }
  }
  return std::nullopt;
}

HilbertIndexEstimate estimate_hilbert_index(const std::vector<Polynomial>& fs, const Ideal& J, int n_window,
                                            std::size_t trials, std::uint64_t seed) {
  const Ring& R = J.ring();
  if (!is_m_primary(J, Ideal::zero(R))) throw PreconditionError("estimate_hilbert_index needs an m-primary J");
  const std::size_t r = fs.size();
  const auto base = hilbert_samuel(Ideal(R, fs), J, n_window).hs;
  HilbertIndexEstimate est;
  if (trials == 0) return est;
  for (int level = 1; level <= n_window; ++level) {
    std::vector<std::vector<Polynomial>> cands;
    for (std::size_t i = 0; i < r; ++i)
      for (const auto& g : J.power_generators(level)) {
        std::vector<Polynomial> e(r, R->zero());
        e[i] = g;
        cands.push_back(std::move(e));
      }
    const auto basis = perturbation_basis(J, level, level + 3);
    for (std::size_t t = 1; t <= trials; ++t) cands.push_back(sample_trial(basis, r, seed + level, t));
    for (const auto& eps : cands) {
      const auto hs = hilbert_samuel(Ideal(R, perturbed(R, fs, eps)), J, n_window).hs;
      if (hs == base) continue;
      est.changed_level = level;
      est.witness = eps;
      for (std::size_t n = 0; n < hs.size(); ++n)
        if (hs[n] != base[n]) {
          est.first_differing_index = static_cast<int>(n);
          break;
        }
      break;
    }
  }
  if (est.changed_level) est.p_hat = *est.changed_level + 1;
  return est;
}

}  // namespace normalcone
