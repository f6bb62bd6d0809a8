#include "normalcone/filtration.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "normalcone/errors.hpp"
#include "parallel.hpp"

namespace normalcone {

namespace {

using detail::parallel_for;

std::vector<Polynomial> prefix(const std::vector<Polynomial>& fs, std::size_t n) {
  return {fs.begin(), fs.begin() + static_cast<long>(n)};
}

std::vector<Polynomial> concat(std::vector<Polynomial> a, const std::vector<Polynomial>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

bool is_monomial(const Polynomial& f) { return f.size() == 1; }

bool all_monomial(const std::vector<Polynomial>& v) { return std::all_of(v.begin(), v.end(), is_monomial); }

long weight_of(const Monomial& m, const std::vector<int>& w) {
  long s = 0;
  for (std::size_t i = 0; i < w.size(); ++i) s += long(w[i]) * m[i];
  return s;
}

/// All monomials of w-degree exactly v (w_i >= 1).
std::vector<Monomial> monomials_of_weight(const std::vector<int>& w, long v) {
  std::vector<Monomial> out;
  Monomial cur(w.size());
  auto rec = [&](auto&& self, std::size_t i, long rest) -> void {
    if (i + 1 == w.size()) {
      if (rest % w[i] == 0) {
        cur.set(i, rest / w[i]);
        out.push_back(cur);
        cur.set(i, 0);
      }
      return;
    }
    for (long e = 0; e * w[i] <= rest; ++e) {
      cur.set(i, e);
      self(self, i + 1, rest - e * w[i]);
    }
    cur.set(i, 0);
  };
  if (w.empty()) {
    if (v == 0) out.push_back(cur);
    return out;
  }
  rec(rec, 0, v);
  return out;
}

std::vector<Polynomial> as_polynomials(const Ring& R, const std::vector<Monomial>& ms) {
  std::vector<Polynomial> out;
  out.reserve(ms.size());
  for (const auto& m : ms) out.push_back(R->monomial(m));
  return out;
}

/// Monic copies without zeros or duplicates; monomial sets are minimalized.
std::vector<Polynomial> tidy(const Ring& R, const std::vector<Polynomial>& v) {
  if (all_monomial(v)) {
    std::vector<Monomial> ms;
    for (const auto& g : v) ms.push_back(g.terms().front().mono);
    return as_polynomials(R, minimalize_monomials(std::move(ms)));
  }
  std::vector<Polynomial> out;
  for (const auto& g : v) {
    if (g.is_zero()) continue;
    Polynomial m = g.monic();
    if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(std::move(m));
  }
  return out;
}

std::vector<Polynomial> products(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b) {
  std::vector<Polynomial> out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a)
    for (const auto& y : b) out.push_back(x * y);
  return out;
}

/// f in (gens) in R. Monomial generators without relations are decided
/// termwise; otherwise by a standard basis.
bool contained(const Ring& R, const Polynomial& f, const std::vector<Polynomial>& gens) {
  if (f.is_zero()) return true;
  if (all_monomial(gens)) {
    bool every = true;
    for (const auto& t : f.terms()) {
      bool hit = false;
      for (const auto& g : gens)
        if (g.terms().front().mono.divides(t.mono)) {
          hit = true;
          break;
        }
      if (!hit) {
        every = false;
        break;
      }
    }
    if (every) return true;
    if (!R->is_quotient()) return false;
  }
  return Ideal(R, gens).contains(f);
}

bool contained(const Ring& R, const std::vector<Polynomial>& fs, const std::vector<Polynomial>& gens) {
  if (all_monomial(gens) && !R->is_quotient()) {
    for (const auto& f : fs)
      if (!contained(R, f, gens)) return false;
    return true;
  }
  Ideal big(R, gens);
  for (const auto& f : fs)
    if (!big.contains(f)) return false;
  return true;
}

/// Candidates independent modulo base, greedily, then a removal pass.
std::vector<Polynomial> fresh_picks(const Ring& R, const std::vector<Polynomial>& base,
                                    const std::vector<Polynomial>& candidates) {
  std::vector<Polynomial> picks;
  for (const auto& c : candidates)
    if (!contained(R, c, concat(base, picks))) picks.push_back(c);
  for (std::size_t k = picks.size(); k-- > 0;) {
    std::vector<Polynomial> others = base;
    for (std::size_t j = 0; j < picks.size(); ++j)
      if (j != k) others.push_back(picks[j]);
    if (contained(R, picks[k], others)) picks.erase(picks.begin() + static_cast<long>(k));
  }
  return picks;
}

bool multivariate_order(const Filtration& F) {
  return F.kind() == Filtration::Kind::OrderInduced && F.ring()->nvars() >= 2;
}

void require_same_ring(const Ideal& I, const Filtration& F) {
  if (!I.ring()->same_ambient(*F.ring())) throw PreconditionError("ideal and filtration live in different rings");
}

std::vector<Monomial> sorted_by(std::vector<Monomial> ms, const MonomialOrder& order) {
  std::sort(ms.begin(), ms.end(),
            [&](const Monomial& a, const Monomial& b) { return order.compare(a, b) == Ordering::LT; });
  return ms;
}

}  // namespace

struct Filtration::State {
  Kind kind = Kind::Adic;
  Ring R;
  int cap = kDefaultCap;
  Ideal J;
  std::optional<MonomialOrder> order;
  std::vector<int> w;  // weights, or the order's leading weight row
  std::vector<std::vector<Polynomial>> table;

  std::recursive_mutex mu;
  std::map<int, Ideal> levels;
  std::vector<Monomial> enumeration;
  long enumerated_weight = -1;

  int max_weight() const { return w.empty() ? 1 : *std::max_element(w.begin(), w.end()); }

  void enumerate_through(long v) {
    while (enumerated_weight < v) {
      ++enumerated_weight;
      auto stratum = sorted_by(monomials_of_weight(w, enumerated_weight), *order);
      enumeration.insert(enumeration.end(), stratum.begin(), stratum.end());
    }
  }

  void enumerate_count(std::size_t count) {
    while (enumeration.size() < count) enumerate_through(enumerated_weight + 1);
  }

  std::vector<Polynomial> compute(int n) {
    if (n == 0) return {R->one()};
    switch (kind) {
      case Kind::Adic: return J.power_generators(n);
      case Kind::Weighted: {
        std::vector<Monomial> ms;
        for (long v = n; v < n + max_weight(); ++v) {
          auto s = monomials_of_weight(w, v);
          ms.insert(ms.end(), s.begin(), s.end());
        }
        return as_polynomials(R, minimalize_monomials(std::move(ms)));
      }
      case Kind::OrderInduced: {
        enumerate_count(static_cast<std::size_t>(n) + 1);
        const long v0 = weight_of(enumeration[n], w);
        enumerate_through(v0 + max_weight());
        std::vector<Monomial> ms;
        for (std::size_t k = static_cast<std::size_t>(n); k < enumeration.size(); ++k) {
          if (weight_of(enumeration[k], w) > v0 + max_weight()) break;
          ms.push_back(enumeration[k]);
        }
        return as_polynomials(R, minimalize_monomials(std::move(ms)));
      }
      case Kind::Table: {
        const int c = static_cast<int>(table.size());
        if (n <= c) return tidy(R, table[n - 1]);
        std::vector<Polynomial> gens;
        for (int i = 1; i <= c; ++i) {
          auto p = products(get(i).gens(), get(n - i).gens());
          gens.insert(gens.end(), p.begin(), p.end());
        }
        gens = tidy(R, gens);
        if (!all_monomial(gens)) gens = fresh_picks(R, {}, gens);
        return gens;
      }
    }
    return {};
  }

  const Ideal& get(int n) {
    if (n < 0) throw PreconditionError("filtration index must be nonnegative");
    if (n > cap) throw TruncationCapExceeded("filtration level " + std::to_string(n) + " exceeds cap " +
                                            std::to_string(cap));
    std::lock_guard<std::recursive_mutex> lock(mu);
    auto it = levels.find(n);
    if (it != levels.end()) return it->second;
    auto gens = compute(n);
    return levels.emplace(n, Ideal(R, std::move(gens))).first->second;
  }
};

Filtration Filtration::adic(const Ideal& J, int cap) {
  if (J.gens().empty()) throw PreconditionError("adic filtration of the zero ideal");
  Filtration F;
  F.st_ = std::make_shared<State>();
  F.st_->kind = Kind::Adic;
  F.st_->R = J.ring();
  F.st_->cap = cap;
  F.st_->J = J;
  return F;
}

Filtration Filtration::from_order(const Ring& R, const MonomialOrder& order, int cap) {
  if (order.nvars() != R->nvars()) throw PreconditionError("order and ring have different variable counts");
  if (!order.noetherian()) throw PreconditionError("filtration from a non-Noetherian order (" + order.name() + ")");
  auto w = order.positive_weight();
  if (!w) throw PreconditionError("Noetherian order without a positive leading weight");
  Filtration F;
  F.st_ = std::make_shared<State>();
  F.st_->kind = Kind::OrderInduced;
  F.st_->R = R;
  F.st_->cap = cap;
  F.st_->order = order;
  F.st_->w = *w;
  return F;
}

Filtration Filtration::weighted(const Ring& R, std::vector<int> w, int cap) {
  if (w.size() != R->nvars()) throw PreconditionError("weight vector and ring have different variable counts");
  if (std::any_of(w.begin(), w.end(), [](int v) { return v < 1; }))
    throw PreconditionError("filtration weights must be positive");
  Filtration F;
  F.st_ = std::make_shared<State>();
  F.st_->kind = Kind::Weighted;
  F.st_->R = R;
  F.st_->cap = cap;
  F.st_->w = std::move(w);
  return F;
}

Filtration Filtration::table(const Ring& R, std::vector<std::vector<Polynomial>> levels, int cap) {
  if (levels.empty()) throw PreconditionError("table filtration needs J_1");
  for (const auto& lv : levels)
    for (const auto& g : lv)
      if (g.nvars() != R->nvars()) throw PreconditionError("table generator has the wrong variable count");
  Filtration F;
  F.st_ = std::make_shared<State>();
  F.st_->kind = Kind::Table;
  F.st_->R = R;
  F.st_->cap = std::max(cap, static_cast<int>(levels.size()));
  F.st_->table = std::move(levels);
  auto ax = check_axioms(F, std::min(F.st_->cap, 6));
  if (!ax.ok()) throw PreconditionError("table filtration violates the axioms: " + ax.detail);
  return F;
}

Filtration::Kind Filtration::kind() const { return st_->kind; }
const Ring& Filtration::ring() const { return st_->R; }
int Filtration::cap() const { return st_->cap; }

std::string Filtration::name() const {
  switch (st_->kind) {
    case Kind::Adic: return "adic(" + st_->J.to_string() + ")";
    case Kind::OrderInduced: return "order(" + st_->order->name() + ")";
    case Kind::Weighted: {
      std::string s = "weighted(";
      for (std::size_t i = 0; i < st_->w.size(); ++i) s += (i ? "," : "") + std::to_string(st_->w[i]);
      return s + ")";
    }
    case Kind::Table: return "table(c=" + std::to_string(st_->table.size()) + ")";
  }
  return "?";
}

const std::vector<Polynomial>& Filtration::level_generators(int n) const { return st_->get(n).gens(); }
const Ideal& Filtration::level(int n) const { return st_->get(n); }

LevelFn Filtration::level_fn() const {
  auto st = st_;
  return [st](int n) { return st->get(n).gens(); };
}

const Ideal& Filtration::adic_ideal() const {
  if (st_->kind != Kind::Adic) throw PreconditionError("not an adic filtration");
  return st_->J;
}

const MonomialOrder& Filtration::order() const {
  if (st_->kind != Kind::OrderInduced) throw PreconditionError("not an order-induced filtration");
  return *st_->order;
}

std::vector<Monomial> Filtration::enumeration(int count) const {
  order();
  std::lock_guard<std::recursive_mutex> lock(st_->mu);
  st_->enumerate_count(static_cast<std::size_t>(count));
  return {st_->enumeration.begin(), st_->enumeration.begin() + count};
}

int Filtration::position(const Monomial& m) const {
  const MonomialOrder& ord = order();
  std::lock_guard<std::recursive_mutex> lock(st_->mu);
  st_->enumerate_through(weight_of(m, st_->w));
  auto& e = st_->enumeration;
  auto it = std::lower_bound(e.begin(), e.end(), m,
                             [&](const Monomial& a, const Monomial& b) { return ord.compare(a, b) == Ordering::LT; });
  if (it == e.end() || *it != m) throw InternalInconsistency("monomial missing from the enumeration");
  return static_cast<int>(it - e.begin());
}

int Filtration::table_length() const {
  if (st_->kind != Kind::Table) throw PreconditionError("not a table filtration");
  return static_cast<int>(st_->table.size());
}

const std::vector<int>& Filtration::weights() const {
  if (st_->kind != Kind::Weighted) throw PreconditionError("not a weighted filtration");
  return st_->w;
}

bool Filtration::noetherian_by_construction() const { return !multivariate_order(*this); }

FiltrationAxioms check_axioms(const Filtration& F, int upto) {
  const Ring& R = F.ring();
  upto = std::min(upto, F.cap());
  FiltrationAxioms ax;
  ax.checked_through = upto;
  ax.unit_level0 = contained(R, R->one(), F.level_generators(0));
  if (!ax.unit_level0) ax.detail = "J_0 is not the unit ideal";
  ax.decreasing = true;
  for (int n = 0; n < upto && ax.decreasing; ++n)
    if (!contained(R, F.level_generators(n + 1), F.level_generators(n))) {
      ax.decreasing = false;
      if (ax.detail.empty()) ax.detail = "J_" + std::to_string(n + 1) + " not in J_" + std::to_string(n);
    }
  ax.multiplicative = true;
  for (int m = 1; m <= upto && ax.multiplicative; ++m)
    for (int n = m; n <= upto && m + n <= F.cap() && ax.multiplicative; ++n)
      if (!contained(R, products(F.level_generators(m), F.level_generators(n)), F.level_generators(m + n))) {
        ax.multiplicative = false;
        if (ax.detail.empty())
          ax.detail = "J_" + std::to_string(m) + " J_" + std::to_string(n) + " not in J_" + std::to_string(m + n);
      }
  return ax;
}

std::string to_string(DeltaStatus s) { return s == DeltaStatus::Certified ? "certified" : "heuristic"; }

ReesDelta rees_delta(const Filtration& F, int cap) {
  const Ring& R = F.ring();
  // Degrees beyond which no fresh generator can appear, when known.
  std::optional<int> bound;
  switch (F.kind()) {
    case Filtration::Kind::Adic: bound = 1; break;
    case Filtration::Kind::Weighted: bound = *std::max_element(F.weights().begin(), F.weights().end()); break;
    case Filtration::Kind::Table: bound = F.table_length(); break;
    case Filtration::Kind::OrderInduced:
      if (R->nvars() <= 1) bound = 1;
      break;
  }
  ReesDelta out;
  const int through = std::min(F.cap(), std::max(cap, bound.value_or(0)));
  for (int n = 1; n <= through; ++n) {
    std::vector<Polynomial> lower;
    for (int i = 1; 2 * i <= n; ++i) {
      auto p = products(F.level_generators(i), F.level_generators(n - i));
      lower.insert(lower.end(), p.begin(), p.end());
    }
    lower = tidy(R, lower);
    auto fresh = fresh_picks(R, lower, F.level_generators(n));
    if (!fresh.empty()) {
      out.delta = n;
      out.fresh_degrees.push_back(n);
      for (auto& g : fresh) out.generators.push_back({std::move(g), n});
    }
  }
  out.checked_through = through;
  const int quiet = (through + 1) / 2;
  const bool window_quiet = out.delta <= through - quiet;
  if (multivariate_order(F))
    out.status = DeltaStatus::Heuristic;
  else if (bound || window_quiet)
    out.status = DeltaStatus::Certified;
  return out;
}

LemmaJ1Check check_lemma_J1(const Filtration& F, int delta, int n_max) {
  const Ring& R = F.ring();
  LemmaJ1Check out;
  const Ideal& J1 = F.level(1);
  for (int n = 0; n <= n_max; ++n) {
    const auto& big = F.level_generators(n * delta);
    const std::vector<Polynomial> power = n == 0 ? std::vector<Polynomial>{R->one()} : J1.power_generators(n);
    out.checked_through = n;
    if (!contained(R, big, power)) {
      out.holds = false;
      out.first_failure = n;
      break;
    }
  }
  return out;
}

int weighted_initial_degree(const Ideal& I, const std::vector<int>& w) {
  const Ring& R = I.ring();
  if (w.size() != R->nvars()) throw PreconditionError("weight vector and ring have different variable counts");
  const TermOrder local = TermOrder::local_weighted(w);
  const TermOrder grevlex = TermOrder::degrevlex(R->nvars());
  std::vector<std::vector<int>> rows{w};
  rows.insert(rows.end(), grevlex.rows().begin(), grevlex.rows().end());
  const TermOrder graded(R->nvars(), rows);
  auto lowest = [&](const Polynomial& f) {
    long lo = -1;
    for (const auto& t : f.terms()) {
      const long v = weight_of(t.mono, w);
      lo = lo < 0 ? v : std::min(lo, v);
    }
    std::vector<Term> ts;
    for (const auto& t : f.terms())
      if (weight_of(t.mono, w) == lo) ts.push_back(t);
    return std::pair<Polynomial, long>{Polynomial::from_terms(R->field(), R->nvars(), std::move(ts)), lo};
  };
  std::vector<Polynomial> base;
  if (R->is_quotient()) {
    const auto sk = StandardBasis::compute(R->relations(), local);
    for (const auto& g : sk.elements()) base.push_back(lowest(g).first);
  }
  std::vector<std::pair<Polynomial, long>> cands;
  const auto si = StandardBasis::compute(I.cover_generators(), local);
  for (const auto& g : si.elements()) cands.push_back(lowest(g));
  std::stable_sort(cands.begin(), cands.end(), [](const auto& a, const auto& b) { return a.second < b.second; });
  auto member = [&](const std::vector<std::size_t>& idx, const Polynomial& f) {
    std::vector<Polynomial> gens = base;
    for (auto k : idx) gens.push_back(cands[k].first);
    return StandardBasis::compute(gens, graded).contains(f);
  };
  std::vector<std::size_t> kept;
  for (std::size_t k = 0; k < cands.size(); ++k)
    if (!member(kept, cands[k].first)) kept.push_back(k);
  for (std::size_t a = kept.size(); a-- > 0;) {
    std::vector<std::size_t> others;
    for (std::size_t b = 0; b < kept.size(); ++b)
      if (b != a) others.push_back(kept[b]);
    if (member(others, cands[kept[a]].first)) kept.erase(kept.begin() + static_cast<long>(a));
  }
  long top = 0;
  for (auto k : kept) top = std::max(top, cands[k].second);
  return static_cast<int>(top);
}

std::vector<Monomial> monomial_initial_ideal(const Ideal& I, const MonomialOrder& order) {
  if (!order.noetherian()) throw PreconditionError("monomial initial ideal needs a Noetherian order");
  const auto sb = StandardBasis::compute(I.cover_generators(), order.engine_order());
  return sorted_by(minimalize_monomials(sb.leading_monomials()), order);
}

namespace {

/// in_<(I) with generator degrees given by enumeration positions.
InitialIdeal monomial_route(const Ideal& I, const Filtration& F) {
  const Ring& R = I.ring();
  InitialIdeal out;
  out.ideal = I;
  out.filtration = F.level(1);
  out.level = F.level_fn();
  out.method = "monomial-order";
  const auto sb = StandardBasis::compute(I.cover_generators(), F.order().engine_order());
  for (const auto& m : monomial_initial_ideal(I, F.order())) {
    const int pos = F.position(m);
    Polynomial rep = R->monomial(m);
    for (std::size_t k = 0; k < sb.elements().size(); ++k)
      if (sb.leading_monomials()[k] == m) {
        rep = sb.elements()[k];
        break;
      }
    out.generators.push_back(InitialGenerator{pos, rep, R->monomial(m)});
    out.top_degree = std::max(out.top_degree, pos);
  }
  std::stable_sort(out.generators.begin(), out.generators.end(),
                   [](const InitialGenerator& a, const InitialGenerator& b) { return a.degree < b.degree; });
  out.checked_through = out.top_degree;
  return out;
}

/// Generators of J_n ∩ I in the cover ring.
std::vector<Polynomial> level_meet(const Ideal& I, const Filtration& F, int n) {
  const Ring& R = I.ring();
  if (n == 0) return I.compact_cover_generators();
  return cover_intersection(concat(F.level_generators(n), R->relations()), I.compact_cover_generators(), R->field(),
                            R->nvars());
}

}  // namespace

std::optional<int> order_initial_cross_check(const Ideal& I, const Filtration& F, int window) {
  require_same_ring(I, F);
  const Ring& R = I.ring();
  const auto lead = monomial_initial_ideal(I, F.order());
  const auto g = F.enumeration(window + 1);
  for (int n = 0; n <= window; ++n) {
    bool mono = std::any_of(lead.begin(), lead.end(), [&](const Monomial& m) { return m.divides(g[n]); });
    bool graded = false;
    for (const auto& c : level_meet(I, F, n))
      if (!contained(R, c, F.level_generators(n + 1))) {
        graded = true;
        break;
      }
    if (mono != graded) return n;
  }
  return std::nullopt;
}

InitialIdeal initial_ideal_filtration(const Ideal& I, const Filtration& F) {
  require_same_ring(I, F);
  if (multivariate_order(F)) {
    InitialIdeal out = monomial_route(I, F);
    const int window = std::min(out.top_degree + 2, F.cap() - 1);
    if (auto bad = order_initial_cross_check(I, F, window))
      throw InternalInconsistency("order-induced initial ideal disagrees with the degreewise route at index " +
                                  std::to_string(*bad));
    out.checked_through = window;
    return out;
  }
  int d = 0;
  if (F.kind() == Filtration::Kind::Weighted) {
    d = weighted_initial_degree(I, F.weights());
  } else {
    const ReesDelta rd = rees_delta(F);
    if (rd.status != DeltaStatus::Certified)
      throw TruncationCapExceeded("Rees generation degree of " + F.name() + " not certified within the cap");
    d = rees_ideal_graded(I, rd.generators).top_degree;
  }
  I.ring()->certify(d + 2, "filtration initial ideal certification");
  InitialIdeal in = F.kind() == Filtration::Kind::Adic ? initial_ideal_degreewise(I, F.adic_ideal(), d + 2)
                                                        : initial_ideal_levels(I, F.level(1), F.level_fn(), d + 2);
  if (in.top_degree != d)
    throw InternalInconsistency("filtration initial ideal: degreewise top degree " + std::to_string(in.top_degree) +
                                " differs from certificate degree " + std::to_string(d));
  in.rees_degree = d;
  in.certified = true;
  return in;
}

bool decomposition_holds(const Ideal& I, const Filtration& F, int c, int n) {
  require_same_ring(I, F);
  const Ring& R = I.ring();
  std::vector<Polynomial> rhs;
  for (int t = 0; t <= std::min(c, n); ++t) {
    auto p = products(F.level_generators(n - t), level_meet(I, F, t));
    rhs.insert(rhs.end(), p.begin(), p.end());
  }
  return contained(R, level_meet(I, F, n), concat(rhs, R->relations()));
}

FiltrationArtinRees artin_rees_filtration(const Ideal& I, const Filtration& F) {
  if (multivariate_order(F))
    throw TruncationCapExceeded("order-induced filtration on several variables is not Noetherian; ar_F has no "
                                "certificate");
  InitialIdeal in = initial_ideal_filtration(I, F);
  FiltrationArtinRees r;
  r.rees_route = *in.rees_degree;
  r.certificate = F.kind() == Filtration::Kind::Weighted ? "weighted-standard-basis" : "rees";
  r.degreewise_route = in.top_degree;
  r.value = in.top_degree;
  const int c = r.value;
  r.decomposition_verified = true;
  for (int n = c; n <= c + 2; ++n)
    if (!decomposition_holds(I, F, c, n)) r.decomposition_verified = false;
  if (!r.decomposition_verified)
    throw InternalInconsistency("ar_F = " + std::to_string(c) + " but the decomposition identity fails");
  if (c >= 1) {
    bool fails = false;
    for (int n = c - 1; n <= c + 1 && !fails; ++n)
      if (!decomposition_holds(I, F, c - 1, n)) fails = true;
    r.predecessor_fails = fails;
  }
  return r;
}

FiltrationBound bound_filtration(const std::vector<Polynomial>& fs, const Filtration& F) {
  if (fs.empty()) throw PreconditionError("bound_filtration needs a nonempty sequence");
  const Ring& R = F.ring();
  const Ideal& J1 = F.level(1);
  auto fr = certify_filter_regular(fs, J1);
  if (!fr.filter_regular)
    throw PreconditionError("sequence is not J_1-filter-regular (index " + std::to_string(*fr.first_failure + 1) +
                            ")");
  const ReesDelta rd = rees_delta(F);
  FiltrationBound out;
  BoundCertificate& b = out.cert;
  b.delta = rd.delta;
  if (rd.status == DeltaStatus::Heuristic)
    b.warnings.push_back("delta = " + std::to_string(rd.delta) + " is heuristic (checked through " +
                         std::to_string(rd.checked_through) + ")");
  int weighted = 0;
  bool regular = true;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    b.a.push_back(*fr.a[i]);
    weighted += (1 << i) * *fr.a[i];
    if (*fr.a[i] != 0) regular = false;
  }
  int n = (weighted + 1) * rd.delta;
  for (std::size_t i = 1; i <= fs.size(); ++i) {
    b.ar.push_back(artin_rees_filtration(Ideal(R, prefix(fs, i)), F).value);
    n = std::max(n, b.ar.back() + 1);
  }
  out.theorem_N = n;
  if (regular) {
    out.regular_N = b.ar.back() + 1;
    b.formula = BoundFormula::Regular;
    b.N = *out.regular_N;
  } else {
    b.formula = BoundFormula::Filtration;
    b.N = n;
  }
  if (F.kind() == Filtration::Kind::Adic) out.adic_main_N = bound_main(fs, F.adic_ideal()).N;
  return out;
}

bool JetReport::passed() const {
  for (const auto& l : levels)
    if (l.tail_in_JN && (!l.regular || !*l.regular || !l.initial_equal || !*l.initial_equal)) return false;
  return true;
}

JetReport jet_pipeline(const Ring& R, const std::vector<Polynomial>& fs, const MonomialOrder& order, int lo, int hi) {
  if (!order.noetherian()) throw PreconditionError("jet pipeline needs a Noetherian order");
  if (fs.empty() || fs.size() > R->nvars()) throw PreconditionError("jet pipeline needs 1..nvars generators");
  auto w = order.positive_weight();
  if (!w) throw PreconditionError("jet pipeline needs a positive leading weight");
  const Filtration F = Filtration::weighted(R, *w);
  const Ideal& J1 = F.level(1);
  auto fr = certify_filter_regular(fs, J1);
  for (std::size_t i = 0; i < fs.size(); ++i)
    if (!fr.filter_regular || *fr.a[i] != 0)
      throw PreconditionError("jet pipeline needs a regular sequence (index " + std::to_string(i + 1) + ")");

  JetReport rep;
  rep.weights = *w;
  rep.N = bound_filtration(fs, F).cert.N;
  rep.initial = monomial_initial_ideal(Ideal(R, fs), order);
  const long N = rep.N;
  for (const auto& f : fs)
    for (const auto& t : f.terms())
      if (weight_of(t.mono, *w) < N) rep.minimal_admissible = std::max(rep.minimal_admissible, int(t.mono.degree()));
  const auto& JN = F.level_generators(rep.N);
  for (int n = lo; n <= hi; ++n) {
    JetLevel lv;
    lv.n = n;
    std::vector<Polynomial> jets;
    lv.tail_in_JN = true;
    for (const auto& f : fs) {
      jets.push_back(f.jet(n));
      if (!contained(R, f.tail(n), JN)) lv.tail_in_JN = false;
    }
    if (lv.tail_in_JN) {
      auto jr = certify_filter_regular(jets, J1);
      bool reg = jr.filter_regular;
      for (std::size_t i = 0; reg && i < jets.size(); ++i)
        if (*jr.a[i] != 0) reg = false;
      lv.regular = reg;
      lv.initial = monomial_initial_ideal(Ideal(R, jets), order);
      lv.initial_equal = lv.initial == rep.initial;
    }
    rep.levels.push_back(std::move(lv));
  }
  return rep;
}

std::vector<Polynomial> filtration_perturbation_basis(const Filtration& F, int N, int degree_cap) {
  const Ring& R = F.ring();
  if (N < 1) throw PreconditionError("perturbation level must be at least 1");
  const auto& gens = F.level_generators(N);
  int min_deg = -1;
  for (const auto& g : gens) min_deg = min_deg < 0 ? g.degree() : std::min(min_deg, g.degree());
  if (min_deg < 0) throw PreconditionError("perturbation from the zero ideal");
  if (degree_cap < min_deg) throw PreconditionError("degree cap below the least degree of J_N");
  std::vector<Polynomial> out;
  for (const auto& g : gens)
    for (int d = 0; d + g.degree() <= degree_cap; ++d)
      for (const auto& m : monomials_of_degree(R->nvars(), d)) {
        Polynomial p = g.times(m, R->field().one());
        if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(std::move(p));
      }
  return out;
}

namespace {

struct FiltrationBaseline {
  std::vector<InitialIdeal> in;  // one per prefix
  FilterRegularCertificate cert;
};

InitialIdeal initial_for(const Ideal& I, const Filtration& F) { return initial_ideal_filtration(I, F); }

/// Degree cap for perturbation monomials: every generator of J_N, plus two
/// degrees above the lowest one.
int default_degree_cap(const Filtration& F, int N) {
  int lo = -1, hi = 0;
  for (const auto& g : F.level_generators(N)) {
    lo = lo < 0 ? g.degree() : std::min(lo, g.degree());
    hi = std::max(hi, g.degree());
  }
  return std::max(hi, lo + 2);
}

std::optional<int> differs(const InitialIdeal& a, const InitialIdeal& b, const Filtration& F) {
  if (multivariate_order(F)) {
    if (a.generators.size() != b.generators.size()) return std::min(a.top_degree, b.top_degree);
    for (std::size_t k = 0; k < a.generators.size(); ++k)
      if (a.generators[k].degree != b.generators[k].degree || a.generators[k].form != b.generators[k].form)
        return std::min(a.generators[k].degree, b.generators[k].degree);
    return std::nullopt;
  }
  return first_difference(a, b, std::max(a.top_degree, b.top_degree));
}

std::vector<Polynomial> perturbed(const Ring& R, const std::vector<Polynomial>& fs, const std::vector<Polynomial>& eps) {
  std::vector<Polynomial> out = fs;
  for (std::size_t i = 0; i < fs.size() && i < eps.size(); ++i) {
    out[i] += eps[i];
    Polynomial r = R->reduce(out[i]);
    if (r.size() < out[i].size()) out[i] = std::move(r);
  }
  return out;
}

}  // namespace

std::vector<PerturbationReport> verify_invariance_filtration(const std::vector<Polynomial>& fs, const Filtration& F,
                                                             int N, std::size_t trials, std::uint64_t seed) {
  const Ring& R = F.ring();
  const Ideal& J1 = F.level(1);
  const InitialIdeal base = initial_for(Ideal(R, fs), F);
  const auto base_cert = certify_filter_regular(fs, J1);
  const auto basis = filtration_perturbation_basis(F, N, default_degree_cap(F, N));
  std::vector<PerturbationReport> reports(trials);
  parallel_for(trials, default_threads(), [&](std::size_t t) {
    PerturbationReport rep;
    rep.seed = seed;
    rep.trial = t;
    rep.N = N;
    rep.eps = sample_trial(basis, fs.size(), seed, t);
    try {
      const auto fp = perturbed(R, fs, rep.eps);
      auto cert = certify_filter_regular(fp, J1);
      rep.a_perturbed = cert.a;
      if (base_cert.filter_regular) {
        rep.filter_regular_preserved = cert.filter_regular;
        if (!cert.filter_regular && rep.detail.empty()) rep.detail = "J_1-filter-regularity";
      }
      InitialIdeal in = initial_for(Ideal(R, fp), F);
      rep.initial_ideal_equal = !differs(base, in, F).has_value();
      if (!*rep.initial_ideal_equal && rep.detail.empty()) rep.detail = "filtration initial ideal";
      rep.artin_rees_equal = in.top_degree == base.top_degree;
      if (!*rep.artin_rees_equal && rep.detail.empty()) rep.detail = "filtration Artin-Rees number";
    } catch (const TruncationCapExceeded& e) {
      rep.error = e.what();
    } catch (const ResourceExceeded& e) {
      rep.error = e.what();
    }
    reports[t] = std::move(rep);
  });
  return reports;
}

std::optional<DestabilizingWitness> search_destabilizing_filtration(const std::vector<Polynomial>& fs,
                                                                    const Filtration& F, int N, std::size_t trials,
                                                                    std::uint64_t seed) {
  if (F.kind() == Filtration::Kind::Adic) return search_destabilizing(fs, F.adic_ideal(), N, trials, seed);
  const Ring& R = F.ring();
  const std::size_t r = fs.size();
  std::vector<InitialIdeal> base;
  for (std::size_t i = 1; i <= r; ++i) base.push_back(initial_for(Ideal(R, prefix(fs, i)), F));

  std::vector<std::vector<Polynomial>> cands;
  for (std::size_t i = 0; i < r; ++i)
    for (const auto& g : F.level_generators(N)) {
      std::vector<Polynomial> e(r, R->zero());
      e[i] = g;
      cands.push_back(std::move(e));
    }
  const std::size_t structured = cands.size();
  const auto basis = filtration_perturbation_basis(F, N, default_degree_cap(F, N));
  for (std::size_t t = 1; t <= trials; ++t) cands.push_back(sample_trial(basis, r, seed, t));

  for (std::size_t c = 0; c < cands.size(); ++c) {
    const auto fp = perturbed(R, fs, cands[c]);
    for (std::size_t i = 0; i < r; ++i) {
      InitialIdeal in = initial_for(Ideal(R, prefix(fp, i + 1)), F);
      if (auto diff = differs(base[i], in, F)) return DestabilizingWitness{cands[c], i, *diff, c, c < structured};
    }
  }
  return std::nullopt;
}

}  // namespace normalcone
