#include "normalcone/standard_basis.hpp"

#include <algorithm>
#include <climits>
#include <numeric>
#include <variant>

#include "normalcone/errors.hpp"

namespace normalcone {

EngineLimits& engine_limits() {
  static EngineLimits limits;
  return limits;
}

namespace {

/// Coefficients modulo a word-size prime; basis elements are kept monic.
struct ModP {
  using V = std::uint64_t;
  using Mult = std::uint64_t;
  std::uint64_t p = 2;

  static bool is_zero(V v) { return v == 0; }
  V mul(V a, V b) const { return a * b % p; }
  V sub(V a, V b) const { return a >= b ? a - b : a + p - b; }
  V neg(V a) const { return a ? p - a : 0; }
  V inv(V a) const {
    V r = 1, e = p - 2;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  Mult unit() const { return 1; }
  /// h <- alpha*h - beta*m*g cancels the leading term.
  void factors(const V& lh, const V& lg, V& alpha, V& beta) const {
    alpha = 1;
    beta = lg == 1 ? lh : mul(lh, inv(lg));
  }
  static bool is_one(const V& v) { return v == 1; }
  V combine(const V& alpha, const V& x, const V& beta, const V& y) const { return sub(mul(alpha, x), mul(beta, y)); }
  V scale(const V& alpha, const V& x) const { return mul(alpha, x); }
  V negmul(const V& beta, const V& y) const { return neg(mul(beta, y)); }
  Scalar out(const V& c, const Mult& m) const { return Scalar(static_cast<unsigned long>(mul(c, inv(m)))); }
};

/// Integer coefficients with fraction-free reduction and content removal.
struct IntQ {
  using V = mpz_class;
  using Mult = mpq_class;

  static bool is_zero(const V& v) { return sgn(v) == 0; }
  Mult unit() const { return 1; }
  void factors(const V& lh, const V& lg, V& alpha, V& beta) const {
    if (lg == 1) {
      alpha = 1;
      beta = lh;
      return;
    }
    V d = gcd(lh, lg);
    alpha = lg / d;
    beta = lh / d;
    if (sgn(alpha) < 0) {
      alpha = -alpha;
      beta = -beta;
    }
  }
  static bool is_one(const V& v) { return v == 1; }
  V combine(const V& alpha, const V& x, const V& beta, const V& y) const {
    V r = x;
    if (alpha != 1) r *= alpha;
    mpz_submul(r.get_mpz_t(), beta.get_mpz_t(), y.get_mpz_t());
    return r;
  }
  V scale(const V& alpha, const V& x) const { return alpha * x; }
  V negmul(const V& beta, const V& y) const { return -(beta * y); }
  Scalar out(const V& c, const Mult& m) const {
    Scalar r(c);
    r /= m;
    return r;
  }
};

template <class D>
struct ETerm {
  Monomial mono;
  typename D::V c;
};

/// Polynomial with terms sorted descending under the active order.
template <class D>
struct EPoly {
  std::vector<ETerm<D>> t;
  std::uint32_t maxdeg = 0;

  bool zero() const { return t.empty(); }
  const Monomial& lm() const { return t.front().mono; }
  int ecart() const { return static_cast<int>(maxdeg) - static_cast<int>(lm().degree()); }
  void refresh() {
    maxdeg = 0;
    for (const auto& x : t) maxdeg = std::max(maxdeg, x.mono.degree());
  }
};

template <class D>
struct Engine {
  using V = typename D::V;
  using Mult = typename D::Mult;
  using P = EPoly<D>;

  const TermOrder& ord;
  D dom;
  std::uint64_t steps = 0;

  void tick() {
    if (++steps > engine_limits().max_reduction_steps)
      throw ResourceExceeded("standard basis: reduction step budget exhausted");
  }

  void sort_terms(P& o) const {
    std::sort(o.t.begin(), o.t.end(), [&](const ETerm<D>& a, const ETerm<D>& b) { return ord.compare(a.mono, b.mono) > 0; });
    o.refresh();
  }

  /// Engine form of f together with the factor M with engine = M * f.
  P convert(const Polynomial& f, Mult& M) const {
    P o;
    o.t.reserve(f.terms().size());
    if constexpr (std::is_same_v<D, ModP>) {
      M = 1;
      for (const auto& x : f.terms()) o.t.push_back({x.mono, mpz_get_ui(x.coeff.get_num_mpz_t()) % dom.p});
    } else {
      mpz_class L = 1;
      for (const auto& x : f.terms()) mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), x.coeff.get_den_mpz_t());
      M = L;
      for (const auto& x : f.terms()) o.t.push_back({x.mono, mpz_class(x.coeff.get_num() * (L / x.coeff.get_den()))});
    }
    sort_terms(o);
    return o;
  }
  P convert(const Polynomial& f) const {
    Mult M;
    return convert(f, M);
  }

  /// Monic (F_p) or primitive with positive leading coefficient (Z).
  void normalize(P& p, Mult* M = nullptr) const {
    if (p.zero()) return;
    if constexpr (std::is_same_v<D, ModP>) {
      if (p.t[0].c == 1) return;
      V inv = dom.inv(p.t[0].c);
      for (auto& x : p.t) x.c = dom.mul(x.c, inv);
      if (M) *M = dom.mul(*M, inv);
    } else {
      mpz_class g = 0;
      for (const auto& x : p.t) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.c.get_mpz_t());
        if (g == 1) break;
      }
      if (sgn(p.t[0].c) < 0) g = -g;
      if (g == 1) return;
      for (auto& x : p.t) mpz_divexact(x.c.get_mpz_t(), x.c.get_mpz_t(), g.get_mpz_t());
      if (M) *M /= g;
    }
  }

  /// h <- alpha*h - beta*m*g cancelling the term of h at `pos`; requires
  /// LM(g) | h[pos]. Terms above pos are only scaled.
  void reduce_at(P& h, std::size_t pos, const P& g, Mult* M = nullptr) {
    tick();
    V alpha, beta;
    dom.factors(h.t[pos].c, g.t[0].c, alpha, beta);
    const bool scale = !D::is_one(alpha);
    Monomial m = h.t[pos].mono / g.t[0].mono;
    std::vector<ETerm<D>> out;
    out.reserve(h.t.size() + g.t.size());
    for (std::size_t i = 0; i < pos; ++i) {
      if (scale) h.t[i].c = dom.scale(alpha, h.t[i].c);
      out.push_back(std::move(h.t[i]));
    }
    std::size_t i = pos + 1, j = 1;
    Monomial gm;
    if (j < g.t.size()) gm = g.t[j].mono * m;
    while (i < h.t.size() || j < g.t.size()) {
      int cmp;
      if (j == g.t.size()) cmp = 1;
      else if (i == h.t.size()) cmp = -1;
      else cmp = ord.compare(h.t[i].mono, gm);
      if (cmp > 0) {
        if (scale) h.t[i].c = dom.scale(alpha, h.t[i].c);
        out.push_back(std::move(h.t[i++]));
      } else {
        if (cmp < 0) {
          out.push_back({gm, dom.negmul(beta, g.t[j].c)});
        } else {
          V s = dom.combine(alpha, h.t[i].c, beta, g.t[j].c);
          if (!D::is_zero(s)) out.push_back({gm, std::move(s)});
          ++i;
        }
        ++j;
        if (j < g.t.size()) gm = g.t[j].mono * m;
      }
    }
    h.t = std::move(out);
    h.refresh();
    if (scale && M) *M *= Mult(alpha);
  }

  P times_monomial(const P& g, const Monomial& m) const {
    P r;
    r.t.reserve(g.t.size());
    for (const auto& x : g.t) r.t.push_back({x.mono * m, x.c});
    r.maxdeg = g.maxdeg + m.degree();
    return r;
  }

  /// Periodic content removal keeps integer coefficients small.
  void maybe_shrink(P& h, Mult* M, unsigned& counter) const {
    if constexpr (std::is_same_v<D, IntQ>) {
      if (++counter % 16 == 0) normalize(h, M);
    }
  }

  /// Reduction for global orders; full = also reduce lower terms.
  P global_nf(P h, const std::vector<const P*>& basis, bool full, Mult* M = nullptr) {
    std::size_t pos = 0;
    unsigned counter = 0;
    while (pos < h.t.size()) {
      const P* red = nullptr;
      for (const P* g : basis)
        if (g->lm().divides(h.t[pos].mono)) {
          red = g;
          break;
        }
      if (red) {
        reduce_at(h, pos, *red, M);
        maybe_shrink(h, M, counter);
      } else if (full) {
        ++pos;
      } else {
        break;
      }
    }
    return h;
  }

  /// Mora's normal form with ecart selection.
  P mora_nf(P h, const std::vector<const P*>& basis, Mult* M = nullptr) {
    std::vector<P> extra;
    unsigned counter = 0;
    while (!h.zero()) {
      int best = INT_MAX;
      const P* red = nullptr;
      std::size_t red_extra = SIZE_MAX;
      for (const P* g : basis)
        if (g->ecart() < best && g->lm().divides(h.lm())) {
          best = g->ecart();
          red = g;
          if (best == 0) break;
        }
      if (best > 0)
        for (std::size_t k = 0; k < extra.size(); ++k)
          if (extra[k].ecart() < best && extra[k].lm().divides(h.lm())) {
            best = extra[k].ecart();
            red = nullptr;
            red_extra = k;
          }
      if (!red && red_extra == SIZE_MAX) break;
      if (best > h.ecart()) {
        extra.push_back(h);
        if constexpr (std::is_same_v<D, IntQ>) normalize(extra.back());
      }
      if (red) {
        reduce_at(h, 0, *red, M);
      } else {
        P g = extra[red_extra];
        reduce_at(h, 0, g, M);
      }
      maybe_shrink(h, M, counter);
    }
    return h;
  }

  P nf(P h, const std::vector<const P*>& basis, bool full, Mult* M = nullptr) {
    if (ord.is_global()) return global_nf(std::move(h), basis, full, M);
    return mora_nf(std::move(h), basis, M);
  }

  /// Exact polynomial engine/M, or the monic associate when M is null.
  Polynomial to_poly(P p, const Field& F, std::size_t nvars, const Mult* M = nullptr) const {
    Mult m = dom.unit();
    if (M) {
      m = *M;
    } else if (!p.zero()) {
      if constexpr (std::is_same_v<D, ModP>) m = p.t[0].c;
      else m = Mult(p.t[0].c);
    }
    std::vector<Term> ts;
    ts.reserve(p.t.size());
    for (auto& x : p.t) ts.push_back({std::move(x.mono), dom.out(x.c, m)});
    return Polynomial::from_terms(F, nvars, std::move(ts));
  }
};

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  std::uint64_t seq;
};

template <class D>
std::vector<EPoly<D>> buchberger(const std::vector<Polynomial>& gens, const TermOrder& ord, const D& dom,
                                 std::size_t nvars) {
  using P = EPoly<D>;
  Engine<D> eng{ord, dom};
  const bool global = ord.is_global();
  std::vector<P> S;
  std::vector<bool> redundant;
  std::vector<Pair> pairs;
  std::uint64_t seq = 0;
  bool unit = false;

  auto basis_ptrs = [&]() {
    std::vector<const P*> v;
    v.reserve(S.size());
    for (std::size_t k = 0; k < S.size(); ++k) v.push_back(&S[k]);
    return v;
  };

  auto add = [&](P h) {
    eng.normalize(h);
    if (h.lm().is_one()) unit = true;
    std::size_t k = S.size();
    if (k >= engine_limits().max_basis_size) throw ResourceExceeded("standard basis: too many elements");
    const Monomial& lk = h.lm();
    // Gebauer-Moeller B criterion on existing pairs.
    std::erase_if(pairs, [&](const Pair& p) {
      return lk.divides(p.lcm) && Monomial::lcm(S[p.i].lm(), lk) != p.lcm &&
             Monomial::lcm(S[p.j].lm(), lk) != p.lcm;
    });
    // New pairs with M and F criteria.
    std::vector<Pair> cand;
    for (std::size_t i = 0; i < k; ++i) {
      if (global && redundant[i]) continue;
      cand.push_back({i, k, Monomial::lcm(S[i].lm(), lk), 0});
    }
    std::stable_sort(cand.begin(), cand.end(),
                     [](const Pair& a, const Pair& b) { return a.lcm.degree() < b.lcm.degree(); });
    std::vector<Pair> kept;
    for (const auto& c : cand) {
      bool drop = false;
      for (const auto& q : kept)
        if (q.lcm.divides(c.lcm)) {
          drop = true;
          break;
        }
      if (!drop) kept.push_back(c);
    }
    if (global) {
      // Product criterion, applied after M/F: any pair sharing an lcm with a
      // coprime pair is dropped with it.
      std::vector<Monomial> coprime_lcms;
      for (const auto& c : cand)
        if (Monomial::coprime(S[c.i].lm(), lk)) coprime_lcms.push_back(c.lcm);
      std::erase_if(kept, [&](const Pair& p) {
        return std::find(coprime_lcms.begin(), coprime_lcms.end(), p.lcm) != coprime_lcms.end();
      });
      for (std::size_t i = 0; i < k; ++i)
        if (!redundant[i] && lk.divides(S[i].lm())) redundant[i] = true;
    }
    for (auto& p : kept) {
      p.seq = seq++;
      pairs.push_back(p);
    }
    S.push_back(std::move(h));
    redundant.push_back(false);
  };

  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    P h = eng.convert(g);
    if (!S.empty()) h = eng.nf(std::move(h), basis_ptrs(), false);
    if (!h.zero()) add(std::move(h));
    if (unit) break;
  }

  while (!pairs.empty() && !unit) {
    auto it = std::min_element(pairs.begin(), pairs.end(), [&](const Pair& a, const Pair& b) {
      if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
      if (global) {
        int c = ord.compare(a.lcm, b.lcm);
        if (c) return c < 0;
      }
      return a.seq < b.seq;
    });
    Pair p = *it;
    pairs.erase(it);
    P h = eng.times_monomial(S[p.i], p.lcm / S[p.i].lm());
    eng.reduce_at(h, 0, S[p.j]);
    h = eng.nf(std::move(h), basis_ptrs(), false);
    if (!h.zero()) add(std::move(h));
  }

  std::vector<P> result;
  if (unit) {
    P one;
    one.t.push_back({Monomial(nvars), typename D::V(1)});
    result.push_back(std::move(one));
    return result;
  }
  // Minimalize: drop elements whose leading monomial is divisible by
  // another's (earliest wins on ties).
  for (std::size_t a = 0; a < S.size(); ++a) {
    bool drop = false;
    for (std::size_t b = 0; b < S.size() && !drop; ++b) {
      if (a == b) continue;
      if (S[b].lm().divides(S[a].lm()) && (S[b].lm() != S[a].lm() || b < a)) drop = true;
    }
    if (!drop) result.push_back(S[a]);
  }
  if (global) {
    for (std::size_t a = 0; a < result.size(); ++a) {
      std::vector<const P*> others;
      for (std::size_t b = 0; b < result.size(); ++b)
        if (b != a) others.push_back(&result[b]);
      P red = result[a];
      std::size_t pos = 1;
      unsigned counter = 0;
      while (pos < red.t.size()) {
        const P* g = nullptr;
        for (const P* o : others)
          if (o->lm().divides(red.t[pos].mono)) {
            g = o;
            break;
          }
        if (g) {
          eng.reduce_at(red, pos, *g);
          eng.maybe_shrink(red, nullptr, counter);
        } else {
          ++pos;
        }
      }
      eng.normalize(red);
      result[a] = std::move(red);
    }
  }
  std::sort(result.begin(), result.end(), [&](const P& a, const P& b) { return ord.compare(a.lm(), b.lm()) < 0; });
  return result;
}

}  // namespace

struct EngineStore {
  std::variant<std::vector<EPoly<ModP>>, std::vector<EPoly<IntQ>>> elems;
};

namespace {

template <class D>
D domain_for(const Field& F) {
  if constexpr (std::is_same_v<D, ModP>) return ModP{F.characteristic()};
  else return IntQ{};
}

/// Homogenizes with a new last variable and returns the degree-first order.
TermOrder homogenized_order(const TermOrder& order) {
  const std::size_t n = order.nvars();
  if (n + 1 > kMaxVars) throw std::length_error("too many variables for homogenization");
  std::vector<std::vector<int>> rows{std::vector<int>(n + 1, 1)};
  for (const auto& r : order.rows()) {
    std::vector<int> row(r);
    row.push_back(0);
    rows.push_back(row);
  }
  return TermOrder(n + 1, rows);
}

std::vector<Polynomial> homogenized(const std::vector<Polynomial>& gens, const Field& F, std::size_t n) {
  std::vector<std::size_t> id(n);
  std::iota(id.begin(), id.end(), 0);
  std::vector<Polynomial> out;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    const int d = g.degree();
    std::vector<Term> ts;
    for (const auto& t : g.terms()) {
      Monomial m = t.mono.remapped(n + 1, id);
      m.set(n, d - static_cast<int>(t.mono.degree()));
      ts.push_back({m, t.coeff});
    }
    out.push_back(Polynomial::from_terms(F, n + 1, std::move(ts)));
  }
  return out;
}

template <class D>
std::vector<EPoly<D>> compute_basis(const std::vector<Polynomial>& gens, const TermOrder& order, SbMethod method,
                                    const Field& F) {
  const D dom = domain_for<D>(F);
  if (method == SbMethod::Mora || order.is_global()) return buchberger<D>(gens, order, dom, order.nvars());
  const std::size_t n = order.nvars();
  const TermOrder hord = homogenized_order(order);
  auto hbasis = buchberger<D>(homogenized(gens, F, n), hord, dom, n + 1);
  Engine<D> hen{hord, dom};
  Engine<D> eng{order, dom};
  std::vector<EPoly<D>> conv;
  for (auto& g : hbasis) {
    Polynomial p = hen.to_poly(std::move(g), F, n + 1).dehomogenized(n).truncated_vars(n);
    EPoly<D> o = eng.convert(p);
    eng.normalize(o);
    conv.push_back(std::move(o));
  }
  std::vector<EPoly<D>> sorted;
  for (std::size_t a = 0; a < conv.size(); ++a) {
    bool drop = false;
    for (std::size_t b = 0; b < conv.size() && !drop; ++b) {
      if (a == b) continue;
      if (conv[b].lm().divides(conv[a].lm()) && (conv[b].lm() != conv[a].lm() || b < a)) drop = true;
    }
    if (!drop) sorted.push_back(conv[a]);
  }
  std::sort(sorted.begin(), sorted.end(),
            [&](const EPoly<D>& a, const EPoly<D>& b) { return order.compare(a.lm(), b.lm()) < 0; });
  return sorted;
}

template <class D>
std::vector<const EPoly<D>*> pointers(const std::vector<EPoly<D>>& v) {
  std::vector<const EPoly<D>*> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(&x);
  return out;
}

}  // namespace

Monomial leading_monomial(const Polynomial& f, const TermOrder& order) {
  if (f.is_zero()) throw std::invalid_argument("leading monomial of zero");
  const Monomial* best = &f.terms().front().mono;
  for (const auto& t : f.terms())
    if (order.compare(t.mono, *best) > 0) best = &t.mono;
  return *best;
}

std::vector<Monomial> minimalize_monomials(std::vector<Monomial> ms) {
  std::sort(ms.begin(), ms.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return degrevlex_cmp(a, b) > 0;
  });
  std::vector<Monomial> out;
  for (const auto& m : ms) {
    bool red = false;
    for (const auto& o : out)
      if (o.divides(m)) {
        red = true;
        break;
      }
    if (!red) out.push_back(m);
  }
  return out;
}

StandardBasis StandardBasis::compute(const std::vector<Polynomial>& gens, const TermOrder& order, SbMethod method) {
  if (method == SbMethod::Auto) method = order.is_global() ? SbMethod::Mora : SbMethod::Lazard;
  StandardBasis sb;
  sb.order_ = order;
  sb.method_ = method;
  sb.nvars_ = order.nvars();
  for (const auto& g : gens) {
    if (g.nvars() != order.nvars() && !g.is_zero())
      throw std::invalid_argument("standard basis: generator/order variable count mismatch");
    if (!g.is_zero()) sb.field_ = g.field();
  }
  auto finish = [&](auto elems) {
    for (const auto& e : elems) sb.leads_.push_back(e.lm());
    return elems;
  };
  auto store = std::make_shared<EngineStore>();
  if (sb.field_.is_rational()) {
    auto elems = finish(compute_basis<IntQ>(gens, order, method, sb.field_));
    Engine<IntQ> eng{order, IntQ{}};
    for (const auto& e : elems) sb.elems_.push_back(eng.to_poly(e, sb.field_, sb.nvars_));
    store->elems = std::move(elems);
  } else {
    auto elems = finish(compute_basis<ModP>(gens, order, method, sb.field_));
    Engine<ModP> eng{order, domain_for<ModP>(sb.field_)};
    for (const auto& e : elems) sb.elems_.push_back(eng.to_poly(e, sb.field_, sb.nvars_));
    store->elems = std::move(elems);
  }
  sb.store_ = std::move(store);
  return sb;
}

bool StandardBasis::is_unit() const {
  return std::any_of(leads_.begin(), leads_.end(), [](const Monomial& m) { return m.is_one(); });
}

Polynomial StandardBasis::normal_form(const Polynomial& f) const {
  if (f.is_zero() || elems_.empty()) return f;
  if (f.nvars() != nvars_) throw std::invalid_argument("normal form: variable count mismatch");
  return std::visit(
      [&](const auto& elems) {
        using D = std::remove_cvref_t<decltype(elems.front())>;
        using Dom = std::conditional_t<std::is_same_v<D, EPoly<ModP>>, ModP, IntQ>;
        Engine<Dom> eng{order_, domain_for<Dom>(field_)};
        typename Dom::Mult M;
        auto h = eng.convert(f, M);
        h = eng.nf(std::move(h), pointers(elems), false, &M);
        return eng.to_poly(std::move(h), field_, nvars_, &M);
      },
      store_->elems);
}

Polynomial StandardBasis::reduced_form(const Polynomial& f) const {
  if (!order_.is_global()) throw std::logic_error("reduced_form needs a global order");
  if (f.is_zero() || elems_.empty()) return f;
  return std::visit(
      [&](const auto& elems) {
        using D = std::remove_cvref_t<decltype(elems.front())>;
        using Dom = std::conditional_t<std::is_same_v<D, EPoly<ModP>>, ModP, IntQ>;
        Engine<Dom> eng{order_, domain_for<Dom>(field_)};
        typename Dom::Mult M;
        auto h = eng.convert(f, M);
        h = eng.global_nf(std::move(h), pointers(elems), true, &M);
        return eng.to_poly(std::move(h), field_, nvars_, &M);
      },
      store_->elems);
}

bool StandardBasis::contains(const Polynomial& f) const {
  if (f.is_zero()) return true;
  if (is_unit()) return true;
  return normal_form(f).is_zero();
}

Monomial StandardBasis::leading_monomial(const Polynomial& f) const { return normalcone::leading_monomial(f, order_); }

Division divide(const Polynomial& f, const std::vector<Polynomial>& divisors, const TermOrder& order) {
  const Field F = f.field();
  const std::size_t n = f.nvars();
  struct OPoly {
    std::vector<Term> t;
    int maxdeg = 0;
    const Monomial& lm() const { return t.front().mono; }
    int ecart() const { return maxdeg - static_cast<int>(lm().degree()); }
  };
  auto convert = [&](const Polynomial& p) {
    OPoly o;
    o.t = p.terms();
    std::sort(o.t.begin(), o.t.end(), [&](const Term& a, const Term& b) { return order.compare(a.mono, b.mono) > 0; });
    for (const auto& x : o.t) o.maxdeg = std::max(o.maxdeg, static_cast<int>(x.mono.degree()));
    return o;
  };
  struct Entry {
    OPoly p;
    Polynomial a;               // coefficient of f
    std::vector<Polynomial> b;  // coefficients of divisors
  };
  const std::size_t s = divisors.size();
  auto zero = Polynomial(F, n);
  std::vector<Entry> T;
  for (std::size_t j = 0; j < s; ++j) {
    if (divisors[j].is_zero()) continue;
    Entry e{convert(divisors[j]), zero, std::vector<Polynomial>(s, zero)};
    e.b[j] = Polynomial::constant(F, n, F.one());
    T.push_back(std::move(e));
  }
  Entry h{convert(f), Polynomial::constant(F, n, F.one()), std::vector<Polynomial>(s, zero)};
  const bool global = order.is_global();
  std::uint64_t steps = 0;
  while (!h.p.t.empty()) {
    int best = INT_MAX;
    std::size_t pick = SIZE_MAX;
    for (std::size_t k = 0; k < T.size(); ++k)
      if (T[k].p.lm().divides(h.p.lm()) && T[k].p.ecart() < best) {
        best = T[k].p.ecart();
        pick = k;
        if (global) break;
      }
    if (pick == SIZE_MAX) break;
    if (++steps > engine_limits().max_reduction_steps)
      throw ResourceExceeded("division: reduction step budget exhausted");
    if (!global && best > h.p.ecart()) T.push_back(h);
    const Entry& g = T[pick];
    Scalar c = F.div(h.p.t[0].coeff, g.p.t[0].coeff);
    Monomial m = h.p.t[0].mono / g.p.t[0].mono;
    h.a -= g.a.times(m, c);
    for (std::size_t j = 0; j < s; ++j) h.b[j] -= g.b[j].times(m, c);
    Polynomial hp = Polynomial::from_terms(F, n, h.p.t) - Polynomial::from_terms(F, n, g.p.t).times(m, c);
    h.p = convert(hp);
  }
  Division d;
  d.unit = h.a;
  d.remainder = Polynomial::from_terms(F, n, h.p.t);
  for (auto& q : h.b) d.quotients.push_back(-q);
  return d;
}

}  // namespace normalcone
