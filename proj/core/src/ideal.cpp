#include "normalcone/ideal.hpp"

#include <algorithm>
#include <bit>
#include <functional>

#include "normalcone/errors.hpp"

namespace normalcone {

namespace {

void require_same(const Ideal& a, const Ideal& b) {
  if (!a.ring()->same_ambient(*b.ring())) throw PreconditionError("ideals live in different rings");
}

/// Drops zeros and duplicate generators (up to scalar).
std::vector<Polynomial> clean(std::vector<Polynomial> gens) {
  std::vector<Polynomial> out;
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    Polynomial m = g.monic();
    if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(std::move(m));
  }
  return out;
}

}  // namespace

Ideal::Ideal(Ring ring, std::vector<Polynomial> gens) : ring_(std::move(ring)) {
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    if (g.nvars() != ring_->nvars() || g.field() != ring_->field())
      throw PreconditionError("generator does not live in the ring");
    gens_.push_back(std::move(g));
  }
}

Ideal Ideal::unit(Ring ring) {
  auto one = ring->one();
  return Ideal(std::move(ring), {one});
}

Ideal Ideal::maximal(Ring ring) {
  std::vector<Polynomial> g;
  for (std::size_t i = 0; i < ring->nvars(); ++i) g.push_back(ring->var(i));
  return Ideal(std::move(ring), std::move(g));
}

std::vector<Polynomial> Ideal::cover_generators() const {
  std::vector<Polynomial> g = gens_;
  for (const auto& k : ring_->relations()) g.push_back(k);
  return g;
}

const std::vector<Polynomial>& Ideal::compact_cover_generators() const {
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    if (cache_->compact) return *cache_->compact;
  }
  auto out = std::make_shared<std::vector<Polynomial>>();
  const auto& sb = standard_basis();
  const std::size_t n = ring_->nvars();
  const auto leads = minimalize_monomials(sb.leading_monomials());
  int bound = 0;
  std::vector<bool> pure(n, false);
  for (const auto& m : leads)
    for (std::size_t v = 0; v < n; ++v)
      if (m.degree() == m[v]) {
        pure[v] = true;
        bound += static_cast<int>(m[v]);
      }
  if (sb.is_unit()) {
    out->push_back(ring_->one());
  } else if (std::all_of(pure.begin(), pure.end(), [](bool b) { return b; })) {
    // Least k with every monomial of degree k a multiple of a lead.
    int k = 0;
    for (;; ++k) {
      bool all = true;
      for (const auto& m : monomials_of_degree(n, k)) {
        if (std::none_of(leads.begin(), leads.end(), [&](const Monomial& l) { return l.divides(m); })) {
          all = false;
          break;
        }
      }
      if (all || k > bound) break;
    }
    for (const auto& g : sb.elements()) {
      Polynomial j = g.jet(k - 1);
      if (!j.is_zero()) out->push_back(std::move(j));
    }
    for (const auto& m : monomials_of_degree(n, k)) out->push_back(ring_->monomial(m));
  } else {
    *out = cover_generators();
  }
  std::lock_guard<std::mutex> lock(cache_->mu);
  if (!cache_->compact) cache_->compact = out;
  return *cache_->compact;
}

const StandardBasis& Ideal::standard_basis(const TermOrder& order, SbMethod method) const {
  auto key = std::make_pair(order, static_cast<int>(method));
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->bases.find(key);
    if (it != cache_->bases.end()) return *it->second;
  }
  auto sb = std::make_shared<const StandardBasis>(StandardBasis::compute(cover_generators(), order, method));
  std::lock_guard<std::mutex> lock(cache_->mu);
  auto [it, inserted] = cache_->bases.emplace(key, sb);
  return *it->second;
}

bool Ideal::contains(const Polynomial& f) const {
  if (f.is_zero()) return true;
  return standard_basis().contains(f);
}

bool Ideal::contains(const Ideal& o) const {
  require_same(*this, o);
  for (const auto& g : o.gens())
    if (!contains(g)) return false;
  return true;
}

bool Ideal::is_zero() const {
  if (gens_.empty()) return true;
  if (!ring_->is_quotient()) return false;
  Ideal k(ring_, {});
  for (const auto& g : gens_)
    if (!k.contains(g)) return false;
  return true;
}

const Ideal& Ideal::power(int n) const {
  if (n < 0) throw PreconditionError("negative power");
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->powers.find(n);
    if (it != cache_->powers.end()) return *it->second;
  }
  std::vector<Polynomial> result;
  if (n == 0) {
    result.push_back(ring_->one());
  } else {
    // Products over multisets of generator indices, built level by level.
    std::vector<std::pair<Polynomial, std::size_t>> level;
    for (std::size_t i = 0; i < gens_.size(); ++i) level.push_back({gens_[i], i});
    for (int d = 1; d < n; ++d) {
      std::vector<std::pair<Polynomial, std::size_t>> next;
      for (const auto& [p, last] : level)
        for (std::size_t i = last; i < gens_.size(); ++i) next.push_back({p * gens_[i], i});
      level = std::move(next);
    }
    for (auto& [p, last] : level) result.push_back(std::move(p));
    result = clean(std::move(result));
  }
  auto ptr = std::make_shared<const Ideal>(ring_, std::move(result));
  std::lock_guard<std::mutex> lock(cache_->mu);
  auto [it, inserted] = cache_->powers.emplace(n, ptr);
  return *it->second;
}

std::string Ideal::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) s += (i ? ", " : "") + gens_[i].to_string(ring_->names());
  return s + ")";
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  require_same(a, b);
  std::vector<Polynomial> g = a.gens();
  g.insert(g.end(), b.gens().begin(), b.gens().end());
  return Ideal(a.ring(), clean(std::move(g)));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  require_same(a, b);
  std::vector<Polynomial> g;
  for (const auto& x : a.gens())
    for (const auto& y : b.gens()) g.push_back(x * y);
  return Ideal(a.ring(), clean(std::move(g)));
}

Ideal ideal_power(const Ideal& j, int n) { return j.power(n); }

std::vector<Polynomial> cover_intersection(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b,
                                           const Field& field, std::size_t n) {
  if (a.empty() || b.empty()) return {};
  if (n + 1 > kMaxVars) throw std::length_error("too many variables for intersection");
  // t is the last variable, global; the rest keep the local degree order.
  std::vector<std::vector<int>> rows;
  std::vector<int> tr(n + 1, 0);
  tr[n] = 1;
  rows.push_back(tr);
  const TermOrder ds = TermOrder::local_degrevlex(n);
  for (const auto& r : ds.rows()) {
    std::vector<int> row(r);
    row.push_back(0);
    rows.push_back(row);
  }
  TermOrder ord(n + 1, rows);
  Polynomial t = Polynomial::variable(field, n + 1, n);
  Polynomial one_minus_t = Polynomial::constant(field, n + 1, field.one()) - t;
  std::vector<Polynomial> gens;
  for (const auto& g : a) gens.push_back(g.extended(n + 1) * t);
  for (const auto& g : b) gens.push_back(g.extended(n + 1) * one_minus_t);
  // P[t]/(t^2 - t) = P x P, so adding t^2 - t keeps the contraction A ∩ B
  // while bounding t-degrees by 1.
  gens.push_back(t * t - t);
  auto sb = StandardBasis::compute(gens, ord);
  std::vector<Polynomial> out;
  for (const auto& g : sb.elements())
    if (!g.uses_variable(n)) out.push_back(g.truncated_vars(n));
  return out;
}

Ideal ideal_intersection(const Ideal& a, const Ideal& b) {
  require_same(a, b);
  if (a.is_unit()) return b;
  if (b.is_unit()) return a;
  const Ring& R = a.ring();
  auto g = cover_intersection(a.cover_generators(), b.cover_generators(), R->field(), R->nvars());
  return Ideal(R, clean(std::move(g)));
}

Ideal ideal_quotient(const Ideal& a, const Polynomial& f0) {
  const Ring& R = a.ring();
  if (a.contains(f0)) return Ideal::unit(R);
  // A : f = A : (u*f + g) for a unit u and g in A; the weak normal form is
  // usually much sparser.
  Polynomial f = a.standard_basis().normal_form(f0);
  if (f.size() > f0.size()) f = f0;
  auto inter = cover_intersection(a.cover_generators(), {f}, R->field(), R->nvars());
  std::vector<Polynomial> q;
  for (const auto& h : inter) {
    Division d = divide(h, {f}, R->local_order());
    if (!d.remainder.is_zero()) throw InternalInconsistency("colon: element of (f) not divisible by f");
    q.push_back(d.quotients[0]);
  }
  return Ideal(R, clean(std::move(q)));
}

Ideal ideal_quotient(const Ideal& a, const Ideal& b) {
  require_same(a, b);
  std::optional<Ideal> acc;
  for (const auto& g : b.gens()) {
    Ideal c = ideal_quotient(a, g);
    acc = acc ? ideal_intersection(*acc, c) : c;
  }
  if (!acc) return Ideal::unit(a.ring());
  return *acc;
}

Ideal saturation(const Ideal& a, const Ideal& b) {
  require_same(a, b);
  Ideal s = a;
  for (int k = 0;; ++k) {
    if (k > a.ring()->cap()) throw ResourceExceeded("saturation did not stabilize within the cap");
    Ideal next = ideal_quotient(s, b);
    if (s.contains(next)) return s;
    s = next;
  }
}

Ideal eliminate(const Ideal& i, const std::vector<std::size_t>& vars) {
  const Ring& R = i.ring();
  std::size_t n = R->nvars();
  std::vector<int> e(n, 0);
  for (auto v : vars) {
    if (v >= n) throw PreconditionError("eliminate: variable index out of range");
    e[v] = 1;
  }
  std::vector<std::vector<int>> rows{e};
  for (const auto& r : R->local_order().rows()) rows.push_back(r);
  TermOrder ord(n, rows);
  const auto& sb = i.standard_basis(ord);
  std::vector<Polynomial> out;
  for (const auto& g : sb.elements()) {
    bool free = std::none_of(vars.begin(), vars.end(), [&](std::size_t v) { return g.uses_variable(v); });
    if (free) out.push_back(g);
  }
  return Ideal(R, std::move(out));
}

bool ideal_member(const Polynomial& f, const Ideal& i) { return i.contains(f); }

bool ideal_equal(const Ideal& a, const Ideal& b) { return a.contains(b) && b.contains(a); }

int krull_dimension(const Ideal& i) {
  const auto& sb = i.standard_basis();
  if (sb.is_unit()) return -1;
  const std::size_t n = i.ring()->nvars();
  const auto leads = minimalize_monomials(sb.leading_monomials());
  // Largest set of variables supporting no leading monomial.
  int best = 0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    const int size = std::popcount(mask);
    if (size <= best) continue;
    bool free = true;
    for (const auto& m : leads) {
      bool inside = true;
      for (std::size_t v = 0; v < n && inside; ++v)
        if (m[v] > 0 && !(mask >> v & 1u)) inside = false;
      if (inside) {
        free = false;
        break;
      }
    }
    if (free) best = size;
  }
  return best;
}

std::optional<long> colength(const Ideal& i) {
  const auto& sb = i.standard_basis();
  if (sb.is_unit()) return 0;
  std::size_t n = i.ring()->nvars();
  std::vector<Monomial> leads = minimalize_monomials(sb.leading_monomials());
  std::vector<int> bound(n, -1);
  for (const auto& m : leads)
    for (std::size_t v = 0; v < n; ++v)
      if (m.degree() == m[v] && (bound[v] < 0 || m[v] < bound[v])) bound[v] = m[v];
  long box = 1;
  for (std::size_t v = 0; v < n; ++v) {
    if (bound[v] < 0) return std::nullopt;
    box *= bound[v];
    if (box > 50'000'000) throw ResourceExceeded("colength: staircase too large");
  }
  long count = 0;
  Monomial m(n);
  std::function<void(std::size_t)> rec = [&](std::size_t v) {
    if (v == n) {
      for (const auto& l : leads)
        if (l.divides(m)) return;
      ++count;
      return;
    }
    for (int e = 0; e < bound[v]; ++e) {
      m.set(v, e);
      // Early exit: if m (with later slots zero) is already in the lead ideal,
      // so is every extension.
      bool in = false;
      for (const auto& l : leads)
        if (l.divides(m)) {
          in = true;
          break;
        }
      if (in) break;
      rec(v + 1);
    }
    m.set(v, 0);
  };
  rec(0);
  return count;
}

Ideal lift_to_cover(const Ideal& i) { return Ideal(i.ring()->cover(), i.cover_generators()); }

std::vector<Monomial> monomials_of_degree(std::size_t n, int degree) {
  std::vector<Monomial> out;
  if (degree < 0) return out;
  Monomial m(n);
  std::function<void(std::size_t, int)> rec = [&](std::size_t v, int left) {
    if (v + 1 == n) {
      m.set(v, left);
      out.push_back(m);
      m.set(v, 0);
      return;
    }
    for (int e = left; e >= 0; --e) {
      m.set(v, e);
      rec(v + 1, left - e);
    }
    m.set(v, 0);
  };
  if (n == 0) {
    if (degree == 0) out.push_back(m);
    return out;
  }
  rec(0, degree);
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) { return degrevlex_cmp(a, b) > 0; });
  return out;
}

}  // namespace normalcone
