#include "normalcone/adic.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "normalcone/errors.hpp"

namespace normalcone {

namespace {

std::vector<Polynomial> concat(std::vector<Polynomial> a, const std::vector<Polynomial>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

std::vector<Polynomial> products(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b) {
  std::vector<Polynomial> out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a)
    for (const auto& y : b) out.push_back(x * y);
  return out;
}

/// Monic copies without duplicates or zeros.
std::vector<Polynomial> dedupe(const std::vector<Polynomial>& v) {
  std::vector<Polynomial> out;
  for (const auto& g : v) {
    if (g.is_zero()) continue;
    Polynomial m = g.monic();
    if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(std::move(m));
  }
  return out;
}

/// Greedy selection of candidates independent modulo base (as ideals of R),
/// followed by a removal pass, so the result is irredundant.
std::vector<Polynomial> irredundant_picks(const Ring& R, const std::vector<Polynomial>& base,
                                          const std::vector<Polynomial>& candidates) {
  Ideal current(R, base);
  std::vector<Polynomial> picks;
  for (const auto& c : candidates) {
    if (current.contains(c)) continue;
    picks.push_back(c);
    current = Ideal(R, concat(base, picks));
  }
  for (std::size_t k = picks.size(); k-- > 0;) {
    std::vector<Polynomial> others = base;
    for (std::size_t j = 0; j < picks.size(); ++j)
      if (j != k) others.push_back(picks[j]);
    if (Ideal(R, others).contains(picks[k])) picks.erase(picks.begin() + static_cast<long>(k));
  }
  return picks;
}

void sort_candidates(std::vector<Polynomial>& v) {
  std::stable_sort(v.begin(), v.end(), [](const Polynomial& a, const Polynomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.size() < b.size();
  });
}

struct TangentData {
  StandardBasis gb;               // reduced degrevlex GB of in_m(K)
  std::vector<Polynomial> minimal;
};

TangentData tangent_data(const Ring& R) {
  std::vector<Polynomial> forms;
  for (const auto& k : R->relations()) forms.push_back(k.lowest_form());
  TangentData d;
  d.gb = StandardBasis::compute(forms, TermOrder::degrevlex(R->nvars()));
  std::vector<Polynomial> sorted = d.gb.elements();
  sort_candidates(sorted);
  std::vector<Polynomial> kept;
  for (const auto& g : sorted) {
    if (!kept.empty() && StandardBasis::compute(kept, TermOrder::degrevlex(R->nvars())).contains(g)) continue;
    kept.push_back(g);
  }
  d.minimal = kept;
  return d;
}

/// Class of c in gr_n(R) for J = m, as a reduced monic homogeneous form.
Polynomial form_of(const Ring& R, const Polynomial& c, int n, const TangentData& td) {
  Polynomial r = c;
  if (R->is_quotient()) r = Ideal::zero(R).standard_basis().normal_form(c);
  Polynomial h = r.homogeneous_part(n);
  if (R->is_quotient()) h = td.gb.reduced_form(h);
  return h.monic();
}

}  // namespace

bool is_maximal_ideal(const Ideal& J) {
  const Ring& R = J.ring();
  if (J.is_unit()) return false;
  for (std::size_t i = 0; i < R->nvars(); ++i)
    if (!J.contains(R->var(i))) return false;
  return true;
}

bool is_m_primary(const Ideal& J, const Ideal& I) { return colength(ideal_sum(J, I)).has_value(); }

std::vector<Polynomial> tangent_cone_relations(const Ring& R) { return tangent_data(R).minimal; }

int order_of(const Polynomial& f, const Ideal& J) {
  const Ring& R = J.ring();
  if (Ideal::zero(R).contains(f)) throw PreconditionError("order of an element that is zero in R");
  if (J.is_unit()) throw PreconditionError("order with respect to the unit ideal");
  int n = 0;
  for (;;) {
    R->certify(n + 1, "order_of");
    if (!J.power(n + 1).contains(f)) return n;
    ++n;
  }
}

InitialForm initial_form(const Polynomial& f, const Ideal& J) {
  const Ring& R = J.ring();
  InitialForm out;
  if (Ideal::zero(R).contains(f)) {
    out.representative = R->zero();
    return out;
  }
  out.degree = order_of(f, J);
  out.representative = f;
  if (is_maximal_ideal(J)) out.form = form_of(R, f, out.degree, tangent_data(R));
  return out;
}

std::vector<Polynomial> InitialIdeal::generators_in_degree(int n) const {
  std::vector<Polynomial> out;
  for (const auto& g : generators)
    if (g.degree == n) out.push_back(g.representative);
  return out;
}

InitialIdeal initial_ideal_levels(const Ideal& I, const Ideal& J1, const LevelFn& level, int n_max) {
  const Ring& R = I.ring();
  if (!R->same_ambient(*J1.ring())) throw PreconditionError("ideals live in different rings");
  R->certify(n_max, "initial ideal");
  InitialIdeal out;
  out.ideal = I;
  out.filtration = J1;
  out.level = level;
  out.method = "degreewise";
  out.checked_through = n_max;
  const auto& cover_I = I.compact_cover_generators();
  const auto& K = R->relations();
  std::vector<std::vector<Polynomial>> found;
  for (int n = 0; n <= n_max; ++n) {
    std::vector<Polynomial> Cn =
        n == 0 ? cover_I : cover_intersection(concat(level(n), K), cover_I, R->field(), R->nvars());
    sort_candidates(Cn);
    std::vector<Polynomial> base = level(n + 1);
    for (int t = 0; t < n; ++t)
      if (!found[t].empty()) {
        auto p = products(level(n - t), found[t]);
        base.insert(base.end(), p.begin(), p.end());
      }
    base = dedupe(base);
    auto picks = irredundant_picks(R, base, Cn);
    for (const auto& c : picks) {
      out.generators.push_back(InitialGenerator{n, c, std::nullopt});
      out.top_degree = n;
    }
    found.push_back(std::move(picks));
  }
  return out;
}

namespace {

LevelFn adic_levels(const Ideal& J) {
  return [J](int n) { return n == 0 ? std::vector<Polynomial>{J.ring()->one()} : J.power_generators(n); };
}

}  // namespace

InitialIdeal initial_ideal_degreewise(const Ideal& I, const Ideal& J, int n_max) {
  InitialIdeal out = initial_ideal_levels(I, J, adic_levels(J), n_max);
  if (is_maximal_ideal(J)) {
    TangentData td = tangent_data(I.ring());
    for (auto& g : out.generators) g.form = form_of(I.ring(), g.representative, g.degree, td);
  }
  return out;
}

InitialIdeal initial_ideal_tangent_cone(const Ideal& I) {
  const Ring& R = I.ring();
  Ideal m = Ideal::maximal(R);
  InitialIdeal out;
  out.ideal = I;
  out.filtration = m;
  out.level = adic_levels(m);
  out.method = "tangent-cone";
  out.certified = true;
  TangentData td = tangent_data(R);
  const auto& sb = I.standard_basis();
  struct Cand {
    Polynomial rep, form;
    int degree;
  };
  std::vector<Cand> cands;
  for (const auto& g : sb.elements()) {
    int d = g.low_degree();
    Polynomial f = g.lowest_form();
    if (R->is_quotient()) f = td.gb.reduced_form(f);
    if (f.is_zero()) continue;
    cands.push_back({g, f.monic(), d});
  }
  std::stable_sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) { return a.degree < b.degree; });
  const TermOrder grevlex = TermOrder::degrevlex(R->nvars());
  auto member = [&](const std::vector<std::size_t>& idx, const Polynomial& f) {
    std::vector<Polynomial> gens = td.gb.elements();
    for (auto k : idx) gens.push_back(cands[k].form);
    return StandardBasis::compute(gens, grevlex).contains(f);
  };
  std::vector<std::size_t> kept;
  for (std::size_t k = 0; k < cands.size(); ++k)
    if (!member(kept, cands[k].form)) kept.push_back(k);
  for (std::size_t a = kept.size(); a-- > 0;) {
    std::vector<std::size_t> others;
    for (std::size_t b = 0; b < kept.size(); ++b)
      if (b != a) others.push_back(kept[b]);
    if (member(others, cands[kept[a]].form)) kept.erase(kept.begin() + static_cast<long>(a));
  }
  for (auto k : kept) {
    out.generators.push_back({cands[k].degree, cands[k].rep, cands[k].form});
    out.top_degree = std::max(out.top_degree, cands[k].degree);
  }
  out.checked_through = out.top_degree;
  return out;
}

ReesIdealPresentation rees_ideal(const Ideal& I, const Ideal& J) {
  if (!I.ring()->same_ambient(*J.ring())) throw PreconditionError("ideals live in different rings");
  if (J.gens().empty()) throw PreconditionError("rees_ideal needs generators of J");
  std::vector<std::pair<Polynomial, int>> rg;
  for (const auto& g : J.gens()) rg.push_back({g, 1});
  return rees_ideal_graded(I, rg);
}

ReesIdealPresentation rees_ideal_graded(const Ideal& I, const std::vector<std::pair<Polynomial, int>>& rees_gens) {
  const Ring& R = I.ring();
  if (rees_gens.empty()) throw PreconditionError("rees_ideal needs generators");
  const std::size_t n = R->nvars(), s = rees_gens.size(), N = n + s + 1;
  if (N > kMaxVars) throw ResourceExceeded("rees_ideal: too many auxiliary variables");
  const Field& F = R->field();
  const TermOrder ds = TermOrder::local_degrevlex(n);
  std::vector<int> weight(s);
  for (std::size_t i = 0; i < s; ++i) {
    if (rees_gens[i].second < 1) throw PreconditionError("rees_ideal: generator degrees must be positive");
    weight[i] = rees_gens[i].second;
  }
  auto y_weight = [&](const Monomial& m) {
    std::size_t e = 0;
    for (std::size_t i = 0; i < s; ++i) e += static_cast<std::size_t>(weight[i]) * m[n + i];
    return e;
  };

  // Variables: x (0..n-1), y (n..n+s-1), t (n+s).
  std::vector<std::vector<int>> rows;
  std::vector<int> trow(N, 0);
  trow[n + s] = 1;
  rows.push_back(trow);
  std::vector<int> yrow(N, 0);
  for (std::size_t i = 0; i < s; ++i) yrow[n + i] = weight[i];
  rows.push_back(yrow);
  for (const auto& r : ds.rows()) {
    std::vector<int> row(N, 0);
    std::copy(r.begin(), r.end(), row.begin());
    rows.push_back(row);
  }
  const TermOrder elim(N, rows);

  std::vector<Polynomial> rel;
  Polynomial t = Polynomial::variable(F, N, n + s);
  for (std::size_t i = 0; i < s; ++i)
    rel.push_back(Polynomial::variable(F, N, n + i) - rees_gens[i].first.extended(N) * t.pow(weight[i]));
  auto eliminate_t = [&](const std::vector<Polynomial>& base) {
    std::vector<Polynomial> gens = rel;
    for (const auto& b : base) gens.push_back(b.extended(N));
    auto sb = StandardBasis::compute(gens, elim);
    std::vector<Polynomial> out;
    for (const auto& e : sb.elements())
      if (!e.uses_variable(n + s)) out.push_back(e.truncated_vars(n + s));
    return out;
  };

  ReesIdealPresentation P;
  P.base_vars = n;
  P.rees_vars = s;
  P.generators = eliminate_t(I.compact_cover_generators());
  P.relations = eliminate_t(R->relations());

  // Graded minimal generators over P_loc[y] modulo the relations.
  std::vector<std::vector<int>> rows2;
  std::vector<int> yrow2(n + s, 0);
  for (std::size_t i = 0; i < s; ++i) yrow2[n + i] = weight[i];
  rows2.push_back(yrow2);
  for (const auto& r : ds.rows()) {
    std::vector<int> row(n + s, 0);
    std::copy(r.begin(), r.end(), row.begin());
    rows2.push_back(row);
  }
  const TermOrder graded(n + s, rows2);
  std::map<std::size_t, std::vector<Polynomial>> by_degree;
  for (const auto& q : P.generators) {
    const std::size_t d = y_weight(q.terms().front().mono);
    for (const auto& term : q.terms())
      if (y_weight(term.mono) != d) throw InternalInconsistency("rees_ideal: generator not homogeneous in y");
    by_degree[d].push_back(q);
  }
  std::vector<Polynomial> lower = P.relations;
  for (auto& [d, gens] : by_degree) {
    sort_candidates(gens);
    std::vector<Polynomial> picks;
    auto sb = StandardBasis::compute(lower, graded);
    for (const auto& c : gens) {
      if (sb.contains(c)) continue;
      picks.push_back(c);
      sb = StandardBasis::compute(concat(lower, picks), graded);
    }
    for (std::size_t k = picks.size(); k-- > 0;) {
      std::vector<Polynomial> others = lower;
      for (std::size_t j = 0; j < picks.size(); ++j)
        if (j != k) others.push_back(picks[j]);
      if (StandardBasis::compute(others, graded).contains(picks[k])) picks.erase(picks.begin() + static_cast<long>(k));
    }
    if (!picks.empty()) {
      P.minimal_degrees.push_back({static_cast<int>(d), static_cast<int>(picks.size())});
      P.top_degree = static_cast<int>(d);
    }
    lower.insert(lower.end(), gens.begin(), gens.end());
  }
  return P;
}

InitialIdeal initial_ideal(const Ideal& I, const Ideal& J) {
  auto rees = rees_ideal(I, J);
  const int d = rees.top_degree;
  I.ring()->certify(d + 2, "initial ideal certification");
  InitialIdeal in = initial_ideal_degreewise(I, J, d + 2);
  if (in.top_degree != d)
    throw InternalInconsistency("initial ideal: degreewise top degree " + std::to_string(in.top_degree) +
                                " differs from Rees degree " + std::to_string(d));
  in.rees_degree = d;
  in.certified = true;
  return in;
}

ArtinReesResult artin_rees(const Ideal& I, const Ideal& J) {
  InitialIdeal in = initial_ideal(I, J);
  ArtinReesResult r;
  r.rees_route = *in.rees_degree;
  r.degreewise_route = in.top_degree;
  r.value = in.top_degree;
  if (is_maximal_ideal(J)) {
    r.tangent_cone_route = initial_ideal_tangent_cone(I).top_degree;
    if (*r.tangent_cone_route != r.value)
      throw InternalInconsistency("artin_rees: tangent-cone route disagrees");
  }
  return r;
}

Ideal initial_component(const InitialIdeal& in, int n) {
  std::vector<Polynomial> gens = in.level(n + 1);
  for (const auto& g : in.generators)
    if (g.degree <= n) {
      auto p = products(in.level(n - g.degree), {g.representative});
      gens.insert(gens.end(), p.begin(), p.end());
    }
  return Ideal(in.filtration.ring(), dedupe(gens));
}

std::optional<int> first_difference(const InitialIdeal& a, const InitialIdeal& b, int through) {
  for (int n = 0; n <= through; ++n)
    if (!ideal_equal(initial_component(a, n), initial_component(b, n))) return n;
  return std::nullopt;
}

bool initial_ideals_equal(const InitialIdeal& a, const InitialIdeal& b) {
  return !first_difference(a, b, std::max(a.top_degree, b.top_degree)).has_value();
}

bool initial_ideal_matches(const InitialIdeal& in, const std::vector<Polynomial>& forms) {
  const Ring& R = in.ideal.ring();
  TangentData td = tangent_data(R);
  const TermOrder grevlex = TermOrder::degrevlex(R->nvars());
  std::vector<Polynomial> mine = td.gb.elements(), theirs = td.gb.elements();
  for (const auto& g : in.generators) {
    if (!g.form) throw PreconditionError("initial_ideal_matches needs J = m");
    mine.push_back(*g.form);
  }
  for (const auto& f : forms) theirs.push_back(f);
  return StandardBasis::compute(mine, grevlex).elements() == StandardBasis::compute(theirs, grevlex).elements();
}

AssociatedGraded assoc_graded(const Ideal& I, const Ideal& J) {
  AssociatedGraded out;
  out.initial = initial_ideal(I, J);
  const Ring& R = I.ring();
  std::vector<std::string> upper;
  for (auto name : R->names()) {
    for (auto& ch : name) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    upper.push_back(name);
  }
  std::string vars;
  for (std::size_t i = 0; i < upper.size(); ++i) vars += (i ? "," : "") + upper[i];
  if (is_maximal_ideal(J)) {
    out.ambient_relations = tangent_cone_relations(R);
    out.description = "k[" + vars + "]";
  } else {
    Ring cover = R->cover();
    Ideal Kc(cover, R->relations());
    Ideal Jc(cover, J.gens());
    if (!R->relations().empty()) {
      auto inK = initial_ideal(Kc, Jc);
      for (const auto& g : inK.generators) out.ambient_relations.push_back(g.representative);
    }
    out.description = "gr_J(k[" + vars + "])";
  }
  if (!out.ambient_relations.empty()) {
    out.description += "/(";
    for (std::size_t i = 0; i < out.ambient_relations.size(); ++i)
      out.description += (i ? ", " : "") + out.ambient_relations[i].to_string(upper);
    out.description += ")";
  }
  return out;
}

std::optional<int> annihilation_index(const Ideal& N, const Ideal& D, const Ideal& J) {
  const Ring& R = D.ring();
  if (D.contains(N)) return 0;
  Ideal S = saturation(D, J);
  if (!S.contains(N)) return std::nullopt;
  const auto& sbD = D.standard_basis();
  std::vector<Polynomial> X;
  for (const auto& g : N.gens()) X.push_back(sbD.normal_form(g));
  X = dedupe(X);
  for (int n = 1;; ++n) {
    R->certify(n, "annihilation index");
    std::vector<Polynomial> next;
    for (const auto& x : X)
      for (const auto& j : J.gens()) next.push_back(sbD.normal_form(x * j));
    next = dedupe(next);
    if (next.empty()) return n;
    if (next.size() > 24) {
      auto sb = StandardBasis::compute(concat(D.cover_generators(), next), R->local_order());
      std::vector<Polynomial> kept;
      for (const auto& e : sb.elements())
        if (!sbD.contains(e)) kept.push_back(e);
      next = dedupe(kept);
    }
    X = std::move(next);
  }
}

std::optional<int> a_index(const Ideal& A, const Polynomial& f, const Ideal& J) {
  return annihilation_index(ideal_quotient(A, f), A, J);
}

NumericalFunctionTable hilbert_samuel(const Ideal& I, const Ideal& J, int n_max) {
  if (!is_m_primary(J, I)) throw PreconditionError("hilbert_samuel needs an m-primary J");
  I.ring()->certify(n_max, "hilbert_samuel window");
  NumericalFunctionTable t;
  t.kind = NumericalFunctionTable::Kind::HilbertSamuel;
  for (int n = 0; n <= n_max; ++n) {
    auto c = colength(Ideal(I.ring(), concat(I.gens(), J.power_generators(n))));
    if (!c) throw InternalInconsistency("hilbert_samuel: infinite colength for m-primary J");
    t.hs.push_back(*c);
  }
  return t;
}

std::vector<long> graded_lengths(const NumericalFunctionTable& hs) {
  std::vector<long> out;
  for (std::size_t n = 0; n + 1 < hs.hs.size(); ++n) out.push_back(hs.hs[n + 1] - hs.hs[n]);
  return out;
}

NumericalFunctionTable achilles_manaresi(const Ideal& I, const Ideal& J, int r_max, int s_max) {
  const Ring& R = I.ring();
  R->certify(r_max + s_max + 1, "achilles_manaresi window");
  NumericalFunctionTable t;
  t.kind = NumericalFunctionTable::Kind::AchillesManaresi;
  t.am_lengths.assign(r_max + 1, std::vector<long>(s_max + 1, 0));
  for (int v = 0; v <= s_max; ++v) {
    const auto& Jv = J.power_generators(v);
    const auto& Jv1 = J.power_generators(v + 1);
    for (int u = 0; u <= r_max; ++u) {
      std::vector<Polynomial> mu, mu1;
      for (const auto& m : monomials_of_degree(R->nvars(), u)) mu.push_back(R->monomial(m));
      for (const auto& m : monomials_of_degree(R->nvars(), u + 1)) mu1.push_back(R->monomial(m));
      std::vector<Polynomial> denom = concat(I.gens(), Jv1);
      auto lower = products(mu1, Jv);
      denom.insert(denom.end(), lower.begin(), lower.end());
      denom = dedupe(denom);
      auto span = dedupe(products(mu, Jv));
      sort_candidates(span);
      // G_uv is killed by m, so its length is the number of spanning
      // elements independent modulo the denominator.
      Ideal current(R, denom);
      long count = 0;
      for (const auto& c : span) {
        if (current.contains(c)) continue;
        ++count;
        denom.push_back(c);
        current = Ideal(R, denom);
      }
      t.am_lengths[u][v] = count;
    }
  }
  t.am_sums.assign(r_max + 1, std::vector<long>(s_max + 1, 0));
  for (int r = 0; r <= r_max; ++r)
    for (int s = 0; s <= s_max; ++s) {
      long h = t.am_lengths[r][s];
      if (r) h += t.am_sums[r - 1][s];
      if (s) h += t.am_sums[r][s - 1];
      if (r && s) h -= t.am_sums[r - 1][s - 1];
      t.am_sums[r][s] = h;
    }
  return t;
}

MultiplicitySequence multiplicity_sequence(const NumericalFunctionTable& am) {
  MultiplicitySequence out;
  if (am.am_sums.empty()) return out;
  const int R = static_cast<int>(am.am_sums.size()) - 1;
  const int S = static_cast<int>(am.am_sums[0].size()) - 1;
  auto diff = [&](int a, int b) {
    std::vector<std::vector<long>> t = am.am_sums;
    for (int k = 0; k < a; ++k) {
      std::vector<std::vector<long>> n(t.size() - 1, std::vector<long>(t[0].size()));
      for (std::size_t r = 0; r + 1 < t.size(); ++r)
        for (std::size_t s = 0; s < t[0].size(); ++s) n[r][s] = t[r + 1][s] - t[r][s];
      t = std::move(n);
    }
    for (int k = 0; k < b; ++k) {
      std::vector<std::vector<long>> n(t.size(), std::vector<long>(t[0].size() - 1));
      for (std::size_t r = 0; r < t.size(); ++r)
        for (std::size_t s = 0; s + 1 < t[0].size(); ++s) n[r][s] = t[r][s + 1] - t[r][s];
      t = std::move(n);
    }
    return t;
  };
  for (int d = 0; d <= R + S; ++d) {
    bool ok = true;
    std::vector<Rational> c(d + 1);
    for (int b = 0; b <= d && ok; ++b) {
      int a = d - b;
      if (a > R - 2 || b > S - 2) {
        ok = false;
        break;
      }
      auto t = diff(a, b);
      int rr = R - a, ss = S - b;
      long v = t[rr][ss];
      ok = t[rr - 1][ss] == v && t[rr - 2][ss] == v && t[rr][ss - 1] == v && t[rr][ss - 2] == v;
      c[b] = Rational(v);
    }
    if (ok) {
      out.c = c;
      out.d = d;
      out.stable = true;
      return out;
    }
  }
  return out;
}

Multiplicity multiplicity_from_table(const NumericalFunctionTable& hs) {
  std::vector<long> v = hs.hs;
  for (int k = 0; v.size() >= 3; ++k) {
    std::size_t z = v.size();
    if (v[z - 1] == v[z - 2] && v[z - 2] == v[z - 3]) return {v[z - 1], k};
    std::vector<long> d;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) d.push_back(v[i + 1] - v[i]);
    v = std::move(d);
  }
  throw PreconditionError("multiplicity: Hilbert-Samuel table too small to stabilize");
}

Multiplicity multiplicity_hs(const Ideal& I, const Ideal& J, int n_max) {
  return multiplicity_from_table(hilbert_samuel(I, J, n_max));
}

}  // namespace normalcone
