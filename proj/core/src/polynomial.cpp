#include "normalcone/polynomial.hpp"

#include <algorithm>
#include <unordered_map>

namespace normalcone {

Polynomial Polynomial::constant(Field field, std::size_t nvars, const Scalar& c) {
  Polynomial p(field, nvars);
  if (!Field::is_zero(c)) p.terms_.push_back({Monomial(nvars), c});
  return p;
}

Polynomial Polynomial::monomial(Field field, const Monomial& m, const Scalar& c) {
  Polynomial p(field, m.nvars());
  if (!Field::is_zero(c)) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::variable(Field field, std::size_t nvars, std::size_t i) {
  return monomial(field, Monomial::variable(nvars, i), field.one());
}

Polynomial Polynomial::from_terms(Field field, std::size_t nvars, std::vector<Term> terms) {
  Polynomial p(field, nvars);
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return degrevlex_cmp(a.mono, b.mono) > 0; });
  for (auto& t : terms) {
    Scalar c = field.from_rational(t.coeff);
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff = field.add(p.terms_.back().coeff, c);
    } else {
      if (!p.terms_.empty() && Field::is_zero(p.terms_.back().coeff)) p.terms_.pop_back();
      p.terms_.push_back({t.mono, std::move(c)});
    }
  }
  if (!p.terms_.empty() && Field::is_zero(p.terms_.back().coeff)) p.terms_.pop_back();
  return p;
}

int Polynomial::low_degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(terms_.back().mono.degree());
}

Scalar Polynomial::coefficient(const Monomial& m) const {
  for (const auto& t : terms_)
    if (t.mono == m) return t.coeff;
  return Scalar(0);
}

Scalar Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
  return Scalar(0);
}

Polynomial Polynomial::homogeneous_part(int d) const {
  Polynomial p(field_, nvars_);
  for (const auto& t : terms_)
    if (static_cast<int>(t.mono.degree()) == d) p.terms_.push_back(t);
  return p;
}

Polynomial Polynomial::jet(int n) const {
  Polynomial p(field_, nvars_);
  for (const auto& t : terms_)
    if (static_cast<int>(t.mono.degree()) <= n) p.terms_.push_back(t);
  return p;
}

Polynomial Polynomial::tail(int n) const {
  Polynomial p(field_, nvars_);
  for (const auto& t : terms_)
    if (static_cast<int>(t.mono.degree()) > n) p.terms_.push_back(t);
  return p;
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coeff = field_.neg(t.coeff);
  return p;
}

void Polynomial::add_scaled(const Polynomial& o, const Scalar& c) {
  if (o.terms_.empty()) return;
  if (terms_.empty() && nvars_ == 0) {
    field_ = o.field_;
    nvars_ = o.nvars_;
  }
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    int cmp;
    if (i == terms_.size()) cmp = -1;
    else if (j == o.terms_.size()) cmp = 1;
    else cmp = degrevlex_cmp(terms_[i].mono, o.terms_[j].mono);
    if (cmp > 0) {
      out.push_back(std::move(terms_[i++]));
    } else if (cmp < 0) {
      out.push_back({o.terms_[j].mono, field_.mul(o.terms_[j].coeff, c)});
      ++j;
    } else {
      Scalar s = field_.add(terms_[i].coeff, field_.mul(o.terms_[j].coeff, c));
      if (!Field::is_zero(s)) out.push_back({terms_[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  add_scaled(o, field_.one());
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (terms_.empty() && nvars_ == 0) {
    field_ = o.field_;
    nvars_ = o.nvars_;
  }
  add_scaled(o, field_.neg(field_.one()));
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  const Field& f = a.field_;
  std::unordered_map<Monomial, Scalar, MonomialHash> acc;
  acc.reserve(a.size() * b.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) {
      Monomial m = s.mono * t.mono;
      auto it = acc.find(m);
      if (it == acc.end()) acc.emplace(m, f.mul(s.coeff, t.coeff));
      else it->second = f.add(it->second, f.mul(s.coeff, t.coeff));
    }
  Polynomial p(f, a.nvars_ ? a.nvars_ : b.nvars_);
  p.terms_.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (!Field::is_zero(c)) p.terms_.push_back({m, std::move(c)});
  std::sort(p.terms_.begin(), p.terms_.end(),
            [](const Term& x, const Term& y) { return degrevlex_cmp(x.mono, y.mono) > 0; });
  return p;
}

Polynomial Polynomial::scaled(const Scalar& c) const {
  if (Field::is_zero(c)) return Polynomial(field_, nvars_);
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coeff = field_.mul(t.coeff, c);
  return p;
}

Polynomial Polynomial::times(const Monomial& m, const Scalar& c) const {
  if (Field::is_zero(c)) return Polynomial(field_, nvars_);
  Polynomial p(field_, nvars_);
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({t.mono * m, field_.mul(t.coeff, c)});
  return p;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial r = constant(field_, nvars_, field_.one());
  Polynomial b = *this;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  return scaled(field_.inv(terms_.front().coeff));
}

Polynomial Polynomial::remapped(std::size_t new_nvars, const std::vector<std::size_t>& map) const {
  std::vector<Term> ts;
  ts.reserve(terms_.size());
  for (const auto& t : terms_) ts.push_back({t.mono.remapped(new_nvars, map), t.coeff});
  return from_terms(field_, new_nvars, std::move(ts));
}

Polynomial Polynomial::extended(std::size_t new_nvars) const {
  std::vector<std::size_t> map(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i) map[i] = i;
  return remapped(new_nvars, map);
}

Polynomial Polynomial::truncated_vars(std::size_t new_nvars) const {
  Polynomial p(field_, new_nvars);
  for (const auto& t : terms_) {
    Monomial m(new_nvars);
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (i < new_nvars) m.set(i, t.mono[i]);
      else if (t.mono[i]) throw std::logic_error("truncated_vars: variable in use");
    }
    p.terms_.push_back({m, t.coeff});
  }
  return p;
}

Polynomial Polynomial::dehomogenized(std::size_t var) const {
  std::vector<Term> ts;
  ts.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m = t.mono;
    m.set(var, 0);
    ts.push_back({m, t.coeff});
  }
  return from_terms(field_, nvars_, std::move(ts));
}

bool Polynomial::uses_variable(std::size_t i) const {
  for (const auto& t : terms_)
    if (t.mono[i]) return true;
  return false;
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  if (!terms_.empty() && nvars_ != o.nvars_) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].mono != o.terms_[i].mono || terms_[i].coeff != o.terms_[i].coeff) return false;
  return true;
}

std::string monomial_to_string(const Monomial& m, const std::vector<std::string>& names) {
  std::string s;
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    if (!m[i]) continue;
    if (!s.empty()) s += "*";
    s += i < names.size() ? names[i] : "x" + std::to_string(i + 1);
    if (m[i] > 1) s += "^" + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : terms_) {
    mpq_class c = t.coeff;
    bool negative = sgn(c) < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) s += "-";
    } else {
      s += negative ? " - " : " + ";
    }
    first = false;
    if (t.mono.is_one()) {
      s += c.get_str();
    } else {
      if (c != 1) s += c.get_str() + "*";
      s += monomial_to_string(t.mono, names);
    }
  }
  return s;
}

}  // namespace normalcone
