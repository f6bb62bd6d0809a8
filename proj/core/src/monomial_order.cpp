#include "normalcone/monomial_order.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace normalcone {

TermOrder::TermOrder(std::size_t nvars, std::vector<std::vector<int>> rows) : nvars_(nvars), rows_(std::move(rows)) {
  if (nvars > kMaxVars) throw std::length_error("too many variables");
  for (const auto& r : rows_)
    if (r.size() != nvars) throw std::invalid_argument("order row has wrong length");
  for (std::size_t i = 0; i < nvars; ++i) {
    std::vector<int> e(nvars, 0);
    e[i] = 1;
    rows_.push_back(std::move(e));
  }
}

TermOrder TermOrder::degrevlex(std::size_t n) {
  std::vector<std::vector<int>> rows{std::vector<int>(n, 1)};
  for (std::size_t i = n; i-- > 1;) {
    std::vector<int> r(n, 0);
    r[i] = -1;
    rows.push_back(r);
  }
  return TermOrder(n, rows);
}

TermOrder TermOrder::deglex(std::size_t n) { return TermOrder(n, {std::vector<int>(n, 1)}); }

TermOrder TermOrder::lex(std::size_t n) { return TermOrder(n, {}); }

TermOrder TermOrder::local_degrevlex(std::size_t n) {
  std::vector<std::vector<int>> rows{std::vector<int>(n, -1)};
  for (std::size_t i = n; i-- > 1;) {
    std::vector<int> r(n, 0);
    r[i] = -1;
    rows.push_back(r);
  }
  return TermOrder(n, rows);
}

TermOrder TermOrder::local_weighted(const std::vector<int>& w) {
  std::size_t n = w.size();
  std::vector<std::vector<int>> rows;
  std::vector<int> first(n);
  for (std::size_t i = 0; i < n; ++i) first[i] = -w[i];
  rows.push_back(first);
  auto ds = local_degrevlex(n);
  for (const auto& r : ds.rows()) rows.push_back(r);
  return TermOrder(n, rows);
}

TermOrder TermOrder::block(const TermOrder& first, const TermOrder& second) {
  std::size_t n1 = first.nvars_, n2 = second.nvars_, n = n1 + n2;
  std::vector<std::vector<int>> rows;
  for (const auto& r : first.rows_) {
    std::vector<int> row(n, 0);
    std::copy(r.begin(), r.end(), row.begin());
    rows.push_back(row);
  }
  for (const auto& r : second.rows_) {
    std::vector<int> row(n, 0);
    std::copy(r.begin(), r.end(), row.begin() + n1);
    rows.push_back(row);
  }
  return TermOrder(n, rows);
}

TermOrder TermOrder::reversed() const {
  std::vector<std::vector<int>> rows = rows_;
  for (auto& r : rows)
    for (auto& v : r) v = -v;
  return TermOrder(nvars_, rows);
}

int TermOrder::variable_sign(std::size_t i) const {
  for (const auto& r : rows_)
    if (r[i]) return r[i] > 0 ? 1 : -1;
  return 0;
}

bool TermOrder::is_global() const {
  for (std::size_t i = 0; i < nvars_; ++i)
    if (variable_sign(i) < 0) return false;
  return true;
}

bool TermOrder::is_local() const {
  for (std::size_t i = 0; i < nvars_; ++i)
    if (variable_sign(i) > 0) return false;
  return true;
}

namespace {

std::vector<std::size_t> checked_priority(std::size_t n, std::vector<std::size_t> p) {
  if (p.empty()) {
    p.resize(n);
    std::iota(p.begin(), p.end(), 0);
  }
  std::vector<std::size_t> s = p;
  std::sort(s.begin(), s.end());
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i] != i || s.size() != n) throw std::invalid_argument("variable priority is not a permutation");
  return p;
}

std::vector<int> unit(std::size_t n, std::size_t i, int v = 1) {
  std::vector<int> r(n, 0);
  r[i] = v;
  return r;
}

}  // namespace

MonomialOrder MonomialOrder::lex(std::size_t n, std::vector<std::size_t> priority) {
  MonomialOrder o;
  o.kind_ = Kind::Lex;
  o.nvars_ = n;
  o.priority_ = checked_priority(n, std::move(priority));
  std::vector<std::vector<int>> rows;
  for (auto v : o.priority_) rows.push_back(unit(n, v));
  o.matrix_ = TermOrder(n, rows);
  o.noetherian_ = n <= 1;
  return o;
}

MonomialOrder MonomialOrder::deglex(std::size_t n, std::vector<std::size_t> priority) {
  MonomialOrder o;
  o.kind_ = Kind::Deglex;
  o.nvars_ = n;
  o.priority_ = checked_priority(n, std::move(priority));
  std::vector<std::vector<int>> rows{std::vector<int>(n, 1)};
  for (auto v : o.priority_) rows.push_back(unit(n, v));
  o.matrix_ = TermOrder(n, rows);
  o.noetherian_ = true;
  return o;
}

MonomialOrder MonomialOrder::degrevlex(std::size_t n, std::vector<std::size_t> priority) {
  MonomialOrder o;
  o.kind_ = Kind::Degrevlex;
  o.nvars_ = n;
  o.priority_ = checked_priority(n, std::move(priority));
  std::vector<std::vector<int>> rows{std::vector<int>(n, 1)};
  for (std::size_t k = n; k-- > 1;) rows.push_back(unit(n, o.priority_[k], -1));
  o.matrix_ = TermOrder(n, rows);
  o.noetherian_ = true;
  return o;
}

MonomialOrder MonomialOrder::weighted(std::vector<int> weights, std::vector<std::size_t> priority) {
  MonomialOrder o;
  o.kind_ = Kind::Weighted;
  o.nvars_ = weights.size();
  o.priority_ = checked_priority(o.nvars_, std::move(priority));
  std::vector<std::vector<int>> rows{weights};
  for (auto v : o.priority_) rows.push_back(unit(o.nvars_, v));
  o.matrix_ = TermOrder(o.nvars_, rows);
  o.noetherian_ = std::all_of(weights.begin(), weights.end(), [](int w) { return w > 0; });
  o.weights_ = std::move(weights);
  return o;
}

MonomialOrder MonomialOrder::block(const MonomialOrder& first, const MonomialOrder& second) {
  MonomialOrder o;
  o.kind_ = Kind::Block;
  o.nvars_ = first.nvars_ + second.nvars_;
  o.priority_ = checked_priority(o.nvars_, {});
  o.matrix_ = TermOrder::block(first.matrix_, second.matrix_);
  // Two nonempty blocks: infinitely many monomials of the second block lie
  // below any variable of the first.
  o.noetherian_ = (first.nvars_ == 0 && second.noetherian_) || (second.nvars_ == 0 && first.noetherian_);
  return o;
}

std::string MonomialOrder::name() const {
  switch (kind_) {
    case Kind::Lex: return "lex";
    case Kind::Deglex: return "deglex";
    case Kind::Degrevlex: return "degrevlex";
    case Kind::Weighted: return "weighted";
    case Kind::Block: return "block";
  }
  return "?";
}

Ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.nvars() != nvars_ || b.nvars() != nvars_) throw std::invalid_argument("monomial dimension mismatch");
  return static_cast<Ordering>(matrix_.compare(a, b));
}

std::optional<std::vector<int>> MonomialOrder::positive_weight() const {
  const auto& r = matrix_.rows().front();
  if (std::all_of(r.begin(), r.end(), [](int w) { return w > 0; })) return r;
  return std::nullopt;
}

Ordering compare(const MonomialOrder& order, const Monomial& a, const Monomial& b) { return order.compare(a, b); }

bool is_noetherian(const MonomialOrder& order) { return order.noetherian(); }

Monomial smallest_monomial(const Polynomial& f, const MonomialOrder& order) {
  if (f.is_zero()) throw std::invalid_argument("smallest_monomial of the zero polynomial");
  if (!order.noetherian()) throw std::invalid_argument("smallest_monomial needs a Noetherian order");
  const Monomial* best = &f.terms().front().mono;
  for (const auto& t : f.terms())
    if (order.compare(t.mono, *best) == Ordering::LT) best = &t.mono;
  return *best;
}

}  // namespace normalcone
