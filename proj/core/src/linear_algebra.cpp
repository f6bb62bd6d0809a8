#include "normalcone/linear_algebra.hpp"

#include "normalcone/ideal.hpp"

namespace normalcone {

TruncatedSpace::TruncatedSpace(Field field, std::size_t nvars, int bound)
    : field_(field), nvars_(nvars), bound_(bound) {
  for (int d = 0; d < bound; ++d)
    for (const auto& m : monomials_of_degree(nvars, d)) index_.emplace(m, index_.size());
}

TruncatedSpace::Row TruncatedSpace::vectorize(const Polynomial& f) const {
  Row v(index_.size(), field_.zero());
  for (const auto& t : f.terms()) {
    if (static_cast<int>(t.mono.degree()) >= bound_) continue;
    v[index_.at(t.mono)] = t.coeff;
  }
  return v;
}

std::optional<std::size_t> TruncatedSpace::reduce(Row& v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const std::size_t p = pivots_[r];
    if (Field::is_zero(v[p])) continue;
    const Scalar c = v[p];
    for (std::size_t k = 0; k < v.size(); ++k)
      if (!Field::is_zero(rows_[r][k])) v[k] = field_.sub(v[k], field_.mul(c, rows_[r][k]));
  }
  for (std::size_t k = 0; k < v.size(); ++k)
    if (!Field::is_zero(v[k])) return k;
  return std::nullopt;
}

bool TruncatedSpace::add(const Polynomial& f) {
  Row v = vectorize(f);
  auto p = reduce(v);
  if (!p) return false;
  const Scalar inv = field_.inv(v[*p]);
  for (auto& c : v) c = field_.mul(c, inv);
  // Keep rows fully reduced so a single pass in reduce() suffices.
  for (auto& row : rows_) {
    if (Field::is_zero(row[*p])) continue;
    const Scalar c = row[*p];
    for (std::size_t k = *p; k < row.size(); ++k) row[k] = field_.sub(row[k], field_.mul(c, v[k]));
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(*p);
  return true;
}

bool TruncatedSpace::contains(const Polynomial& f) const {
  Row v = vectorize(f);
  return !reduce(v).has_value();
}

namespace {

TruncatedSpace multiples_space(const Field& field, std::size_t nvars, const std::vector<Polynomial>& gens, int bound) {
  TruncatedSpace space(field, nvars, bound);
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    const int low = g.low_degree();
    for (int d = 0; d + low < bound; ++d)
      for (const auto& m : monomials_of_degree(nvars, d)) space.add(g.times(m, field.one()));
  }
  return space;
}

}  // namespace

bool truncated_member(const Polynomial& f, const std::vector<Polynomial>& gens, int bound) {
  return multiples_space(f.field(), f.nvars(), gens, bound).contains(f);
}

long truncated_colength(const std::vector<Polynomial>& gens, std::size_t nvars, int bound) {
  if (gens.empty()) return static_cast<long>(TruncatedSpace(Field::rationals(), nvars, bound).ambient_dimension());
  auto space = multiples_space(gens.front().field(), nvars, gens, bound);
  return static_cast<long>(space.ambient_dimension() - space.dimension());
}

bool degree_bounded_member(const Polynomial& f, const std::vector<Polynomial>& gens, int degree) {
  TruncatedSpace space(f.field(), f.nvars(), degree + 1);
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    for (int d = 0; d + g.degree() <= degree; ++d)
      for (const auto& m : monomials_of_degree(f.nvars(), d)) space.add(g.times(m, f.field().one()));
  }
  if (f.degree() > degree) return false;
  return space.contains(f);
}

}  // namespace normalcone
