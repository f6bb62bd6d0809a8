#include "normalcone/ring.hpp"

#include <stdexcept>

#include "normalcone/errors.hpp"
#include "normalcone/standard_basis.hpp"

namespace normalcone {

Ring RingContext::make(Field field, std::vector<std::string> names, std::vector<Polynomial> relations,
                       std::optional<int> trunc_cap) {
  if (names.empty()) throw PreconditionError("ring needs at least one variable");
  if (names.size() > kMaxVars / 2) throw PreconditionError("too many ring variables");
  if (trunc_cap && *trunc_cap < 1) throw PreconditionError("trunc cap must be positive");
  auto r = std::make_shared<RingContext>();
  r->field_ = field;
  r->names_ = std::move(names);
  r->trunc_cap_ = trunc_cap;
  r->local_order_ = TermOrder::local_degrevlex(r->names_.size());
  for (auto& p : relations) {
    if (p.is_zero()) continue;
    if (p.nvars() != r->names_.size() || p.field() != field)
      throw PreconditionError("relation does not live in the declared ring");
    r->declared_.push_back(p);
  }
  if (!r->declared_.empty()) {
    auto sb = StandardBasis::compute(r->declared_, r->local_order_);
    if (sb.is_unit()) throw PreconditionError("relations generate the unit ideal");
    r->relations_ = sb.elements();
    r->global_relations_ = StandardBasis::compute(r->declared_, TermOrder::degrevlex(r->names_.size()));
  }
  return r;
}

void RingContext::certify(int degree, const std::string& what) const {
  if (degree >= cap())
    throw TruncationCapExceeded(what + " needs degree " + std::to_string(degree) + " but the cap is " +
                                std::to_string(cap()));
}

Ring RingContext::cover() const {
  auto r = std::make_shared<RingContext>(*this);
  r->relations_.clear();
  r->declared_.clear();
  return r;
}

Ring RingContext::with_cap(std::optional<int> cap) const {
  auto r = std::make_shared<RingContext>(*this);
  r->trunc_cap_ = cap;
  return r;
}

bool RingContext::same_ambient(const RingContext& o) const {
  return field_ == o.field_ && names_.size() == o.names_.size() && relations_ == o.relations_;
}

std::string RingContext::to_string() const {
  std::string s = field_.name() + "[";
  for (std::size_t i = 0; i < names_.size(); ++i) s += (i ? "," : "") + names_[i];
  s += "]";
  if (!declared_.empty()) {
    s += "/(";
    for (std::size_t i = 0; i < declared_.size(); ++i) s += (i ? ", " : "") + declared_[i].to_string(names_);
    s += ")";
  }
  return s;
}

}  // namespace normalcone
