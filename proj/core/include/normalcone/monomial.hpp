#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace normalcone {

/// Upper bound on variables in any ring, including auxiliary variables
/// introduced by elimination (Rees variables, the intersection variable).
inline constexpr std::size_t kMaxVars = 20;
using Exponent = std::uint16_t;
inline constexpr std::uint32_t kMaxExponent = 0xFFFF;

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : n_(static_cast<std::uint8_t>(check_nvars(nvars))) {}
  Monomial(std::initializer_list<int> exps) : Monomial(std::vector<int>(exps)) {}
  explicit Monomial(const std::vector<int>& exps) : Monomial(exps.size()) {
    for (std::size_t i = 0; i < exps.size(); ++i) set(i, exps[i]);
  }

  static Monomial variable(std::size_t nvars, std::size_t i, int power = 1) {
    Monomial m(nvars);
    m.set(i, power);
    return m;
  }

  std::size_t nvars() const { return n_; }
  std::uint32_t degree() const { return deg_; }
  Exponent operator[](std::size_t i) const { return e_[i]; }
  bool is_one() const { return deg_ == 0; }

  void set(std::size_t i, long v) {
    if (v < 0 || v > static_cast<long>(kMaxExponent)) throw std::overflow_error("exponent out of range");
    deg_ = deg_ - e_[i] + static_cast<std::uint32_t>(v);
    e_[i] = static_cast<Exponent>(v);
  }

  bool divides(const Monomial& o) const {
    if (deg_ > o.deg_) return false;
    for (std::size_t i = 0; i < n_; ++i)
      if (e_[i] > o.e_[i]) return false;
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i) {
      std::uint32_t s = std::uint32_t(a.e_[i]) + b.e_[i];
      if (s > kMaxExponent) throw std::overflow_error("exponent overflow");
      r.e_[i] = static_cast<Exponent>(s);
    }
    r.deg_ = a.deg_ + b.deg_;
    return r;
  }

  /// a / b; requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial r(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i) r.e_[i] = static_cast<Exponent>(a.e_[i] - b.e_[i]);
    r.deg_ = a.deg_ - b.deg_;
    return r;
  }

  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i) {
      r.e_[i] = a.e_[i] > b.e_[i] ? a.e_[i] : b.e_[i];
      r.deg_ += r.e_[i];
    }
    return r;
  }

  static bool coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.n_; ++i)
      if (a.e_[i] && b.e_[i]) return false;
    return true;
  }

  /// Copy with variables remapped: slot i goes to position map[i] of a
  /// monomial with new_nvars variables.
  Monomial remapped(std::size_t new_nvars, const std::vector<std::size_t>& map) const {
    Monomial r(new_nvars);
    for (std::size_t i = 0; i < n_; ++i)
      if (e_[i]) r.set(map[i], e_[i]);
    return r;
  }

  bool operator==(const Monomial& o) const {
    if (deg_ != o.deg_ || n_ != o.n_) return false;
    for (std::size_t i = 0; i < n_; ++i)
      if (e_[i] != o.e_[i]) return false;
    return true;
  }
  bool operator!=(const Monomial& o) const { return !(*this == o); }

  std::size_t hash() const {
    std::size_t h = 1469598103934665603ull;
    for (std::size_t i = 0; i < n_; ++i) h = (h ^ e_[i]) * 1099511628211ull;
    return h;
  }

 private:
  static std::size_t check_nvars(std::size_t n) {
    if (n > kMaxVars) throw std::length_error("too many variables");
    return n;
  }

  std::array<Exponent, kMaxVars> e_{};
  std::uint32_t deg_ = 0;
  std::uint8_t n_ = 0;
};

/// Degree reverse lexicographic comparison with x_1 > ... > x_n;
/// the canonical internal order for stored polynomials. Returns -1, 0, 1.
inline int degrevlex_cmp(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
  for (std::size_t i = a.nvars(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace normalcone
