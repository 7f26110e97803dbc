#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rslink/matrix.hpp"
#include "rslink/unipoly.hpp"

namespace rslink {

/// Bivariate polynomial Q(x, y) = sum_t Q^(t)(x) y^t, stored by y-component.
/// The highest component is nonzero unless Q is zero (no components).
class BiPoly {
 public:
  explicit BiPoly(const Field& f) : field_(f) {}
  BiPoly(const Field& f, std::vector<UniPoly> components);

  /// W(x) * (y - g(x))^s, expanded.
  static BiPoly power_of_linear(const UniPoly& w, const UniPoly& g, unsigned s);

  /// Splits a stacked coefficient vector into components t = 0..lengths.size()-1,
  /// component t taking the next lengths[t] entries (ascending x-degree).
  static BiPoly from_stacked(const Field& f, std::span<const std::uint32_t> v,
                             std::span<const std::size_t> lengths);
  /// Inverse of from_stacked. Throws if a component does not fit its length or
  /// the y-degree exceeds lengths.size() - 1.
  Residues to_stacked(std::span<const std::size_t> lengths) const;

  const Field& field() const noexcept { return field_; }
  bool is_zero() const noexcept { return comps_.empty(); }
  /// y-degree; kDegMinusInf for the zero polynomial.
  int ydeg() const noexcept {
    return comps_.empty() ? kDegMinusInf : static_cast<int>(comps_.size()) - 1;
  }
  /// Q^(t)(x); the zero polynomial when t > ydeg.
  UniPoly component(std::size_t t) const;
  std::span<const UniPoly> components() const noexcept { return comps_; }
  /// Coefficient of x^i y^t.
  std::uint32_t coeff(std::size_t i, std::size_t t) const noexcept;

  std::uint32_t eval(std::uint32_t x, std::uint32_t y) const noexcept;

  BiPoly scaled(std::uint32_t c) const;
  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(const BiPoly& a, const UniPoly& w);

  friend bool operator==(const BiPoly& a, const BiPoly& b) noexcept {
    return a.field_ == b.field_ && a.comps_ == b.comps_;
  }

 private:
  void trim();

  Field field_;
  std::vector<UniPoly> comps_;
};

/// b-th Hasse derivative in y: sum_{t>=b} C(t,b) Q^(t)(x) y^(t-b).
BiPoly hasse_y(const BiPoly& q, unsigned b);

/// Coefficient of u^a v^b in Q(x0 + u, y0 + v), from the closed form
/// sum C(i,a) C(t,b) q_{i,t} x0^(i-a) y0^(t-b).
std::uint32_t hasse_mixed(const BiPoly& q, unsigned a, unsigned b, std::uint32_t x0,
                          std::uint32_t y0);

/// max u*i + v*t over the support. Throws for the zero polynomial.
long weighted_degree(const BiPoly& q, long u, long v);

/// Q(x, g(x)).
UniPoly substitute_y(const BiPoly& q, const UniPoly& g);

/// Q(x + x0, y + y0), computed by Horner composition (no binomials).
BiPoly shift(const BiPoly& q, std::uint32_t x0, std::uint32_t y0);

enum class FactorStatus {
  ok,
  bad_shape,                 // ydeg(Q) != s or Q^(s) == 0
  characteristic_divides_s,  // q | s: f cannot be recovered by dividing by s
  inexact_division,          // s Q^(s) does not divide Q^(s-1)
  degree_bound,              // deg f >= k
  expansion_mismatch,        // Q != Q^(s) (y - f)^s
};

const char* to_string(FactorStatus s) noexcept;

struct PowerFactor {
  FactorStatus status;
  UniPoly locator;  // Q^(s)
  UniPoly info;     // f

  explicit operator bool() const noexcept { return status == FactorStatus::ok; }
};

/// Writes Q as Q^(s)(x) (y - f(x))^s with f = -Q^(s-1) / (s Q^(s)), and checks
/// the whole expansion, so a Q without that shape is reported, never
/// silently accepted.
PowerFactor extract_power_factor(const BiPoly& q, unsigned s, unsigned k);

}  // namespace rslink
