#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "rslink/field.hpp"

namespace rslink {

/// Degree of the zero polynomial. Compares below every real degree, so
/// bounds such as `deg p < k` hold for p == 0 without special cases.
inline constexpr int kDegMinusInf = std::numeric_limits<int>::min();

/// Dense univariate polynomial over GF(q), ascending coefficients. The
/// coefficient vector never carries trailing zeros.
class UniPoly {
 public:
  explicit UniPoly(const Field& f) : field_(f) {}
  /// Residues must already be canonical; trailing zeros are stripped.
  UniPoly(const Field& f, std::vector<std::uint32_t> coeffs);

  static UniPoly constant(const Field& f, std::uint32_t c);
  static UniPoly monomial(const Field& f, unsigned degree, std::uint32_t coeff = 1);
  /// The polynomial x - root.
  static UniPoly linear(const Field& f, std::uint32_t root);

  const Field& field() const noexcept { return field_; }
  int degree() const noexcept {
    return c_.empty() ? kDegMinusInf : static_cast<int>(c_.size()) - 1;
  }
  bool is_zero() const noexcept { return c_.empty(); }
  /// Zero beyond the degree.
  std::uint32_t coeff(std::size_t i) const noexcept {
    return i < c_.size() ? c_[i] : 0;
  }
  Elem coefficient(std::size_t i) const { return Elem(field_, coeff(i)); }
  std::uint32_t leading() const noexcept { return c_.empty() ? 0 : c_.back(); }
  std::span<const std::uint32_t> coeffs() const noexcept { return c_; }

  std::uint32_t eval(std::uint32_t x) const noexcept;
  Elem operator()(const Elem& x) const;

  UniPoly monic() const;
  UniPoly scaled(std::uint32_t c) const;
  UniPoly pow(unsigned e) const;
  /// p(x + shift), by repeated Horner steps.
  UniPoly shifted(std::uint32_t shift) const;

  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const Elem& c);

  friend bool operator==(const UniPoly& a, const UniPoly& b) noexcept {
    return a.field_ == b.field_ && a.c_ == b.c_;
  }

 private:
  void trim() noexcept;
  void check_same(const UniPoly& o) const;

  Field field_;
  std::vector<std::uint32_t> c_;
};

struct DivRem {
  UniPoly quotient;
  UniPoly remainder;
};

/// a = quotient * b + remainder with deg remainder < deg b. Throws
/// Error(division_by_zero) when b == 0.
DivRem divrem(const UniPoly& a, const UniPoly& b);

/// Polynomial of degree < points.size() through every point. Throws
/// Error(invalid_argument) on duplicate x-coordinates.
UniPoly lagrange_interpolate(const Field& f,
                             std::span<const std::pair<std::uint32_t, std::uint32_t>> points);

/// Monic polynomial prod (x - root). Duplicate roots are rejected.
UniPoly locator_poly(const Field& f, std::span<const std::uint32_t> roots);

}  // namespace rslink
