#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rslink/error.hpp"

namespace rslink {

class Elem;

/// Prime field GF(q), 2 <= q <= 2^16.
///
/// A Field is a small value type: copying it is as cheap as copying two
/// integers. Residue-level kernels (add/mul/... on raw uint32 values in
/// [0, q)) are exposed so that polynomial and matrix code can work on packed
/// residue vectors; Elem wraps them for element-wise use.
///
/// Because q <= 2^16, every product of two residues fits in 32 bits.
class Field {
 public:
  static constexpr std::uint32_t kMaxModulus = 1u << 16;

  /// Throws Error(invalid_argument) if q is not prime, or if alpha is given
  /// and is not a primitive element. Without alpha, the smallest primitive
  /// element is selected.
  explicit Field(std::uint32_t q, std::optional<std::uint32_t> alpha = {});

  std::uint32_t q() const noexcept { return q_; }
  std::uint32_t primitive_residue() const noexcept { return primitive_; }

  Elem primitive() const;
  Elem zero() const;
  Elem one() const;
  /// Reduces any integer (negative allowed) to its canonical residue.
  Elem elem(std::int64_t v) const;

  std::uint32_t reduce(std::int64_t v) const noexcept {
    std::int64_t r = v % static_cast<std::int64_t>(q_);
    return static_cast<std::uint32_t>(r < 0 ? r + q_ : r);
  }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept {
    std::uint32_t s = a + b;
    return s >= q_ ? s - q_ : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept {
    return a >= b ? a - b : a + q_ - b;
  }
  std::uint32_t neg(std::uint32_t a) const noexcept {
    return a == 0 ? 0 : q_ - a;
  }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
    return (a * b) % q_;
  }
  /// Throws Error(division_by_zero) for a == 0.
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t div(std::uint32_t a, std::uint32_t b) const {
    return mul(a, inv(b));
  }
  /// pow(0, 0) == 1.
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const noexcept;

  /// Multiplicative order of a nonzero residue.
  std::uint32_t order(std::uint32_t a) const;

  friend bool operator==(const Field& a, const Field& b) noexcept {
    return a.q_ == b.q_;
  }

 private:
  std::uint32_t q_;
  std::uint32_t primitive_;
};

bool is_prime(std::uint32_t v) noexcept;

/// Element of a prime field. Mixing elements of different fields throws
/// Error(field_mismatch).
class Elem {
 public:
  Elem(const Field& f, std::uint32_t residue);

  std::uint32_t value() const noexcept { return v_; }
  std::uint32_t modulus() const noexcept { return q_; }
  bool is_zero() const noexcept { return v_ == 0; }

  Elem inverse() const;
  Elem pow(std::uint64_t e) const;

  Elem operator-() const;
  Elem& operator+=(const Elem& o);
  Elem& operator-=(const Elem& o);
  Elem& operator*=(const Elem& o);
  Elem& operator/=(const Elem& o);

  friend Elem operator+(Elem a, const Elem& b) { return a += b; }
  friend Elem operator-(Elem a, const Elem& b) { return a -= b; }
  friend Elem operator*(Elem a, const Elem& b) { return a *= b; }
  friend Elem operator/(Elem a, const Elem& b) { return a /= b; }

  friend bool operator==(const Elem& a, const Elem& b) noexcept {
    return a.v_ == b.v_ && a.q_ == b.q_;
  }

 private:
  Elem(std::uint32_t v, std::uint32_t q) : v_(v), q_(q) {}
  void check_same(const Elem& o) const;

  std::uint32_t v_;
  std::uint32_t q_;
};

inline Elem inverse(const Elem& a) { return a.inverse(); }

/// Binomial coefficients C(n, k) mod q for 0 <= k <= n <= max_n, built by the
/// Pascal recurrence so no factorials are formed and small characteristics
/// are handled exactly.
class Binomials {
 public:
  Binomials(const Field& f, unsigned max_n);

  /// Zero when k > n.
  std::uint32_t operator()(unsigned n, unsigned k) const;
  unsigned max_n() const noexcept { return max_n_; }

 private:
  unsigned max_n_;
  std::vector<std::vector<std::uint32_t>> rows_;
};

}  // namespace rslink
