#include "rslink/field.hpp"

#include <string>

namespace rslink {

bool is_prime(std::uint32_t v) noexcept {
  if (v < 2) return false;
  if (v % 2 == 0) return v == 2;
  for (std::uint32_t d = 3; d * d <= v; d += 2)
    if (v % d == 0) return false;
  return true;
}

namespace {

std::vector<std::uint32_t> prime_factors(std::uint32_t v) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t d = 2; d * d <= v; ++d) {
    if (v % d == 0) {
      out.push_back(d);
      while (v % d == 0) v /= d;
    }
  }
  if (v > 1) out.push_back(v);
  return out;
}

}  // namespace

Field::Field(std::uint32_t q, std::optional<std::uint32_t> alpha)
    : q_(q), primitive_(1) {
  if (q > kMaxModulus || !is_prime(q))
    throw Error(Errc::invalid_argument,
                "field modulus " + std::to_string(q) +
                    " is not a prime in [2, 65536]");
  if (alpha) {
    if (*alpha <= 1 && q != 2)
      throw Error(Errc::invalid_argument, "primitive element must satisfy 1 < alpha < q");
    if (*alpha >= q || *alpha == 0)
      throw Error(Errc::invalid_argument, "primitive element out of range");
    if (order(*alpha) != q - 1)
      throw Error(Errc::invalid_argument,
                  std::to_string(*alpha) + " is not a primitive element of GF(" +
                      std::to_string(q) + ")");
    primitive_ = *alpha;
    return;
  }
  if (q == 2) return;
  // g is primitive iff g^((q-1)/p) != 1 for every prime p | q-1.
  const auto factors = prime_factors(q - 1);
  for (std::uint32_t g = 2; g < q; ++g) {
    bool ok = true;
    for (auto p : factors)
      if (pow(g, (q - 1) / p) == 1) {
        ok = false;
        break;
      }
    if (ok) {
      primitive_ = g;
      return;
    }
  }
}

Elem Field::primitive() const { return Elem(*this, primitive_); }
Elem Field::zero() const { return Elem(*this, 0); }
Elem Field::one() const { return Elem(*this, 1); }
Elem Field::elem(std::int64_t v) const { return Elem(*this, reduce(v)); }

std::uint32_t Field::inv(std::uint32_t a) const {
  if (a % q_ == 0) throw Error(Errc::division_by_zero, "inverse of zero");
  return pow(a, q_ - 2);
}

std::uint32_t Field::pow(std::uint32_t a, std::uint64_t e) const noexcept {
  std::uint32_t result = 1 % q_;
  std::uint32_t base = a % q_;
  while (e) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

std::uint32_t Field::order(std::uint32_t a) const {
  if (a % q_ == 0) throw Error(Errc::invalid_argument, "order of zero");
  std::uint32_t ord = 1;
  for (std::uint32_t x = a % q_; x != 1; x = mul(x, a)) ++ord;
  return ord;
}

Elem::Elem(const Field& f, std::uint32_t residue) : v_(residue), q_(f.q()) {
  if (residue >= q_)
    throw Error(Errc::invalid_argument,
                "residue " + std::to_string(residue) + " not in [0, " +
                    std::to_string(q_) + ")");
}

void Elem::check_same(const Elem& o) const {
  if (q_ != o.q_)
    throw Error(Errc::field_mismatch, "elements from GF(" + std::to_string(q_) +
                                          ") and GF(" + std::to_string(o.q_) +
                                          ") cannot be combined");
}

Elem Elem::inverse() const {
  if (v_ == 0) throw Error(Errc::division_by_zero, "inverse of zero");
  return pow(q_ - 2);
}

Elem Elem::pow(std::uint64_t e) const {
  std::uint32_t result = 1 % q_;
  std::uint32_t base = v_;
  while (e) {
    if (e & 1) result = (result * base) % q_;
    base = (base * base) % q_;
    e >>= 1;
  }
  return Elem(result, q_);
}

Elem Elem::operator-() const { return Elem(v_ == 0 ? 0 : q_ - v_, q_); }

Elem& Elem::operator+=(const Elem& o) {
  check_same(o);
  v_ += o.v_;
  if (v_ >= q_) v_ -= q_;
  return *this;
}

Elem& Elem::operator-=(const Elem& o) {
  check_same(o);
  v_ = v_ >= o.v_ ? v_ - o.v_ : v_ + q_ - o.v_;
  return *this;
}

Elem& Elem::operator*=(const Elem& o) {
  check_same(o);
  v_ = (v_ * o.v_) % q_;
  return *this;
}

Elem& Elem::operator/=(const Elem& o) {
  check_same(o);
  return *this *= o.inverse();
}

Binomials::Binomials(const Field& f, unsigned max_n) : max_n_(max_n) {
  rows_.resize(max_n + 1);
  rows_[0] = {1 % f.q()};
  for (unsigned n = 1; n <= max_n; ++n) {
    auto& row = rows_[n];
    row.assign(n + 1, 0);
    row[0] = row[n] = 1 % f.q();
    for (unsigned k = 1; k < n; ++k)
      row[k] = f.add(rows_[n - 1][k - 1], rows_[n - 1][k]);
  }
}

std::uint32_t Binomials::operator()(unsigned n, unsigned k) const {
  if (n > max_n_)
    throw Error(Errc::invalid_argument, "binomial table too small");
  return k > n ? 0 : rows_[n][k];
}

}  // namespace rslink
