#include "rslink/unipoly.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace rslink {

UniPoly::UniPoly(const Field& f, std::vector<std::uint32_t> coeffs)
    : field_(f), c_(std::move(coeffs)) {
  for (auto v : c_)
    if (v >= f.q())
      throw Error(Errc::invalid_argument,
                  "coefficient " + std::to_string(v) + " is not a residue mod " +
                      std::to_string(f.q()));
  trim();
}

UniPoly UniPoly::constant(const Field& f, std::uint32_t c) {
  return UniPoly(f, {f.reduce(c)});
}

UniPoly UniPoly::monomial(const Field& f, unsigned degree, std::uint32_t coeff) {
  std::vector<std::uint32_t> c(degree + 1, 0);
  c[degree] = coeff % f.q();
  return UniPoly(f, std::move(c));
}

UniPoly UniPoly::linear(const Field& f, std::uint32_t root) {
  return UniPoly(f, {f.neg(f.reduce(root)), 1});
}

void UniPoly::trim() noexcept {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

void UniPoly::check_same(const UniPoly& o) const {
  if (!(field_ == o.field_))
    throw Error(Errc::field_mismatch, "polynomials over different fields");
}

std::uint32_t UniPoly::eval(std::uint32_t x) const noexcept {
  std::uint32_t acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it)
    acc = field_.add(field_.mul(acc, x), *it);
  return acc;
}

Elem UniPoly::operator()(const Elem& x) const {
  if (x.modulus() != field_.q())
    throw Error(Errc::field_mismatch, "evaluation point from a different field");
  return Elem(field_, eval(x.value()));
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(field_.inv(leading()));
}

UniPoly UniPoly::scaled(std::uint32_t c) const {
  UniPoly out(field_);
  out.c_.reserve(c_.size());
  for (auto v : c_) out.c_.push_back(field_.mul(v, c));
  out.trim();
  return out;
}

UniPoly UniPoly::pow(unsigned e) const {
  UniPoly result(field_, {1 % field_.q()});
  UniPoly base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

UniPoly UniPoly::shifted(std::uint32_t shift) const {
  // Horner in (x + shift): acc <- acc * (x + shift) + c_i.
  std::vector<std::uint32_t> acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    std::vector<std::uint32_t> next(acc.size() + 1, 0);
    for (std::size_t j = 0; j < acc.size(); ++j) {
      next[j + 1] = field_.add(next[j + 1], acc[j]);
      next[j] = field_.add(next[j], field_.mul(acc[j], shift));
    }
    next[0] = field_.add(next[0], *it);
    acc = std::move(next);
  }
  return UniPoly(field_, std::move(acc));
}

UniPoly UniPoly::operator-() const {
  UniPoly out = *this;
  for (auto& v : out.c_) v = field_.neg(v);
  return out;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  check_same(o);
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = field_.add(c_[i], o.c_[i]);
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  check_same(o);
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = field_.sub(c_[i], o.c_[i]);
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  a.check_same(b);
  if (a.is_zero() || b.is_zero()) return UniPoly(a.field_);
  const Field& f = a.field_;
  std::vector<std::uint32_t> c(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      c[i + j] = f.add(c[i + j], f.mul(a.c_[i], b.c_[j]));
  }
  return UniPoly(f, std::move(c));
}

UniPoly operator*(const UniPoly& a, const Elem& c) {
  if (c.modulus() != a.field_.q())
    throw Error(Errc::field_mismatch, "scalar from a different field");
  return a.scaled(c.value());
}

DivRem divrem(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw Error(Errc::division_by_zero, "polynomial division by zero");
  if (!(a.field() == b.field()))
    throw Error(Errc::field_mismatch, "polynomials over different fields");
  const Field& f = a.field();
  if (a.degree() < b.degree()) return {UniPoly(f), a};

  std::vector<std::uint32_t> rem(a.coeffs().begin(), a.coeffs().end());
  const auto db = static_cast<std::size_t>(b.degree());
  const std::size_t dq = rem.size() - 1 - db;
  std::vector<std::uint32_t> quot(dq + 1, 0);
  const std::uint32_t lead_inv = f.inv(b.leading());
  for (std::size_t i = dq + 1; i-- > 0;) {
    const std::uint32_t c = f.mul(rem[i + db], lead_inv);
    quot[i] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= db; ++j)
      rem[i + j] = f.sub(rem[i + j], f.mul(c, b.coeff(j)));
  }
  rem.resize(db);
  return {UniPoly(f, std::move(quot)), UniPoly(f, std::move(rem))};
}

UniPoly lagrange_interpolate(
    const Field& f, std::span<const std::pair<std::uint32_t, std::uint32_t>> points) {
  std::set<std::uint32_t> seen;
  std::vector<std::uint32_t> xs;
  for (const auto& [x, y] : points) {
    if (x >= f.q() || y >= f.q())
      throw Error(Errc::invalid_argument, "interpolation point is not a residue");
    if (!seen.insert(x).second)
      throw Error(Errc::invalid_argument,
                  "duplicate interpolation abscissa " + std::to_string(x));
    xs.push_back(x);
  }
  const UniPoly g = locator_poly(f, xs);
  UniPoly result(f);
  for (const auto& [x, y] : points) {
    if (y == 0) continue;
    // g / (x - x_i) is the numerator of the i-th basis polynomial.
    UniPoly basis = divrem(g, UniPoly::linear(f, x)).quotient;
    const std::uint32_t denom = basis.eval(x);
    result += basis.scaled(f.div(y, denom));
  }
  return result;
}

UniPoly locator_poly(const Field& f, std::span<const std::uint32_t> roots) {
  std::vector<std::uint32_t> c{1 % f.q()};
  std::set<std::uint32_t> seen;
  for (auto root : roots) {
    if (root >= f.q()) throw Error(Errc::invalid_argument, "root is not a residue");
    if (!seen.insert(root).second)
      throw Error(Errc::invalid_argument, "duplicate root " + std::to_string(root));
    // Multiply by (x - root).
    c.push_back(0);
    for (std::size_t j = c.size() - 1; j > 0; --j)
      c[j] = f.sub(c[j - 1], f.mul(c[j], root));
    c[0] = f.neg(f.mul(c[0], root));
  }
  return UniPoly(f, std::move(c));
}

}  // namespace rslink
