#include "rslink/bivariate.hpp"

#include <algorithm>
#include <string>

namespace rslink {

BiPoly::BiPoly(const Field& f, std::vector<UniPoly> components)
    : field_(f), comps_(std::move(components)) {
  for (const auto& c : comps_)
    if (!(c.field() == f)) throw Error(Errc::field_mismatch, "component from a different field");
  trim();
}

void BiPoly::trim() {
  while (!comps_.empty() && comps_.back().is_zero()) comps_.pop_back();
}

BiPoly BiPoly::power_of_linear(const UniPoly& w, const UniPoly& g, unsigned s) {
  const Field& f = w.field();
  BiPoly lin(f, {-g, UniPoly::constant(f, 1)});
  BiPoly acc(f, {w});
  for (unsigned i = 0; i < s; ++i) acc = acc * lin;
  return acc;
}

BiPoly BiPoly::from_stacked(const Field& f, std::span<const std::uint32_t> v,
                            std::span<const std::size_t> lengths) {
  std::size_t total = 0;
  for (auto l : lengths) total += l;
  if (total != v.size())
    throw Error(Errc::invalid_argument, "stacked vector length does not match block lengths");
  std::vector<UniPoly> comps;
  std::size_t pos = 0;
  for (auto l : lengths) {
    comps.emplace_back(f, std::vector<std::uint32_t>(v.begin() + pos, v.begin() + pos + l));
    pos += l;
  }
  return BiPoly(f, std::move(comps));
}

Residues BiPoly::to_stacked(std::span<const std::size_t> lengths) const {
  if (ydeg() >= static_cast<int>(lengths.size()))
    throw Error(Errc::invalid_argument, "y-degree exceeds the block layout");
  Residues out;
  for (std::size_t t = 0; t < lengths.size(); ++t) {
    const UniPoly c = component(t);
    if (c.degree() >= static_cast<int>(lengths[t]))
      throw Error(Errc::invalid_argument,
                  "component " + std::to_string(t) + " exceeds its degree bound");
    for (std::size_t i = 0; i < lengths[t]; ++i) out.push_back(c.coeff(i));
  }
  return out;
}

UniPoly BiPoly::component(std::size_t t) const {
  return t < comps_.size() ? comps_[t] : UniPoly(field_);
}

std::uint32_t BiPoly::coeff(std::size_t i, std::size_t t) const noexcept {
  return t < comps_.size() ? comps_[t].coeff(i) : 0;
}

std::uint32_t BiPoly::eval(std::uint32_t x, std::uint32_t y) const noexcept {
  std::uint32_t acc = 0;
  for (auto it = comps_.rbegin(); it != comps_.rend(); ++it)
    acc = field_.add(field_.mul(acc, y), it->eval(x));
  return acc;
}

BiPoly BiPoly::scaled(std::uint32_t c) const {
  std::vector<UniPoly> comps;
  for (const auto& p : comps_) comps.push_back(p.scaled(c));
  return BiPoly(field_, std::move(comps));
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  if (!(field_ == o.field_)) throw Error(Errc::field_mismatch, "polynomials over different fields");
  if (o.comps_.size() > comps_.size()) comps_.resize(o.comps_.size(), UniPoly(field_));
  for (std::size_t t = 0; t < o.comps_.size(); ++t) comps_[t] += o.comps_[t];
  trim();
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  if (!(field_ == o.field_)) throw Error(Errc::field_mismatch, "polynomials over different fields");
  if (o.comps_.size() > comps_.size()) comps_.resize(o.comps_.size(), UniPoly(field_));
  for (std::size_t t = 0; t < o.comps_.size(); ++t) comps_[t] -= o.comps_[t];
  trim();
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  if (!(a.field_ == b.field_)) throw Error(Errc::field_mismatch, "polynomials over different fields");
  if (a.is_zero() || b.is_zero()) return BiPoly(a.field_);
  std::vector<UniPoly> comps(a.comps_.size() + b.comps_.size() - 1, UniPoly(a.field_));
  for (std::size_t i = 0; i < a.comps_.size(); ++i)
    for (std::size_t j = 0; j < b.comps_.size(); ++j)
      comps[i + j] += a.comps_[i] * b.comps_[j];
  return BiPoly(a.field_, std::move(comps));
}

BiPoly operator*(const BiPoly& a, const UniPoly& w) {
  std::vector<UniPoly> comps;
  for (const auto& c : a.comps_) comps.push_back(c * w);
  return BiPoly(a.field_, std::move(comps));
}

BiPoly hasse_y(const BiPoly& q, unsigned b) {
  const Field& f = q.field();
  if (q.ydeg() < static_cast<int>(b)) return BiPoly(f);
  const auto top = static_cast<unsigned>(q.ydeg());
  const Binomials binom(f, top);
  std::vector<UniPoly> comps;
  for (unsigned t = b; t <= top; ++t) comps.push_back(q.component(t).scaled(binom(t, b)));
  return BiPoly(f, std::move(comps));
}

std::uint32_t hasse_mixed(const BiPoly& q, unsigned a, unsigned b, std::uint32_t x0,
                          std::uint32_t y0) {
  const Field& f = q.field();
  if (q.is_zero()) return 0;
  int xdeg = 0;
  for (const auto& c : q.components()) xdeg = std::max(xdeg, c.degree());
  const Binomials binom(f, static_cast<unsigned>(std::max(xdeg, q.ydeg())));

  std::uint32_t acc = 0;
  for (unsigned t = b; t <= static_cast<unsigned>(q.ydeg()); ++t) {
    const UniPoly& comp = q.components()[t];
    std::uint32_t inner = 0;
    for (int i = static_cast<int>(a); i <= comp.degree(); ++i) {
      const std::uint32_t c = comp.coeff(i);
      if (c == 0) continue;
      inner = f.add(inner, f.mul(f.mul(c, binom(i, a)), f.pow(x0, i - a)));
    }
    acc = f.add(acc, f.mul(inner, f.mul(binom(t, b), f.pow(y0, t - b))));
  }
  return acc;
}

long weighted_degree(const BiPoly& q, long u, long v) {
  if (q.is_zero()) throw Error(Errc::invalid_argument, "weighted degree of the zero polynomial");
  bool first = true;
  long best = 0;
  for (std::size_t t = 0; t < q.components().size(); ++t) {
    const UniPoly& c = q.components()[t];
    for (int i = 0; i <= c.degree(); ++i) {
      if (c.coeff(i) == 0) continue;
      const long w = u * i + v * static_cast<long>(t);
      if (first || w > best) best = w;
      first = false;
    }
  }
  return best;
}

UniPoly substitute_y(const BiPoly& q, const UniPoly& g) {
  UniPoly acc(q.field());
  for (auto it = q.components().rbegin(); it != q.components().rend(); ++it)
    acc = acc * g + *it;
  return acc;
}

BiPoly shift(const BiPoly& q, std::uint32_t x0, std::uint32_t y0) {
  const Field& f = q.field();
  const BiPoly lin(f, {UniPoly::constant(f, y0), UniPoly::constant(f, 1)});
  BiPoly acc(f);
  for (auto it = q.components().rbegin(); it != q.components().rend(); ++it)
    acc = acc * lin + BiPoly(f, {it->shifted(x0)});
  return acc;
}

const char* to_string(FactorStatus s) noexcept {
  switch (s) {
    case FactorStatus::ok: return "ok";
    case FactorStatus::bad_shape: return "y-degree does not match s";
    case FactorStatus::characteristic_divides_s: return "field characteristic divides s";
    case FactorStatus::inexact_division: return "s*Q^(s) does not divide Q^(s-1)";
    case FactorStatus::degree_bound: return "recovered f violates deg f < k";
    case FactorStatus::expansion_mismatch: return "Q is not Q^(s)*(y-f)^s";
  }
  return "unknown";
}

PowerFactor extract_power_factor(const BiPoly& q, unsigned s, unsigned k) {
  const Field& f = q.field();
  PowerFactor out{FactorStatus::ok, UniPoly(f), UniPoly(f)};
  if (s == 0 || q.ydeg() != static_cast<int>(s)) {
    out.status = FactorStatus::bad_shape;
    return out;
  }
  if (s % f.q() == 0) {
    out.status = FactorStatus::characteristic_divides_s;
    return out;
  }
  const UniPoly lead = q.component(s);
  auto [quot, rem] = divrem(-q.component(s - 1), lead.scaled(s % f.q()));
  if (!rem.is_zero()) {
    out.status = FactorStatus::inexact_division;
    return out;
  }
  out.locator = lead;
  out.info = quot;
  if (quot.degree() >= static_cast<int>(k)) {
    out.status = FactorStatus::degree_bound;
    return out;
  }
  if (!(BiPoly::power_of_linear(lead, quot, s) == q)) out.status = FactorStatus::expansion_mismatch;
  return out;
}

}  // namespace rslink
