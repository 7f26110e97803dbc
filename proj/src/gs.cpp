#include "rslink/gs.hpp"

#include <algorithm>
#include <string>

namespace rslink {

namespace {

void check_params(const CodeSpec& spec, const GsParams& p) {
  if (p.n != spec.n() || p.k != spec.k())
    throw Error(Errc::invalid_argument, "GS parameters do not match the code");
  if (p.s < 1 || p.ell < 1) throw Error(Errc::invalid_argument, "need s >= 1 and ell >= 1");
  if (p.tau >= p.n) throw Error(Errc::invalid_argument, "need tau < n");
}

}  // namespace

std::vector<std::size_t> gs_block_lengths(const GsParams& p) {
  const long bound = static_cast<long>(p.s) * (static_cast<long>(p.n) - static_cast<long>(p.tau));
  std::vector<std::size_t> out;
  for (std::size_t t = 0; t <= p.ell; ++t) {
    const long len = bound - static_cast<long>(t) * (static_cast<long>(p.k) - 1);
    out.push_back(len > 0 ? static_cast<std::size_t>(len) : 0);
  }
  return out;
}

GsCount gs_params_valid(const GsParams& p) {
  std::size_t unknowns = 0;
  if (p.tau <= p.n)
    for (auto l : gs_block_lengths(p)) unknowns += l;
  const std::size_t constraints = p.n * (p.s * (p.s + 1) / 2);
  return {p.s >= 1 && p.ell >= 1 && p.tau < p.n && unknowns > constraints, unknowns,
          constraints};
}

Mat gs_build(const CodeSpec& spec, const Word& r, const GsParams& p) {
  check_params(spec, p);
  spec.check_word(r);
  const Field& f = spec.field();
  const auto lengths = gs_block_lengths(p);
  std::size_t cols = 0;
  for (auto l : lengths) cols += l;
  const std::size_t per_point = p.s * (p.s + 1) / 2;
  const std::size_t max_x = lengths.empty() ? 0 : lengths.front();
  const Binomials binom(f, static_cast<unsigned>(std::max(max_x, p.ell + 1)));

  Mat m(f, p.n * per_point, cols);
  std::size_t row = 0;
  for (std::size_t i = 0; i < p.n; ++i) {
    const std::uint32_t x0 = spec.locator(i);
    const std::uint32_t y0 = r.symbols[i];
    for (unsigned a = 0; a < p.s; ++a) {
      for (unsigned b = 0; a + b < p.s; ++b, ++row) {
        std::size_t col = 0;
        for (unsigned t = 0; t <= p.ell; ++t) {
          const std::uint32_t ycoef = f.mul(binom(t, b), t >= b ? f.pow(y0, t - b) : 0);
          for (unsigned j = 0; j < lengths[t]; ++j, ++col) {
            if (j < a || ycoef == 0) continue;
            m(row, col) = f.mul(ycoef, f.mul(binom(j, a), f.pow(x0, j - a)));
          }
        }
      }
    }
  }
  return m;
}

BiPoly gs_interpolate(const CodeSpec& spec, const Word& r, const GsParams& p) {
  check_params(spec, p);
  const GsCount count = gs_params_valid(p);
  if (!count.valid)
    throw Error(Errc::invalid_argument,
                "GS parameters give " + std::to_string(count.unknowns) + " unknowns for " +
                    std::to_string(count.constraints) + " constraints");
  const auto basis = nullspace(gs_build(spec, r, p));
  // unknowns > constraints, so the basis is never empty.
  return BiPoly::from_stacked(spec.field(), basis.front(), gs_block_lengths(p));
}

DecodeOutcome gs_decode(const CodeSpec& spec, const Word& r, const GsParams& p) {
  if (p.ell != 1) throw Error(Errc::invalid_argument, "GS decoding recovers f only for ell = 1");
  const Field& f = spec.field();
  const BiPoly q = gs_interpolate(spec, r, p);
  const std::size_t dim = nullspace(gs_build(spec, r, p)).size();
  const UniPoly lambda = q.component(1);
  if (lambda.is_zero()) return decode_failure(f, Failure::no_locator, p.tau, dim);
  auto [info, rem] = divrem(-q.component(0), lambda);
  if (!rem.is_zero()) return decode_failure(f, Failure::inexact_division, p.tau, dim);
  return finish_decode(spec, r, lambda, info, p.tau, dim);
}

unsigned multiplicity_at(const BiPoly& q, std::uint32_t x0, std::uint32_t y0) {
  if (q.is_zero()) throw Error(Errc::invalid_argument, "multiplicity of the zero polynomial");
  const BiPoly shifted = shift(q, x0, y0);
  int best = -1;
  for (std::size_t t = 0; t < shifted.components().size(); ++t) {
    const UniPoly& c = shifted.components()[t];
    for (int i = 0; i <= c.degree(); ++i) {
      if (c.coeff(i) == 0) continue;
      const int total = i + static_cast<int>(t);
      if (best < 0 || total < best) best = total;
      break;
    }
  }
  return static_cast<unsigned>(best);
}

bool satisfies_degree_conditions(const BiPoly& q, const GsParams& p) {
  if (q.is_zero()) return true;
  if (q.ydeg() > static_cast<int>(p.ell)) return false;
  const long wdeg = weighted_degree(q, 1, static_cast<long>(p.k) - 1);
  return wdeg < static_cast<long>(p.s) * (static_cast<long>(p.n) - static_cast<long>(p.tau));
}

KeyEquationReport key_equations(const BiPoly& q, const CodeSpec& spec, const Word& r,
                                const GsParams& p) {
  check_params(spec, p);
  spec.check_word(r);
  const Field& f = spec.field();
  KeyEquationReport rep;
  rep.degree_conditions = satisfies_degree_conditions(q, p);

  std::vector<std::pair<std::uint32_t, std::uint32_t>> points;
  for (std::size_t i = 0; i < spec.n(); ++i) points.emplace_back(spec.locator(i), r.symbols[i]);
  const UniPoly big_r = lagrange_interpolate(f, points);
  const UniPoly g = locator_poly(f, spec.locators());

  const long base = static_cast<long>(p.ell) * (static_cast<long>(p.n) - static_cast<long>(p.k)) -
                    static_cast<long>(p.s) * static_cast<long>(p.tau);
  bool all = rep.degree_conditions;
  for (unsigned b = 0; b < p.s; ++b) {
    const UniPoly lhs = substitute_y(hasse_y(q, b), big_r);
    auto [quot, rem] = divrem(lhs, g.pow(static_cast<unsigned>(p.s - b)));
    if (!rem.is_zero()) {
      rep.quotients.emplace_back(std::nullopt);
      rep.degree_ok.push_back(false);
      all = false;
      continue;
    }
    const bool ok = quot.degree() < base + static_cast<long>(b);
    rep.quotients.emplace_back(std::move(quot));
    rep.degree_ok.push_back(ok);
    all = all && ok;
  }
  rep.holds = all;
  return rep;
}

bool key_equation_check(const BiPoly& q, const CodeSpec& spec, const Word& r,
                        const GsParams& p) {
  return key_equations(q, spec, r, p).holds;
}

}  // namespace rslink
