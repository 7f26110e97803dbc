#include "rslink/mgs.hpp"

#include <set>

namespace rslink {

MgsSystem build_Bbar(const CodeSpec& spec, const Word& r, std::size_t s, std::size_t tau) {
  spec.check_word(r);
  VirsParams p = VirsParams::make(spec.n(), spec.k(), s, tau);
  const Field& f = spec.field();
  const std::size_t n = spec.n();
  const Binomials binom(f, static_cast<unsigned>(s));

  std::vector<Mat> m;
  for (std::size_t i = 0; i <= s; ++i) m.push_back(build_Mi(spec, tau, i));

  Mat bbar(f, s * n, p.total);
  for (std::size_t band = 0; band < s; ++band) {
    const std::size_t b = s - 1 - band;
    for (std::size_t t = b; t <= s; ++t) {
      const Mat& mi = m[s - t];
      const std::uint32_t c = binom(static_cast<unsigned>(t), static_cast<unsigned>(b));
      const std::size_t col0 = p.block_offset(t);
      for (std::size_t j = 0; j < n; ++j) {
        const std::uint32_t scale = f.mul(c, f.pow(r.symbols[j], t - b));
        for (std::size_t col = 0; col < mi.cols(); ++col)
          bbar(band * n + j, col0 + col) = f.mul(scale, mi(j, col));
      }
    }
  }
  return {std::move(bbar), std::move(p)};
}

MgsInterpolant mgs_solve(const CodeSpec& spec, const Word& r, std::size_t s, std::size_t tau) {
  const MgsSystem sys = build_Bbar(spec, r, s, tau);
  const Field& f = spec.field();
  const auto basis = nullspace(sys.matrix);
  MgsInterpolant out;
  out.nullspace_dim = basis.size();
  const auto v = min_block_degree_solution(f, basis, sys.params.block_offset(s), sys.params.ni[0]);
  if (v) out.poly = BiPoly::from_stacked(f, *v, sys.params.block_lengths());
  return out;
}

std::optional<BiPoly> mgs_interpolate(const CodeSpec& spec, const Word& r, std::size_t s) {
  return mgs_solve(spec, r, s, virs_radius(spec.n(), spec.k(), s)).poly;
}

DecodeOutcome mgs_decode(const CodeSpec& spec, const Word& r, std::size_t s) {
  const Field& f = spec.field();
  const std::size_t tau = virs_radius(spec.n(), spec.k(), s);
  if (s % f.q() == 0) throw Error(Errc::invalid_argument, "field characteristic divides s");

  const MgsInterpolant sol = mgs_solve(spec, r, s, tau);
  if (sol.nullspace_dim == 0) return decode_failure(f, Failure::trivial_nullspace, tau, 0);
  if (!sol.poly) return decode_failure(f, Failure::no_locator, tau, sol.nullspace_dim);

  const PowerFactor pf = extract_power_factor(*sol.poly, static_cast<unsigned>(s),
                                              static_cast<unsigned>(spec.k()));
  switch (pf.status) {
    case FactorStatus::ok:
      return finish_decode(spec, r, pf.locator, pf.info, tau, sol.nullspace_dim);
    case FactorStatus::inexact_division:
      return decode_failure(f, Failure::inexact_division, tau, sol.nullspace_dim);
    case FactorStatus::degree_bound:
      return decode_failure(f, Failure::degree_bound, tau, sol.nullspace_dim);
    case FactorStatus::characteristic_divides_s:
      return decode_failure(f, Failure::characteristic_divides_s, tau, sol.nullspace_dim);
    case FactorStatus::bad_shape:
    case FactorStatus::expansion_mismatch:
      break;
  }
  return decode_failure(f, Failure::expansion_mismatch, tau, sol.nullspace_dim);
}

bool errorfree_divisibility_check(const BiPoly& qbar, const CodeSpec& spec, const Word& r,
                                  std::span<const std::size_t> error_positions, std::size_t s) {
  spec.check_word(r);
  const Field& f = spec.field();
  const std::set<std::size_t> bad(error_positions.begin(), error_positions.end());
  std::vector<std::pair<std::uint32_t, std::uint32_t>> points;
  std::vector<std::uint32_t> clean;
  for (std::size_t i = 0; i < spec.n(); ++i) {
    points.emplace_back(spec.locator(i), r.symbols[i]);
    if (!bad.count(i)) clean.push_back(spec.locator(i));
  }
  const UniPoly big_r = lagrange_interpolate(f, points);
  const UniPoly gbar = locator_poly(f, clean);
  for (unsigned b = 0; b < s; ++b) {
    const UniPoly lhs = substitute_y(hasse_y(qbar, b), big_r);
    if (!divrem(lhs, gbar.pow(static_cast<unsigned>(s - b))).remainder.is_zero()) return false;
  }
  return true;
}

}  // namespace rslink
