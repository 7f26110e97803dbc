#include "rslink/virs.hpp"

#include <string>

#include "rslink/bivariate.hpp"

namespace rslink {

namespace {

void check_feasible(std::size_t n, std::size_t k, std::size_t s) {
  if (s < 1) throw Error(Errc::invalid_argument, "interleaving order s must be >= 1");
  if (k < 1 || k > n) throw Error(Errc::invalid_argument, "need 1 <= k <= n");
  if (s * (k - 1) + 1 > n)
    throw Error(Errc::invalid_argument, "virtual extension needs s(k-1)+1 <= n (s=" +
                                            std::to_string(s) + ", k=" + std::to_string(k) +
                                            ", n=" + std::to_string(n) + ")");
}

}  // namespace

VirsParams VirsParams::make(std::size_t n, std::size_t k, std::size_t s, std::size_t tau) {
  check_feasible(n, k, s);
  VirsParams p{n, k, s, tau, {}, 0};
  for (std::size_t i = 0; i <= s; ++i) {
    p.ni.push_back(tau + i * (k - 1) + 1);
    p.total += p.ni.back();
  }
  return p;
}

std::vector<std::size_t> VirsParams::block_lengths() const {
  std::vector<std::size_t> out;
  for (std::size_t t = 0; t <= s; ++t) out.push_back(ni[s - t]);
  return out;
}

std::size_t VirsParams::block_offset(std::size_t t) const {
  std::size_t off = 0;
  for (std::size_t u = 0; u < t; ++u) off += ni[s - u];
  return off;
}

std::size_t virs_radius(std::size_t n, std::size_t k, std::size_t s) {
  check_feasible(n, k, s);
  // Non-negative whenever s(k-1)+1 <= n.
  const std::size_t num = s * n - (s * (s + 1) / 2) * (k - 1) - s;
  return num / (s + 1);
}

Mat build_Mi(const CodeSpec& spec, std::size_t tau, std::size_t i) {
  const Field& f = spec.field();
  const std::size_t cols = tau + i * (spec.k() - 1) + 1;
  Mat m(f, spec.n(), cols);
  for (std::size_t j = 0; j < spec.n(); ++j) {
    std::uint32_t p = 1;
    for (std::size_t c = 0; c < cols; ++c) {
      m(j, c) = p;
      p = f.mul(p, spec.locator(j));
    }
  }
  return m;
}

Mat build_A(const CodeSpec& spec, const Word& r, std::size_t s, std::size_t tau) {
  spec.check_word(r);
  const VirsParams p = VirsParams::make(spec.n(), spec.k(), s, tau);
  const Field& f = spec.field();
  const std::size_t n = spec.n();
  const Mat m0 = build_Mi(spec, tau, 0);
  const std::size_t locator_col = p.block_offset(s);

  Mat a(f, s * n, p.total);
  for (std::size_t i = 1; i <= s; ++i) {
    const Mat mi = build_Mi(spec, tau, i);
    const std::size_t row0 = (i - 1) * n;
    const std::size_t col0 = p.block_offset(s - i);
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t c = 0; c < mi.cols(); ++c) a(row0 + j, col0 + c) = f.neg(mi(j, c));
      const std::uint32_t ri = f.pow(r.symbols[j], i);
      for (std::size_t c = 0; c < m0.cols(); ++c)
        a(row0 + j, locator_col + c) = f.mul(ri, m0(j, c));
    }
  }
  return a;
}

Residues stack_solution(const VirsParams& p, const UniPoly& lambda, const UniPoly& f) {
  std::vector<UniPoly> comps;
  for (std::size_t t = 0; t <= p.s; ++t)
    comps.push_back(lambda * f.pow(static_cast<unsigned>(p.s - t)));
  return BiPoly(lambda.field(), std::move(comps)).to_stacked(p.block_lengths());
}

DecodeOutcome virs_decode(const CodeSpec& spec, const Word& r, std::size_t s) {
  const Field& f = spec.field();
  const std::size_t tau = virs_radius(spec.n(), spec.k(), s);
  const VirsParams p = VirsParams::make(spec.n(), spec.k(), s, tau);
  const auto basis = nullspace(build_A(spec, r, s, tau));
  if (basis.empty()) return decode_failure(f, Failure::trivial_nullspace, tau, 0);

  const auto v = min_block_degree_solution(f, basis, p.block_offset(s), p.ni[0]);
  if (!v) return decode_failure(f, Failure::no_locator, tau, basis.size());

  const auto lengths = p.block_lengths();
  const BiPoly q = BiPoly::from_stacked(f, *v, lengths);
  const UniPoly lambda = q.component(s);
  auto [info, rem] = divrem(q.component(s - 1), lambda);
  if (!rem.is_zero()) return decode_failure(f, Failure::inexact_division, tau, basis.size());
  if (info.degree() >= static_cast<int>(spec.k()))
    return decode_failure(f, Failure::degree_bound, tau, basis.size());
  // Every band must carry lambda * f^i, not only the first.
  UniPoly expect = lambda;
  for (std::size_t i = 1; i <= s; ++i) {
    expect = expect * info;
    if (!(q.component(s - i) == expect))
      return decode_failure(f, Failure::inconsistent_solution, tau, basis.size());
  }
  return finish_decode(spec, r, lambda, info, tau, basis.size());
}

}  // namespace rslink
