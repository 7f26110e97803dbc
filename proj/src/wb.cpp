#include "rslink/wb.hpp"

#include "rslink/bivariate.hpp"

namespace rslink {

std::size_t wb_radius(std::size_t n, std::size_t k) {
  if (k < 1 || k > n) throw Error(Errc::invalid_argument, "need 1 <= k <= n");
  return (n - k) / 2;
}

WbSystem wb_build(const CodeSpec& spec, const Word& r) {
  spec.check_word(r);
  const Field& f = spec.field();
  const std::size_t n = spec.n();
  const std::size_t tau0 = wb_radius(n, spec.k());
  const std::size_t len0 = n - tau0;
  const std::size_t len1 = n - tau0 - spec.k() + 1;
  WbSystem sys{Mat(f, n, len0 + len1), tau0, len0, len1};
  for (std::size_t i = 0; i < n; ++i) {
    std::uint32_t p = 1;
    for (std::size_t j = 0; j < len0; ++j) {
      sys.matrix(i, j) = p;
      if (j < len1) sys.matrix(i, len0 + j) = f.mul(p, r.symbols[i]);
      p = f.mul(p, spec.locator(i));
    }
  }
  return sys;
}

DecodeOutcome wb_decode(const CodeSpec& spec, const Word& r) {
  const Field& f = spec.field();
  const WbSystem sys = wb_build(spec, r);
  const auto basis = nullspace(sys.matrix);
  if (basis.empty()) return decode_failure(f, Failure::trivial_nullspace, sys.tau0, 0);

  const auto v = min_block_degree_solution(f, basis, sys.q0_len, sys.q1_len);
  if (!v) return decode_failure(f, Failure::no_locator, sys.tau0, basis.size());

  const std::size_t lengths[] = {sys.q0_len, sys.q1_len};
  const BiPoly q = BiPoly::from_stacked(f, *v, lengths);
  const UniPoly lambda = q.component(1);
  auto [quot, rem] = divrem(-q.component(0), lambda);
  if (!rem.is_zero()) return decode_failure(f, Failure::inexact_division, sys.tau0, basis.size());
  return finish_decode(spec, r, lambda, quot, sys.tau0, basis.size());
}

}  // namespace rslink
