#pragma once

#include <optional>
#include <span>

#include "rslink/bivariate.hpp"
#include "rslink/outcome.hpp"
#include "rslink/virs.hpp"

namespace rslink {

/// Interpolation system of the modified GS problem: Qbar has y-degree <= s,
/// deg Qbar^(t) <= tau + (s-t)(k-1), and Qbar^[b](alpha_i, r_i) = 0 for every
/// point and every b < s. Row band b' = 0..s-1 holds derivative order
/// b = s-1-b'; its block for component t >= b is C(t,b) diag(r)^(t-b) M_{s-t}.
struct MgsSystem {
  Mat matrix;
  VirsParams params;
};

MgsSystem build_Bbar(const CodeSpec& spec, const Word& r, std::size_t s, std::size_t tau);

struct MgsInterpolant {
  /// Lowest-degree-Qbar^(s) solution with monic Qbar^(s); nullopt when the
  /// nullspace is trivial or no solution has a nonzero Qbar^(s).
  std::optional<BiPoly> poly;
  std::size_t nullspace_dim = 0;
};

MgsInterpolant mgs_solve(const CodeSpec& spec, const Word& r, std::size_t s, std::size_t tau);

/// mgs_solve at tau = virs_radius(n, k, s).
std::optional<BiPoly> mgs_interpolate(const CodeSpec& spec, const Word& r, std::size_t s);

/// Decodes by factoring the interpolant as Qbar^(s)(x) (y - f(x))^s.
DecodeOutcome mgs_decode(const CodeSpec& spec, const Word& r, std::size_t s);

/// True iff Gbar^(s-b) divides Qbar^[b](x, R(x)) for every b < s, where R
/// interpolates r and Gbar = prod over the positions not in `error_positions`
/// of (x - alpha_i).
bool errorfree_divisibility_check(const BiPoly& qbar, const CodeSpec& spec, const Word& r,
                                  std::span<const std::size_t> error_positions, std::size_t s);

}  // namespace rslink
