#pragma once

#include <optional>
#include <vector>

#include "rslink/bivariate.hpp"
#include "rslink/matrix.hpp"
#include "rslink/outcome.hpp"
#include "rslink/rscode.hpp"

namespace rslink {

/// Guruswami-Sudan parameters: list size ell, multiplicity s, radius tau.
/// The interpolant satisfies deg_{0,1} Q <= ell and deg_{1,k-1} Q < s(n - tau).
struct GsParams {
  std::size_t n;
  std::size_t k;
  std::size_t ell;
  std::size_t s;
  std::size_t tau;
};

struct GsCount {
  bool valid;
  std::size_t unknowns;     // sum_t max(0, s(n - tau) - t(k - 1))
  std::size_t constraints;  // n * C(s + 1, 2)
};

GsCount gs_params_valid(const GsParams& p);

/// Number of x-coefficients allowed in Q^(t), t = 0..ell.
std::vector<std::size_t> gs_block_lengths(const GsParams& p);

/// Constraint matrix: one row per (point i, a, b) with a + b < s, in that
/// nesting order; columns ordered by y-degree, then x-degree. Entry for
/// monomial x^j y^t is the mixed Hasse derivative C(j,a) C(t,b) alpha^(j-a) r^(t-b).
Mat gs_build(const CodeSpec& spec, const Word& r, const GsParams& p);

/// Nonzero Q meeting both degree conditions and multiplicity s at every
/// (alpha_i, r_i): the nullspace basis vector of the first free column, i.e.
/// the solution whose highest monomial is smallest in the column order.
/// Throws Error(invalid_argument) if the parameters admit no guaranteed
/// solution or do not match the code.
BiPoly gs_interpolate(const CodeSpec& spec, const Word& r, const GsParams& p);

/// List-1 decoding through gs_interpolate: with ell == 1 the interpolant is
/// Q^(1)(x) (y - f(x)) whenever at most tau errors occurred. Throws unless
/// p.ell == 1.
DecodeOutcome gs_decode(const CodeSpec& spec, const Word& r, const GsParams& p);

/// Vanishing order of Q at (x0, y0): the lowest total degree in Q(x+x0, y+y0).
/// Throws for Q == 0.
unsigned multiplicity_at(const BiPoly& q, std::uint32_t x0, std::uint32_t y0);

/// Outcome of the univariate key-equation test Q^[b](x, R(x)) = B^(b)(x) G(x)^(s-b).
struct KeyEquationReport {
  bool holds = false;
  bool degree_conditions = false;
  /// B^(b) for b = 0..s-1 where G^(s-b) divides exactly; nullopt otherwise.
  std::vector<std::optional<UniPoly>> quotients;
  /// Whether deg B^(b) < ell(n - k) - s*tau + b, per b.
  std::vector<bool> degree_ok;
};

KeyEquationReport key_equations(const BiPoly& q, const CodeSpec& spec, const Word& r,
                                const GsParams& p);

/// Shortcut for key_equations(...).holds.
bool key_equation_check(const BiPoly& q, const CodeSpec& spec, const Word& r,
                        const GsParams& p);

/// True if the Q meets deg_{0,1} <= ell and deg_{1,k-1} < s(n - tau).
bool satisfies_degree_conditions(const BiPoly& q, const GsParams& p);

}  // namespace rslink
