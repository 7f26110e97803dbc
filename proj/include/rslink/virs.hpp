#pragma once

#include <vector>

#include "rslink/matrix.hpp"
#include "rslink/outcome.hpp"

namespace rslink {

/// Virtual extension of RS(n, k) to an interleaved code of order s: row i of
/// the stack is the received word raised to the i-th power, a word of
/// RS(n, i(k-1)+1).
///
/// Stacked unknowns use the layout shared with the modified GS system:
/// component t = 0..s has degree <= tau + (s-t)(k-1), i.e. N_{s-t}
/// coefficients, and in the Welch-Berlekamp picture equals Lambda * f^(s-t).
/// Components are laid out Q^(0) first, Q^(s) (the locator) last.
struct VirsParams {
  std::size_t n;
  std::size_t k;
  std::size_t s;
  std::size_t tau;
  /// N_i = tau + i(k-1) + 1 for i = 0..s.
  std::vector<std::size_t> ni;
  /// sum of ni, = (s+1)(tau+1) + C(s+1, 2)(k-1).
  std::size_t total;

  /// Throws unless s >= 1 and s(k-1) + 1 <= n.
  static VirsParams make(std::size_t n, std::size_t k, std::size_t s, std::size_t tau);

  /// Column count of component t (= N_{s-t}).
  std::vector<std::size_t> block_lengths() const;
  /// First column of component t.
  std::size_t block_offset(std::size_t t) const;
};

/// floor((s n - C(s+1,2)(k-1) - s) / (s+1)); throws on infeasible (n, k, s).
std::size_t virs_radius(std::size_t n, std::size_t k, std::size_t s);

/// n x N_i Vandermonde block: row j is (1, alpha_j, ..., alpha_j^(N_i - 1)).
Mat build_Mi(const CodeSpec& spec, std::size_t tau, std::size_t i);

/// The sn x N homogeneous system of the s Welch-Berlekamp equations. Band i
/// (rows (i-1)n .. in-1) holds -M_i in the block of Q^(s-i) and diag(r)^i M_0
/// in the block of Q^(s).
Mat build_A(const CodeSpec& spec, const Word& r, std::size_t s, std::size_t tau);

/// Stacked vector with component t = lambda * f^(s-t).
Residues stack_solution(const VirsParams& p, const UniPoly& lambda, const UniPoly& f);

/// Collaborative decoding of the virtual extension at tau = virs_radius.
DecodeOutcome virs_decode(const CodeSpec& spec, const Word& r, std::size_t s);

}  // namespace rslink
