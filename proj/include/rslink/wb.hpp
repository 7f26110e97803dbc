#pragma once

#include "rslink/matrix.hpp"
#include "rslink/outcome.hpp"

namespace rslink {

/// Welch-Berlekamp system: row i is Q0(alpha_i) + r_i Q1(alpha_i) = 0, columns
/// are the n - tau0 coefficients of Q0 followed by the n - tau0 - k + 1
/// coefficients of Q1.
struct WbSystem {
  Mat matrix;
  std::size_t tau0;
  std::size_t q0_len;
  std::size_t q1_len;
};

/// floor((n - k) / 2).
std::size_t wb_radius(std::size_t n, std::size_t k);

WbSystem wb_build(const CodeSpec& spec, const Word& r);

/// Unique decoding up to wb_radius. The solution with the lowest-degree Q1 is
/// taken as Lambda * (y - f).
DecodeOutcome wb_decode(const CodeSpec& spec, const Word& r);

}  // namespace rslink
