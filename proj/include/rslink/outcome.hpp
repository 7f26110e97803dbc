#pragma once

#include <cstddef>
#include <vector>

#include "rslink/rscode.hpp"

namespace rslink {

enum class Failure {
  none,
  trivial_nullspace,
  no_locator,             // every solution has a zero locator component
  inexact_division,       // locator does not divide the f-carrying component
  inconsistent_solution,  // stacked components are not locator * f^(s-t)
  expansion_mismatch,     // bivariate solution is not locator * (y - f)^s
  degree_bound,           // deg f >= k
  weight_bound,           // re-encoded word is farther than the radius from r
  characteristic_divides_s,
};

const char* to_string(Failure f) noexcept;

/// Result of one decoder run. On success `info` is f, `locator` the monic
/// error-locator, `corrected` = encode(f), and `error_positions` the
/// (0-based) positions whose locator is a root of `locator`.
struct DecodeOutcome {
  bool success = false;
  Failure failure = Failure::none;
  UniPoly info;
  UniPoly locator;
  Word corrected;
  std::vector<std::size_t> error_positions;
  std::size_t radius = 0;
  std::size_t nullspace_dim = 0;

  explicit DecodeOutcome(const Field& f)
      : info(f), locator(f), corrected{f, {}, WordRole::codeword} {}
};

DecodeOutcome decode_failure(const Field& f, Failure why, std::size_t radius,
                             std::size_t nullspace_dim);

/// Shared tail of every decoder: checks deg f < k, re-encodes, enforces
/// wt(r - encode(f)) <= radius and fills the outcome.
DecodeOutcome finish_decode(const CodeSpec& spec, const Word& r, const UniPoly& locator,
                            const UniPoly& info, std::size_t radius,
                            std::size_t nullspace_dim);

}  // namespace rslink
