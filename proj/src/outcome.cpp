#include "rslink/outcome.hpp"

namespace rslink {

const char* to_string(Failure f) noexcept {
  switch (f) {
    case Failure::none: return "none";
    case Failure::trivial_nullspace: return "trivial nullspace";
    case Failure::no_locator: return "no solution with a nonzero locator";
    case Failure::inexact_division: return "locator does not divide the f-carrying component";
    case Failure::inconsistent_solution: return "solution components are not locator*f^i";
    case Failure::expansion_mismatch: return "interpolant does not factor as locator*(y-f)^s";
    case Failure::degree_bound: return "recovered f violates deg f < k";
    case Failure::weight_bound: return "corrected word lies outside the decoding radius";
    case Failure::characteristic_divides_s: return "field characteristic divides s";
  }
  return "unknown";
}

DecodeOutcome decode_failure(const Field& f, Failure why, std::size_t radius,
                             std::size_t nullspace_dim) {
  DecodeOutcome out(f);
  out.failure = why;
  out.radius = radius;
  out.nullspace_dim = nullspace_dim;
  return out;
}

DecodeOutcome finish_decode(const CodeSpec& spec, const Word& r, const UniPoly& locator,
                            const UniPoly& info, std::size_t radius,
                            std::size_t nullspace_dim) {
  if (info.degree() >= static_cast<int>(spec.k()))
    return decode_failure(spec.field(), Failure::degree_bound, radius, nullspace_dim);
  Word c = encode(spec, info);
  if (hamming_distance(c, r) > radius)
    return decode_failure(spec.field(), Failure::weight_bound, radius, nullspace_dim);
  DecodeOutcome out(spec.field());
  out.success = true;
  out.info = info;
  out.locator = locator.monic();
  out.corrected = std::move(c);
  out.error_positions = locator_roots(spec, out.locator);
  out.radius = radius;
  out.nullspace_dim = nullspace_dim;
  return out;
}

}  // namespace rslink
