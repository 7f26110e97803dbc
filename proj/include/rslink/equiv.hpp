#pragma once

#include <optional>
#include <span>
#include <vector>

#include "rslink/matrix.hpp"
#include "rslink/rscode.hpp"

namespace rslink {

/// Diagonal change of variables between the interleaved Welch-Berlekamp
/// unknowns Q (component t = Lambda f^(s-t)) and the modified GS unknowns
/// Qbar (component t of Lambda (y - f)^s).
///
/// Expanding (y - f)^s = sum_t C(s,t) (-1)^(s-t) f^(s-t) y^t gives
/// Qbar^(t) = (-1)^(s-t) C(s,t) Q^(t), so block t is scaled by
/// (-1)^(s-t) C(s,t). These signs also absorb the -M_i blocks of A against
/// the positive blocks of Bbar.
struct ScalingMap {
  std::size_t s;
  Field field;
  /// Scalar of component t = 0..s.
  std::vector<std::uint32_t> block_scalars;

  /// q divides none of C(s, t).
  bool invertible() const noexcept;
  /// Column-wise diagonal for the given block lengths.
  Residues diagonal(std::span<const std::size_t> lengths) const;
  Residues inverse_diagonal(std::span<const std::size_t> lengths) const;
};

ScalingMap scaling_map(std::size_t s, const Field& f);

/// B = Bbar D, the modified GS system expressed in the interleaved unknowns.
/// Throws when D is singular.
Mat build_B(const CodeSpec& spec, const Word& r, std::size_t s, std::size_t tau);

struct EquivalenceReport {
  bool equivalent = false;
  std::size_t dim_a = 0;
  std::size_t dim_bbar = 0;
  std::size_t rank_a = 0;
  std::size_t rank_bbar = 0;
  /// row(A) == row(Bbar D), checked by rank of the stacked matrix.
  bool row_spaces_equal = false;
  /// A basis vector that failed to map across, if any.
  std::optional<Residues> counterexample;
};

/// Checks null(Bbar) = D null(A): equal dimensions, D v in null(Bbar) for every
/// basis vector v of null(A), and D^-1 w in null(A) for every basis vector w of
/// null(Bbar).
EquivalenceReport nullspace_equivalence(const Mat& a, const Mat& bbar, const ScalingMap& d,
                                        std::span<const std::size_t> lengths);

}  // namespace rslink
