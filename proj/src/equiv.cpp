#include "rslink/equiv.hpp"

#include <algorithm>

#include "rslink/mgs.hpp"

namespace rslink {

bool ScalingMap::invertible() const noexcept {
  return std::none_of(block_scalars.begin(), block_scalars.end(),
                      [](std::uint32_t c) { return c == 0; });
}

Residues ScalingMap::diagonal(std::span<const std::size_t> lengths) const {
  if (lengths.size() != block_scalars.size())
    throw Error(Errc::invalid_argument, "block layout does not match the scaling map");
  Residues d;
  for (std::size_t t = 0; t < lengths.size(); ++t) d.insert(d.end(), lengths[t], block_scalars[t]);
  return d;
}

Residues ScalingMap::inverse_diagonal(std::span<const std::size_t> lengths) const {
  if (!invertible()) throw Error(Errc::invalid_argument, "scaling map is singular");
  Residues d = diagonal(lengths);
  for (auto& v : d) v = field.inv(v);
  return d;
}

ScalingMap scaling_map(std::size_t s, const Field& f) {
  const Binomials binom(f, static_cast<unsigned>(s));
  ScalingMap m{s, f, {}};
  for (std::size_t t = 0; t <= s; ++t) {
    const std::uint32_t c = binom(static_cast<unsigned>(s), static_cast<unsigned>(t));
    m.block_scalars.push_back((s - t) % 2 ? f.neg(c) : c);
  }
  return m;
}

Mat build_B(const CodeSpec& spec, const Word& r, std::size_t s, std::size_t tau) {
  const ScalingMap d = scaling_map(s, spec.field());
  if (!d.invertible())
    throw Error(Errc::invalid_argument, "scaling map is singular: q divides some C(s, t)");
  const MgsSystem sys = build_Bbar(spec, r, s, tau);
  return sys.matrix.scale_columns(d.diagonal(sys.params.block_lengths()));
}

namespace {

Residues hadamard(const Field& f, std::span<const std::uint32_t> a, std::span<const std::uint32_t> b) {
  Residues out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.mul(a[i], b[i]);
  return out;
}

}  // namespace

EquivalenceReport nullspace_equivalence(const Mat& a, const Mat& bbar, const ScalingMap& d,
                                        std::span<const std::size_t> lengths) {
  if (a.rows() != bbar.rows() || a.cols() != bbar.cols())
    throw Error(Errc::invalid_argument, "A and Bbar have different shapes");
  if (!(a.field() == bbar.field()) || !(a.field() == d.field))
    throw Error(Errc::field_mismatch, "A, Bbar and D live over different fields");
  const Field& f = a.field();
  const Residues diag = d.diagonal(lengths);
  const Residues inv = d.inverse_diagonal(lengths);
  if (diag.size() != a.cols()) throw Error(Errc::invalid_argument, "block layout does not cover A");

  EquivalenceReport rep;
  const auto null_a = nullspace(a);
  const auto null_b = nullspace(bbar);
  rep.dim_a = null_a.size();
  rep.dim_bbar = null_b.size();
  rep.rank_a = a.cols() - rep.dim_a;
  rep.rank_bbar = bbar.cols() - rep.dim_bbar;

  bool ok = rep.dim_a == rep.dim_bbar;
  for (const auto& v : null_a) {
    if (!is_zero(bbar.apply(hadamard(f, diag, v)))) {
      ok = false;
      if (!rep.counterexample) rep.counterexample = v;
    }
  }
  for (const auto& w : null_b) {
    if (!is_zero(a.apply(hadamard(f, inv, w)))) {
      ok = false;
      if (!rep.counterexample) rep.counterexample = w;
    }
  }
  rep.equivalent = ok;

  const Mat b = bbar.scale_columns(diag);
  const std::size_t joint = rank(a.stack(b));
  rep.row_spaces_equal = joint == rep.rank_a && joint == rep.rank_bbar;
  return rep;
}

}  // namespace rslink
