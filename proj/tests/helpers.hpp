// Conversions between library objects and the oracle representations, plus
// small random-instance generators shared by the test binaries.
#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "rslink/bivariate.hpp"
#include "rslink/matrix.hpp"
#include "rslink/rscode.hpp"
#include "rslink/unipoly.hpp"

namespace helpers {

inline oracle::Vec vec(const rslink::UniPoly& p) {
  return oracle::Vec(p.coeffs().begin(), p.coeffs().end());
}

inline oracle::Vec vec(const std::vector<std::uint32_t>& v) { return oracle::Vec(v.begin(), v.end()); }

inline oracle::Rows rows(const rslink::Mat& m) {
  oracle::Rows out(m.rows(), oracle::Vec(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m(r, c);
  return out;
}

inline oracle::Bi bi(const rslink::BiPoly& q) {
  oracle::Bi out;
  for (std::size_t t = 0; t < q.components().size(); ++t) {
    const auto& c = q.components()[t];
    for (std::size_t i = 0; i < c.coeffs().size(); ++i)
      if (c.coeffs()[i] != 0) out[{static_cast<int>(i), static_cast<int>(t)}] = c.coeffs()[i];
  }
  return out;
}

inline std::vector<std::uint32_t> random_residues(std::mt19937_64& rng, std::size_t len,
                                                  std::uint32_t q) {
  std::uniform_int_distribution<std::uint32_t> d(0, q - 1);
  std::vector<std::uint32_t> v(len);
  for (auto& x : v) x = d(rng);
  return v;
}

inline rslink::UniPoly random_poly(std::mt19937_64& rng, const rslink::Field& f, std::size_t len) {
  return rslink::UniPoly(f, random_residues(rng, len, f.q()));
}

// Error word of exactly `weight` nonzero symbols, drawn with the test RNG.
inline rslink::Word random_error(std::mt19937_64& rng, const rslink::Field& f, std::size_t n,
                                 std::size_t weight) {
  std::vector<std::size_t> pos(n);
  for (std::size_t i = 0; i < n; ++i) pos[i] = i;
  std::shuffle(pos.begin(), pos.end(), rng);
  std::uniform_int_distribution<std::uint32_t> d(1, f.q() - 1);
  rslink::Word e{f, std::vector<std::uint32_t>(n, 0), rslink::WordRole::error};
  for (std::size_t i = 0; i < weight; ++i) e.symbols[pos[i]] = d(rng);
  return e;
}

inline std::vector<std::size_t> support(const rslink::Word& e) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e.symbols[i] != 0) out.push_back(i);
  return out;
}

// True if a == c * b for some nonzero c (a, b of equal length, b nonzero).
inline bool scalar_multiple(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                            std::int64_t q) {
  if (a.size() != b.size()) return false;
  std::size_t j = 0;
  while (j < b.size() && b[j] == 0) ++j;
  if (j == b.size() || a[j] == 0) return false;
  const std::int64_t c = a[j] * oracle::inverse(b[j], q) % q;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (static_cast<std::int64_t>(a[i]) != c * b[i] % q) return false;
  return true;
}

}  // namespace helpers
