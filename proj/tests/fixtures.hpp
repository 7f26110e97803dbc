// Worked RS(16, 4) example over GF(17) with alpha = 3 and s = 2.
#pragma once

#include <cstdint>
#include <vector>

#include "oracles.hpp"
#include "rslink/rscode.hpp"

namespace fixture {

inline constexpr std::uint32_t kQ = 17;
inline constexpr std::uint32_t kAlpha = 3;
inline constexpr std::size_t kN = 16;
inline constexpr std::size_t kK = 4;
inline constexpr std::size_t kS = 2;
inline constexpr std::size_t kTau = 7;

inline const std::vector<std::uint32_t> kF = {1, 1, 1, 1};
inline const std::vector<std::uint32_t> kC = {4, 6, 4, 6, 0, 3, 12, 2, 0, 14, 7, 9, 0, 15, 15, 4};
inline const std::vector<std::uint32_t> kE = {1, 2, 3, 4, 5, 6, 7, 0, 0, 0, 0, 0, 0, 0, 0, 0};
inline const std::vector<std::uint32_t> kR = {5, 8, 7, 10, 5, 9, 2, 2, 0, 14, 7, 9, 0, 15, 15, 4};
inline const std::vector<std::uint32_t> kR2 = {8, 13, 15, 15, 8, 13, 4, 4,
                                               0, 9,  15, 13, 0, 4,  4, 16};

// Golden 33-entry solution vector for this instance, stacked as blocks of
// 14 | 11 | 8 coefficients in ascending degree. Its middle block is W f, not
// -2 W f: the vector solves A (component t = W f^(2-t)), while Bbar is solved
// by its image under the scaling map, see qbar() below.
inline const std::vector<std::uint32_t> kGolden = {
    5, 14, 8, 6, 14, 9, 5, 9, 12, 12, 4, 2, 3, 16,  // 14 coefficients
    5, 9, 11, 15, 13, 4, 7, 2, 16, 4, 16,           // 11
    5, 4, 2, 4, 3, 12, 5, 16};                      // 8
inline const std::vector<std::size_t> kBlocks = {14, 11, 8};

// Linear factors (x + a) of the printed locator part.
inline const std::vector<std::int64_t> kLocatorShifts = {2, 4, 7, 8, 12, 14, 16};

// Qbar = W (y - f)^2 stacked the same way: the golden vector with its middle
// block multiplied by -C(2,1) = -2.
inline std::vector<std::uint32_t> qbar() {
  std::vector<std::uint32_t> v = kGolden;
  for (std::size_t i = 14; i < 25; ++i) v[i] = static_cast<std::uint32_t>(oracle::mod(-2 * std::int64_t{v[i]}, kQ));
  return v;
}

inline rslink::Field field() { return rslink::Field(kQ, kAlpha); }
inline rslink::CodeSpec code() { return rslink::CodeSpec(field(), kN, kK); }
inline rslink::Word word(const std::vector<std::uint32_t>& v,
                         rslink::WordRole role = rslink::WordRole::received) {
  return rslink::Word{field(), v, role};
}

inline oracle::Vec to_vec(const std::vector<std::uint32_t>& v) {
  return oracle::Vec(v.begin(), v.end());
}

}  // namespace fixture
