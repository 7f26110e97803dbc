#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "rslink/unipoly.hpp"

namespace rslink {

enum class WordRole { codeword, received, error };

/// A length-n vector of field symbols.
struct Word {
  Field field;
  std::vector<std::uint32_t> symbols;
  WordRole role = WordRole::received;

  std::size_t size() const noexcept { return symbols.size(); }
};

/// Number of nonzero symbols.
std::size_t hamming_weight(const Word& w) noexcept;
/// Number of positions where a and b differ. Throws on length mismatch.
std::size_t hamming_distance(const Word& a, const Word& b);

/// Parameters of RS(n, k): evaluations of all polynomials of degree < k at n
/// distinct nonzero locators.
class CodeSpec {
 public:
  /// Locators default to alpha^0, alpha^1, ..., alpha^(n-1) for the field's
  /// primitive element alpha.
  CodeSpec(const Field& f, std::size_t n, std::size_t k);
  CodeSpec(const Field& f, std::size_t k, std::vector<std::uint32_t> locators);

  const Field& field() const noexcept { return field_; }
  std::size_t n() const noexcept { return locators_.size(); }
  std::size_t k() const noexcept { return k_; }
  std::size_t d() const noexcept { return n() - k_ + 1; }
  std::span<const std::uint32_t> locators() const noexcept { return locators_; }
  std::uint32_t locator(std::size_t i) const { return locators_.at(i); }
  /// Index of a locator, or nullopt if x is not one.
  std::optional<std::size_t> position_of(std::uint32_t x) const noexcept;

  /// Throws if w is over another field or has the wrong length.
  void check_word(const Word& w) const;

 private:
  void validate() const;

  Field field_;
  std::size_t k_;
  std::vector<std::uint32_t> locators_;
};

/// c_i = f(alpha_i). Throws when deg f >= k.
Word encode(const CodeSpec& spec, const UniPoly& f);

/// Every symbol raised to the i-th power.
Word power_word(const Word& r, unsigned i);

/// c + e, componentwise.
Word corrupt(const Word& c, const Word& e);

/// Error word of exact weight, positions and nonzero values drawn from a
/// splitmix64 stream seeded by `seed`.
Word random_error(const Field& f, std::size_t n, std::size_t weight, std::uint64_t seed);
Word random_error(const CodeSpec& spec, std::size_t weight, std::uint64_t seed);

/// splitmix64 step: advances state and returns the next output.
std::uint64_t splitmix64(std::uint64_t& state) noexcept;

/// Positions i whose locator is a root of p, ascending.
std::vector<std::size_t> locator_roots(const CodeSpec& spec, const UniPoly& p);

}  // namespace rslink
