#include "rslink/rscode.hpp"

#include <numeric>
#include <set>
#include <string>

namespace rslink {

std::size_t hamming_weight(const Word& w) noexcept {
  std::size_t n = 0;
  for (auto v : w.symbols) n += v != 0;
  return n;
}

std::size_t hamming_distance(const Word& a, const Word& b) {
  if (a.size() != b.size()) throw Error(Errc::invalid_argument, "word lengths differ");
  std::size_t n = 0;
  for (std::size_t i = 0; i < a.size(); ++i) n += a.symbols[i] != b.symbols[i];
  return n;
}

CodeSpec::CodeSpec(const Field& f, std::size_t n, std::size_t k) : field_(f), k_(k) {
  if (n == 0 || n >= f.q())
    throw Error(Errc::invalid_argument,
                "code length must satisfy 1 <= n < q (n=" + std::to_string(n) + ")");
  locators_.reserve(n);
  std::uint32_t x = 1;
  for (std::size_t i = 0; i < n; ++i) {
    locators_.push_back(x);
    x = f.mul(x, f.primitive_residue());
  }
  validate();
}

CodeSpec::CodeSpec(const Field& f, std::size_t k, std::vector<std::uint32_t> locators)
    : field_(f), k_(k), locators_(std::move(locators)) {
  validate();
}

void CodeSpec::validate() const {
  const std::size_t n = locators_.size();
  if (k_ < 1 || k_ > n || n >= field_.q())
    throw Error(Errc::invalid_argument, "RS parameters must satisfy 1 <= k <= n < q (n=" +
                                            std::to_string(n) + ", k=" + std::to_string(k_) +
                                            ", q=" + std::to_string(field_.q()) + ")");
  std::set<std::uint32_t> seen;
  for (auto a : locators_) {
    if (a == 0 || a >= field_.q())
      throw Error(Errc::invalid_argument, "locators must be nonzero residues");
    if (!seen.insert(a).second)
      throw Error(Errc::invalid_argument, "duplicate locator " + std::to_string(a));
  }
}

std::optional<std::size_t> CodeSpec::position_of(std::uint32_t x) const noexcept {
  for (std::size_t i = 0; i < locators_.size(); ++i)
    if (locators_[i] == x) return i;
  return std::nullopt;
}

void CodeSpec::check_word(const Word& w) const {
  if (!(w.field == field_)) throw Error(Errc::field_mismatch, "word over a different field");
  if (w.size() != n())
    throw Error(Errc::invalid_argument, "word has length " + std::to_string(w.size()) +
                                            ", code length is " + std::to_string(n()));
}

Word encode(const CodeSpec& spec, const UniPoly& f) {
  if (!(f.field() == spec.field()))
    throw Error(Errc::field_mismatch, "information polynomial over a different field");
  if (f.degree() >= static_cast<int>(spec.k()))
    throw Error(Errc::invalid_argument, "information polynomial has degree " +
                                            std::to_string(f.degree()) + " >= k = " +
                                            std::to_string(spec.k()));
  Word c{spec.field(), {}, WordRole::codeword};
  c.symbols.reserve(spec.n());
  for (auto a : spec.locators()) c.symbols.push_back(f.eval(a));
  return c;
}

Word power_word(const Word& r, unsigned i) {
  if (i == 0) throw Error(Errc::invalid_argument, "power_word needs a positive exponent");
  Word out = r;
  for (auto& v : out.symbols) v = r.field.pow(v, i);
  return out;
}

Word corrupt(const Word& c, const Word& e) {
  if (!(c.field == e.field)) throw Error(Errc::field_mismatch, "words over different fields");
  if (c.size() != e.size()) throw Error(Errc::invalid_argument, "word lengths differ");
  Word r{c.field, c.symbols, WordRole::received};
  for (std::size_t i = 0; i < r.size(); ++i) r.symbols[i] = c.field.add(r.symbols[i], e.symbols[i]);
  return r;
}

std::uint64_t splitmix64(std::uint64_t& state) noexcept {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

// Uniform in [0, bound) by rejection.
std::uint64_t bounded(std::uint64_t& state, std::uint64_t bound) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do x = splitmix64(state);
  while (x >= limit);
  return x % bound;
}

}  // namespace

Word random_error(const Field& f, std::size_t n, std::size_t weight, std::uint64_t seed) {
  if (weight > n)
    throw Error(Errc::invalid_argument, "error weight " + std::to_string(weight) +
                                            " exceeds length " + std::to_string(n));
  std::uint64_t state = seed;
  std::vector<std::size_t> pos(n);
  std::iota(pos.begin(), pos.end(), std::size_t{0});
  // Partial Fisher-Yates: the first `weight` entries are the support.
  for (std::size_t i = 0; i < weight; ++i)
    std::swap(pos[i], pos[i + bounded(state, n - i)]);
  Word e{f, std::vector<std::uint32_t>(n, 0), WordRole::error};
  for (std::size_t i = 0; i < weight; ++i)
    e.symbols[pos[i]] = 1 + static_cast<std::uint32_t>(bounded(state, f.q() - 1));
  return e;
}

Word random_error(const CodeSpec& spec, std::size_t weight, std::uint64_t seed) {
  return random_error(spec.field(), spec.n(), weight, seed);
}

std::vector<std::size_t> locator_roots(const CodeSpec& spec, const UniPoly& p) {
  std::vector<std::size_t> out;
  if (p.is_zero()) return out;
  for (std::size_t i = 0; i < spec.n(); ++i)
    if (p.eval(spec.locator(i)) == 0) out.push_back(i);
  return out;
}

}  // namespace rslink
