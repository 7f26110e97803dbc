// Reference implementations used only by the tests. They deliberately avoid
// the library: plain int64 arithmetic, schoolbook loops, no shared helpers.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace oracle {

using Vec = std::vector<std::int64_t>;
using Rows = std::vector<Vec>;

inline std::int64_t mod(std::int64_t a, std::int64_t q) {
  a %= q;
  return a < 0 ? a + q : a;
}

inline std::int64_t power(std::int64_t a, std::int64_t e, std::int64_t q) {
  std::int64_t r = 1 % q;
  a = mod(a, q);
  for (std::int64_t i = 0; i < e; ++i) r = r * a % q;
  return r;
}

// Fermat inverse by repeated multiplication; q is prime and small.
inline std::int64_t inverse(std::int64_t a, std::int64_t q) { return power(a, q - 2, q); }

// Binomial coefficient mod q from the exact integer value (n stays small).
inline std::int64_t binom(std::int64_t n, std::int64_t k, std::int64_t q) {
  if (k < 0 || k > n) return 0;
  std::vector<std::int64_t> row(n + 1, 0);
  row[0] = 1;
  for (std::int64_t i = 1; i <= n; ++i)
    for (std::int64_t j = i; j >= 1; --j) row[j] = (row[j] + row[j - 1]) % q;
  return row[k];
}

inline std::int64_t eval(const Vec& c, std::int64_t x, std::int64_t q) {
  std::int64_t acc = 0;
  for (std::size_t i = 0; i < c.size(); ++i) acc = mod(acc + c[i] * power(x, i, q), q);
  return acc;
}

inline Vec trim(Vec c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
  return c;
}

inline Vec mul(const Vec& a, const Vec& b, std::int64_t q) {
  if (a.empty() || b.empty()) return {};
  Vec out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = mod(out[i + j] + a[i] * b[j], q);
  return trim(out);
}

inline Vec add(const Vec& a, const Vec& b, std::int64_t q) {
  Vec out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = mod((i < a.size() ? a[i] : 0) + (i < b.size() ? b[i] : 0), q);
  return trim(out);
}

inline Vec scale(const Vec& a, std::int64_t c, std::int64_t q) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = mod(a[i] * c, q);
  return trim(out);
}

// prod (x - r) over the roots.
inline Vec from_roots(const Vec& roots, std::int64_t q) {
  Vec p{1};
  for (auto r : roots) p = mul(p, {mod(-r, q), 1}, q);
  return p;
}

// Roots by exhaustive evaluation over the field.
inline Vec roots(const Vec& p, std::int64_t q) {
  Vec out;
  for (std::int64_t x = 0; x < q; ++x)
    if (eval(p, x, q) == 0) out.push_back(x);
  return out;
}

inline std::size_t distance(const Vec& a, const Vec& b) {
  std::size_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
  return d;
}

// M v, with M given row-major.
inline Vec apply(const Rows& m, const Vec& v, std::int64_t q) {
  Vec out;
  for (const auto& row : m) {
    std::int64_t acc = 0;
    for (std::size_t j = 0; j < row.size(); ++j) acc = mod(acc + row[j] * v[j], q);
    out.push_back(acc);
  }
  return out;
}

inline bool all_zero(const Vec& v) {
  for (auto x : v)
    if (x != 0) return false;
  return true;
}

// Rank by forward elimination, pivoting on the last nonzero entry of each
// column so the elimination order differs from the library's.
inline std::size_t rank(Rows m, std::int64_t q) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = cols; c-- > 0 && r < m.size();) {
    std::size_t p = m.size();
    for (std::size_t i = m.size(); i-- > r;)
      if (m[i][c] != 0) {
        p = i;
        break;
      }
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    const std::int64_t inv = inverse(m[r][c], q);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      const std::int64_t factor = m[i][c] * inv % q;
      if (factor == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) m[i][j] = mod(m[i][j] - factor * m[r][j], q);
    }
    ++r;
  }
  return r;
}

// Bivariate polynomial as map (x-degree, y-degree) -> coefficient.
using Bi = std::map<std::pair<int, int>, std::int64_t>;

// Mixed Hasse derivative straight from its definition as the coefficient of
// u^a v^b in Q(x0 + u, y0 + v).
inline std::int64_t hasse(const Bi& qpoly, int a, int b, std::int64_t x0, std::int64_t y0,
                          std::int64_t q) {
  std::int64_t acc = 0;
  for (const auto& [deg, c] : qpoly) {
    const auto [i, t] = deg;
    if (i < a || t < b) continue;
    acc = mod(acc + c * binom(i, a, q) % q * binom(t, b, q) % q * power(x0, i - a, q) % q *
                        power(y0, t - b, q),
              q);
  }
  return acc;
}

// Largest m such that every Hasse derivative of order a + b < m vanishes.
inline int multiplicity(const Bi& qpoly, std::int64_t x0, std::int64_t y0, std::int64_t q) {
  int max_total = 0;
  for (const auto& [deg, c] : qpoly)
    if (c != 0) max_total = std::max(max_total, deg.first + deg.second);
  for (int m = 0; m <= max_total; ++m)
    for (int a = 0; a <= m; ++a)
      if (hasse(qpoly, a, m - a, x0, y0, q) != 0) return m;
  return max_total + 1;
}

// W(x) (y - g(x))^s expanded with the binomial theorem.
inline Bi power_of_linear(const Vec& w, const Vec& g, int s, std::int64_t q) {
  Bi out;
  Vec neg_g_pow{1};
  Vec neg_g = scale(g, q - 1, q);
  for (int j = 0; j <= s; ++j) {
    // term C(s, j) (-g)^j y^(s-j)
    const Vec coef = scale(mul(w, neg_g_pow, q), binom(s, j, q), q);
    for (std::size_t i = 0; i < coef.size(); ++i)
      if (coef[i] != 0) out[{static_cast<int>(i), s - j}] = coef[i];
    neg_g_pow = mul(neg_g_pow, neg_g, q);
  }
  return out;
}

// Nearest codewords of RS(n, k) with the given locators by enumerating all
// q^k information polynomials. Returns (distance, list of information words).
inline std::pair<std::size_t, std::vector<Vec>> nearest(const Vec& r, const Vec& locators,
                                                        std::size_t k, std::int64_t q) {
  std::size_t best = r.size() + 1;
  std::vector<Vec> arg;
  Vec f(k, 0);
  while (true) {
    Vec c;
    for (auto a : locators) c.push_back(eval(f, a, q));
    const std::size_t d = distance(c, r);
    if (d < best) {
      best = d;
      arg.clear();
    }
    if (d == best) arg.push_back(f);
    std::size_t i = 0;
    while (i < k && ++f[i] == q) f[i++] = 0;
    if (i == k) break;
  }
  return {best, arg};
}

}  // namespace oracle
