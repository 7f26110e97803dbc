#include "rslink/matrix.hpp"

#include <algorithm>
#include <numeric>

namespace rslink {

Elem Mat::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw Error(Errc::invalid_argument, "matrix index out of range");
  return Elem(field_, (*this)(r, c));
}

void Mat::set(std::size_t r, std::size_t c, const Elem& v) {
  if (r >= rows_ || c >= cols_) throw Error(Errc::invalid_argument, "matrix index out of range");
  if (v.modulus() != field_.q())
    throw Error(Errc::field_mismatch, "matrix entry from a different field");
  (*this)(r, c) = v.value();
}

void Mat::place(std::size_t r0, std::size_t c0, const Mat& block) {
  if (r0 + block.rows_ > rows_ || c0 + block.cols_ > cols_)
    throw Error(Errc::invalid_argument, "block does not fit");
  for (std::size_t r = 0; r < block.rows_; ++r)
    std::copy_n(block.row(r).begin(), block.cols_, row(r0 + r).begin() + c0);
}

Residues Mat::apply(std::span<const std::uint32_t> v) const {
  if (v.size() != cols_) throw Error(Errc::invalid_argument, "vector length does not match matrix");
  Residues out(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::uint32_t acc = 0;
    for (std::size_t c = 0; c < cols_; ++c)
      acc = field_.add(acc, field_.mul((*this)(r, c), v[c]));
    out[r] = acc;
  }
  return out;
}

Mat Mat::scale_columns(std::span<const std::uint32_t> d) const {
  if (d.size() != cols_) throw Error(Errc::invalid_argument, "scaling length does not match matrix");
  Mat out = *this;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(r, c) = field_.mul(out(r, c), d[c]);
  return out;
}

Mat Mat::stack(const Mat& below) const {
  if (below.cols_ != cols_ || !(below.field_ == field_))
    throw Error(Errc::invalid_argument, "cannot stack incompatible matrices");
  Mat out(field_, rows_ + below.rows_, cols_);
  out.place(0, 0, *this);
  out.place(rows_, 0, below);
  return out;
}

Echelon rref(Mat m) {
  const Field& f = m.field();
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < m.cols() && lead < m.rows(); ++c) {
    std::size_t p = lead;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != lead) {
      auto a = m.row(p), b = m.row(lead);
      std::swap_ranges(a.begin(), a.end(), b.begin());
    }
    auto prow = m.row(lead);
    const std::uint32_t inv = f.inv(prow[c]);
    for (std::size_t j = c; j < m.cols(); ++j) prow[j] = f.mul(prow[j], inv);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead) continue;
      const std::uint32_t factor = m(r, c);
      if (factor == 0) continue;
      auto rr = m.row(r);
      for (std::size_t j = c; j < m.cols(); ++j)
        rr[j] = f.sub(rr[j], f.mul(factor, prow[j]));
    }
    pivots.push_back(c);
    ++lead;
  }
  return {std::move(m), std::move(pivots)};
}

std::size_t rank(const Mat& m) { return rref(m).pivots.size(); }

std::vector<Residues> nullspace(const Mat& m) {
  const Field& f = m.field();
  const Echelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;

  std::vector<Residues> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Residues v(m.cols(), 0);
    v[free] = 1 % f.q();
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
      v[e.pivots[r]] = f.neg(e.reduced(r, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

bool is_zero(std::span<const std::uint32_t> v) noexcept {
  return std::all_of(v.begin(), v.end(), [](std::uint32_t x) { return x == 0; });
}

std::optional<Residues> min_block_degree_solution(const Field& f,
                                                  std::span<const Residues> basis,
                                                  std::size_t offset,
                                                  std::size_t length) {
  if (basis.empty()) return std::nullopt;
  const std::size_t cols = basis.front().size();
  if (offset + length > cols) throw Error(Errc::invalid_argument, "block out of range");

  // order[j] = original column placed at position j.
  std::vector<std::size_t> order;
  order.reserve(cols);
  for (std::size_t j = length; j-- > 0;) order.push_back(offset + j);
  for (std::size_t c = 0; c < cols; ++c)
    if (c < offset || c >= offset + length) order.push_back(c);

  Mat k(f, basis.size(), cols);
  for (std::size_t r = 0; r < basis.size(); ++r) {
    if (basis[r].size() != cols) throw Error(Errc::invalid_argument, "ragged basis");
    for (std::size_t j = 0; j < cols; ++j) k(r, j) = basis[r][order[j]];
  }
  const Echelon e = rref(std::move(k));

  // The last pivot inside the block is the lowest attainable leading index.
  std::optional<std::size_t> chosen;
  for (std::size_t r = 0; r < e.pivots.size(); ++r)
    if (e.pivots[r] < length) chosen = r;
  if (!chosen) return std::nullopt;

  Residues out(cols, 0);
  for (std::size_t j = 0; j < cols; ++j) out[order[j]] = e.reduced(*chosen, j);
  return out;
}

}  // namespace rslink
