#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "rslink/field.hpp"

namespace rslink {

/// Packed vector of canonical residues of one field.
using Residues = std::vector<std::uint32_t>;

/// Dense row-major matrix over GF(q).
class Mat {
 public:
  Mat(const Field& f, std::size_t rows, std::size_t cols)
      : field_(f), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

  const Field& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  std::uint32_t operator()(std::size_t r, std::size_t c) const noexcept {
    return a_[r * cols_ + c];
  }
  std::uint32_t& operator()(std::size_t r, std::size_t c) noexcept {
    return a_[r * cols_ + c];
  }
  Elem at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Elem& v);

  std::span<const std::uint32_t> row(std::size_t r) const noexcept {
    return {a_.data() + r * cols_, cols_};
  }
  std::span<std::uint32_t> row(std::size_t r) noexcept {
    return {a_.data() + r * cols_, cols_};
  }

  /// Copies `block` into this matrix with its top-left corner at (r0, c0).
  void place(std::size_t r0, std::size_t c0, const Mat& block);

  Residues apply(std::span<const std::uint32_t> v) const;
  /// Scales column c by d[c].
  Mat scale_columns(std::span<const std::uint32_t> d) const;
  /// This matrix stacked on top of `below`.
  Mat stack(const Mat& below) const;

  friend bool operator==(const Mat& a, const Mat& b) noexcept {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
           a.a_ == b.a_;
  }

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::uint32_t> a_;
};

struct Echelon {
  Mat reduced;
  /// Pivot column of each nonzero row, strictly increasing.
  std::vector<std::size_t> pivots;
};

/// Reduced row-echelon form. Columns are scanned left to right and the pivot
/// row is the first row (at or below the current one) with a nonzero entry.
Echelon rref(Mat m);

std::size_t rank(const Mat& m);

/// Basis of {v : m v = 0}: one vector per free column, in ascending order of
/// that column, with a 1 at the free column and zeros at the other free
/// columns. Empty when the nullspace is trivial.
std::vector<Residues> nullspace(const Mat& m);

bool is_zero(std::span<const std::uint32_t> v) noexcept;

/// Among all nonzero combinations of `basis`, finds one whose entries in the
/// column block [offset, offset + length) have the lowest possible "degree"
/// (highest nonzero index within the block), scaled so that entry is 1.
/// The result is the canonical RREF row of the basis span under a column
/// order that puts the block first, highest index first. Returns nullopt
/// when every vector in the span vanishes on the block.
std::optional<Residues> min_block_degree_solution(const Field& f,
                                                  std::span<const Residues> basis,
                                                  std::size_t offset,
                                                  std::size_t length);

}  // namespace rslink
