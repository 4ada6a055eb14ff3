#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace matchmod {

// Dense matrix over GF(2), rows packed into 64-bit words. Row vectors
// act on the left: w = v * M.
class Gf2Matrix {
public:
  Gf2Matrix() = default;
  Gf2Matrix(std::size_t rows, std::size_t cols);
  static Gf2Matrix identity(std::size_t n);
  static Gf2Matrix ones(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t i, std::size_t j) const {
    return (words_[i * wpr_ + j / 64] >> (j % 64)) & 1u;
  }
  void set(std::size_t i, std::size_t j, bool v) {
    std::uint64_t mask = std::uint64_t{1} << (j % 64);
    if (v)
      words_[i * wpr_ + j / 64] |= mask;
    else
      words_[i * wpr_ + j / 64] &= ~mask;
  }

  void xor_row(std::size_t dst, const Gf2Matrix& src, std::size_t src_row);
  bool row_is_zero(std::size_t i) const;
  bool is_zero() const;

  Gf2Matrix operator*(const Gf2Matrix& o) const;
  Gf2Matrix operator+(const Gf2Matrix& o) const;  // XOR
  bool operator==(const Gf2Matrix& o) const;

  Gf2Matrix transpose() const;
  Gf2Matrix pow(std::uint64_t e) const;

  std::size_t rank() const;
  Gf2Matrix rref() const;
  // Nonzero rows of the rref: canonical basis of the row space.
  Gf2Matrix row_space_basis() const;
  // Basis of {v : v*M = 0}.
  Gf2Matrix left_nullspace() const;
  std::optional<Gf2Matrix> inverse() const;

  // Rows of this followed by rows of o (same column count).
  Gf2Matrix stack(const Gf2Matrix& o) const;
  // Columns of this followed by columns of o (same row count).
  Gf2Matrix augment(const Gf2Matrix& o) const;
  Gf2Matrix select_columns(const std::vector<int>& cols) const;
  Gf2Matrix select_rows(const std::vector<int>& rows) const;

private:
  std::size_t rows_ = 0, cols_ = 0, wpr_ = 0;
  std::vector<std::uint64_t> words_;
  void eliminate(std::vector<std::size_t>* pivot_cols);
};

}  // namespace matchmod
