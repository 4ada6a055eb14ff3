#include "matchmod/gf2.hpp"

#include <stdexcept>

namespace matchmod {

Gf2Matrix::Gf2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), wpr_((cols + 63) / 64), words_(rows * wpr_, 0) {}

Gf2Matrix Gf2Matrix::identity(std::size_t n) {
  Gf2Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

Gf2Matrix Gf2Matrix::ones(std::size_t rows, std::size_t cols) {
  Gf2Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, true);
  return m;
}

void Gf2Matrix::xor_row(std::size_t dst, const Gf2Matrix& src, std::size_t src_row) {
  std::uint64_t* d = &words_[dst * wpr_];
  const std::uint64_t* s = &src.words_[src_row * src.wpr_];
  for (std::size_t w = 0; w < wpr_; ++w) d[w] ^= s[w];
}

bool Gf2Matrix::row_is_zero(std::size_t i) const {
  for (std::size_t w = 0; w < wpr_; ++w)
    if (words_[i * wpr_ + w]) return false;
  return true;
}

bool Gf2Matrix::is_zero() const {
  for (std::uint64_t w : words_)
    if (w) return false;
  return true;
}

Gf2Matrix Gf2Matrix::operator*(const Gf2Matrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("gf2 multiply: shape mismatch");
  Gf2Matrix out(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    std::uint64_t* dst = &out.words_[i * out.wpr_];
    const std::uint64_t* row = &words_[i * wpr_];
    for (std::size_t w = 0; w < wpr_; ++w) {
      std::uint64_t bits = row[w];
      while (bits) {
        std::size_t j = w * 64 + static_cast<std::size_t>(__builtin_ctzll(bits));
        bits &= bits - 1;
        const std::uint64_t* src = &o.words_[j * o.wpr_];
        for (std::size_t v = 0; v < out.wpr_; ++v) dst[v] ^= src[v];
      }
    }
  }
  return out;
}

Gf2Matrix Gf2Matrix::operator+(const Gf2Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("gf2 add: shape mismatch");
  Gf2Matrix out = *this;
  for (std::size_t k = 0; k < words_.size(); ++k) out.words_[k] ^= o.words_[k];
  return out;
}

bool Gf2Matrix::operator==(const Gf2Matrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && words_ == o.words_;
}

Gf2Matrix Gf2Matrix::transpose() const {
  Gf2Matrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t w = 0; w < wpr_; ++w) {
      std::uint64_t bits = words_[i * wpr_ + w];
      while (bits) {
        std::size_t j = w * 64 + static_cast<std::size_t>(__builtin_ctzll(bits));
        bits &= bits - 1;
        out.set(j, i, true);
      }
    }
  return out;
}

Gf2Matrix Gf2Matrix::pow(std::uint64_t e) const {
  if (rows_ != cols_) throw std::invalid_argument("gf2 pow: square matrix required");
  Gf2Matrix result = identity(rows_);
  Gf2Matrix base = *this;
  while (e) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

void Gf2Matrix::eliminate(std::vector<std::size_t>* pivot_cols) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t pivot = r;
    while (pivot < rows_ && !get(pivot, c)) ++pivot;
    if (pivot == rows_) continue;
    if (pivot != r)
      for (std::size_t w = 0; w < wpr_; ++w)
        std::swap(words_[pivot * wpr_ + w], words_[r * wpr_ + w]);
    for (std::size_t i = 0; i < rows_; ++i)
      if (i != r && get(i, c)) xor_row(i, *this, r);
    if (pivot_cols) pivot_cols->push_back(c);
    ++r;
  }
}

std::size_t Gf2Matrix::rank() const {
  Gf2Matrix tmp = *this;
  std::vector<std::size_t> pivots;
  tmp.eliminate(&pivots);
  return pivots.size();
}

Gf2Matrix Gf2Matrix::rref() const {
  Gf2Matrix tmp = *this;
  tmp.eliminate(nullptr);
  return tmp;
}

Gf2Matrix Gf2Matrix::row_space_basis() const {
  Gf2Matrix r = rref();
  std::vector<int> keep;
  for (std::size_t i = 0; i < rows_; ++i)
    if (!r.row_is_zero(i)) keep.push_back(static_cast<int>(i));
  return r.select_rows(keep);
}

Gf2Matrix Gf2Matrix::left_nullspace() const {
  // row-reduce [M | I]; rows whose M-part vanishes give the null combos
  Gf2Matrix aug = augment(identity(rows_));
  std::vector<std::size_t> pivots;
  // restrict pivot search to the M columns
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < aug.rows_; ++c) {
    std::size_t pivot = r;
    while (pivot < aug.rows_ && !aug.get(pivot, c)) ++pivot;
    if (pivot == aug.rows_) continue;
    if (pivot != r)
      for (std::size_t w = 0; w < aug.wpr_; ++w)
        std::swap(aug.words_[pivot * aug.wpr_ + w], aug.words_[r * aug.wpr_ + w]);
    for (std::size_t i = 0; i < aug.rows_; ++i)
      if (i != r && aug.get(i, c)) aug.xor_row(i, aug, r);
    ++r;
  }
  std::vector<int> null_rows;
  for (std::size_t i = r; i < rows_; ++i) null_rows.push_back(static_cast<int>(i));
  std::vector<int> id_cols(rows_);
  for (std::size_t j = 0; j < rows_; ++j) id_cols[j] = static_cast<int>(cols_ + j);
  return aug.select_rows(null_rows).select_columns(id_cols);
}

std::optional<Gf2Matrix> Gf2Matrix::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("gf2 inverse: square matrix required");
  Gf2Matrix aug = augment(identity(rows_));
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_; ++c) {
    std::size_t pivot = r;
    while (pivot < rows_ && !aug.get(pivot, c)) ++pivot;
    if (pivot == rows_) return std::nullopt;
    if (pivot != r)
      for (std::size_t w = 0; w < aug.wpr_; ++w)
        std::swap(aug.words_[pivot * aug.wpr_ + w], aug.words_[r * aug.wpr_ + w]);
    for (std::size_t i = 0; i < rows_; ++i)
      if (i != r && aug.get(i, c)) aug.xor_row(i, aug, r);
    ++r;
  }
  std::vector<int> id_cols(rows_);
  for (std::size_t j = 0; j < rows_; ++j) id_cols[j] = static_cast<int>(cols_ + j);
  return aug.select_columns(id_cols);
}

Gf2Matrix Gf2Matrix::stack(const Gf2Matrix& o) const {
  if (cols_ != o.cols_) throw std::invalid_argument("gf2 stack: column mismatch");
  Gf2Matrix out(rows_ + o.rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i) out.xor_row(i, *this, i);
  for (std::size_t i = 0; i < o.rows_; ++i) out.xor_row(rows_ + i, o, i);
  return out;
}

Gf2Matrix Gf2Matrix::augment(const Gf2Matrix& o) const {
  if (rows_ != o.rows_) throw std::invalid_argument("gf2 augment: row mismatch");
  Gf2Matrix out(rows_, cols_ + o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t w = 0; w < wpr_; ++w) {
      std::uint64_t bits = words_[i * wpr_ + w];
      while (bits) {
        std::size_t j = w * 64 + static_cast<std::size_t>(__builtin_ctzll(bits));
        bits &= bits - 1;
        out.set(i, j, true);
      }
    }
    for (std::size_t w = 0; w < o.wpr_; ++w) {
      std::uint64_t bits = o.words_[i * o.wpr_ + w];
      while (bits) {
        std::size_t j = w * 64 + static_cast<std::size_t>(__builtin_ctzll(bits));
        bits &= bits - 1;
        out.set(i, cols_ + j, true);
      }
    }
  }
  return out;
}

Gf2Matrix Gf2Matrix::select_columns(const std::vector<int>& cols) const {
  Gf2Matrix out(rows_, cols.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols.size(); ++j)
      if (get(i, static_cast<std::size_t>(cols[j]))) out.set(i, j, true);
  return out;
}

Gf2Matrix Gf2Matrix::select_rows(const std::vector<int>& rows) const {
  Gf2Matrix out(rows.size(), cols_);
  for (std::size_t i = 0; i < rows.size(); ++i)
    out.xor_row(i, *this, static_cast<std::size_t>(rows[i]));
  return out;
}

}  // namespace matchmod
