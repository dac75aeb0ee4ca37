#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

#include "tricode/error.hpp"
#include "tricode/gf4.hpp"

namespace tricode {

using F4Vector = std::vector<F4>;

/// Dense row-major matrix over GF(2) or GF(4).
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one();
    return m;
  }

  /// Builds from nested rows; every row must have the same length.
  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw Error(ErrorKind::ShapeError, "ragged matrix rows");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  std::vector<T> row_vector(std::size_t i) const {
    auto r = row(i);
    return {r.begin(), r.end()};
  }
  std::vector<T> col_vector(std::size_t j) const {
    std::vector<T> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
    return out;
  }

  const std::vector<T>& data() const { return data_; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  static constexpr T one() {
    if constexpr (std::is_same_v<T, F4>) {
      return kOne;
    } else {
      return T(true);
    }
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using F4Matrix = Matrix<F4>;
using F2Matrix = Matrix<F2>;

F4Matrix promote(const F2Matrix& a);
/// Entry-wise demotion; throws NonBinaryResult if any entry is w or w^2.
F2Matrix demote(const F4Matrix& a);

F4Matrix operator+(const F4Matrix& a, const F4Matrix& b);
F4Matrix matmul(const F4Matrix& a, const F4Matrix& b);
F4Matrix transpose(const F4Matrix& a);
F2Matrix transpose(const F2Matrix& a);

/// Gauss-Jordan inverse over GF(4). Throws SingularMatrix when a pivot
/// column has no nonzero entry at or below the diagonal.
F4Matrix invert(const F4Matrix& a);

/// Rank over GF(4) (as a vector space), by row reduction.
std::size_t rank_f4(const F4Matrix& a);

/// GF(2)-rank of GF(4) vectors after expanding each into GF(2)^{2n}
/// through x = c0 + c1 w.
std::size_t rank_f2(std::span<const F4Vector> rows, std::size_t n);

std::size_t rank_f2(const F2Matrix& a);

/// Basis of {x : a x = 0} over GF(2), one basis vector per row of the result.
F2Matrix kernel_f2(const F2Matrix& a);

/// H (H^T H)^{-1} H^T. Throws SingularMatrix when H^T H is not invertible.
F4Matrix projection(const F4Matrix& h);

F4Matrix hstack(const F4Matrix& left, const F4Matrix& right);
F4Matrix block_diagonal(const F4Matrix& top_left, const F4Matrix& bottom_right);

// Text format: a "rows cols" line, then one line per row of whitespace
// separated symbols from {0, 1, w, W}.
F4Matrix parse_f4_matrix(std::istream& in);
F4Matrix parse_f4_matrix(const std::string& text);
/// Same format restricted to {0, 1}; other symbols raise ParseError.
F2Matrix parse_f2_matrix(std::istream& in);
F2Matrix parse_f2_matrix(const std::string& text);

std::string render_matrix(const F4Matrix& a);
std::string render_matrix(const F2Matrix& a);
/// One row as space separated symbols, no trailing newline.
std::string render_row(std::span<const F4> row);
/// Inverse of render_row for a known length.
F4Vector parse_row(const std::string& line, std::size_t expected);

}  // namespace tricode
