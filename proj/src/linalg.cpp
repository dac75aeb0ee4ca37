#include "tricode/linalg.hpp"

#include <algorithm>
#include <istream>
#include <sstream>
#include <utility>

namespace tricode {

namespace {

void require_same_shape(const F4Matrix& a, const F4Matrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorKind::ShapeError, std::string(op) + ": shape mismatch");
  }
}

// Reduces bit rows to echelon form in place, returning the rank. Rows are
// vectors of 0/1 bytes of a common length.
std::size_t echelon_f2(std::vector<std::vector<std::uint8_t>>& rows, std::size_t width,
                       std::vector<std::size_t>* pivot_cols = nullptr) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < width && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != rank && rows[r][col] != 0) {
        for (std::size_t c = col; c < width; ++c) rows[r][c] ^= rows[rank][c];
      }
    }
    if (pivot_cols != nullptr) pivot_cols->push_back(col);
    ++rank;
  }
  return rank;
}

bool next_content_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    return true;
  }
  return false;
}

}  // namespace

F4Matrix promote(const F2Matrix& a) {
  F4Matrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = F4(a(i, j));
  return out;
}

F2Matrix demote(const F4Matrix& a) {
  F2Matrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (!a(i, j).is_binary()) {
        throw Error(ErrorKind::NonBinaryResult, "entry (" + std::to_string(i) + ", " +
                                                    std::to_string(j) + ") is not in GF(2)");
      }
      out(i, j) = F2(a(i, j) == kOne);
    }
  }
  return out;
}

F4Matrix operator+(const F4Matrix& a, const F4Matrix& b) {
  require_same_shape(a, b, "add");
  F4Matrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) + b(i, j);
  return out;
}

F4Matrix matmul(const F4Matrix& a, const F4Matrix& b) {
  if (a.cols() != b.rows()) {
    throw Error(ErrorKind::ShapeError, "matmul: " + std::to_string(a.rows()) + "x" +
                                           std::to_string(a.cols()) + " times " +
                                           std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  F4Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const F4 aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

F4Matrix transpose(const F4Matrix& a) {
  F4Matrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
  return out;
}

F2Matrix transpose(const F2Matrix& a) {
  F2Matrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
  return out;
}

F4Matrix invert(const F4Matrix& a) {
  if (!a.square()) throw Error(ErrorKind::ShapeError, "invert: matrix is not square");
  const std::size_t n = a.rows();
  F4Matrix work = a;
  F4Matrix out = F4Matrix::identity(n);

  for (std::size_t col = 0; col < n; ++col) {
    // First nonzero entry at or below the diagonal; the field is exact.
    std::size_t pivot = col;
    while (pivot < n && work(pivot, col).is_zero()) ++pivot;
    if (pivot == n) {
      throw Error(ErrorKind::SingularMatrix, "matrix is singular (no pivot in column " +
                                                 std::to_string(col) + ")");
    }
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(work(pivot, j), work(col, j));
        std::swap(out(pivot, j), out(col, j));
      }
    }
    const F4 scale = inv(work(col, col));
    for (std::size_t j = 0; j < n; ++j) {
      work(col, j) *= scale;
      out(col, j) *= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      const F4 factor = work(r, col);
      if (r == col || factor.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        work(r, j) += factor * work(col, j);
        out(r, j) += factor * out(col, j);
      }
    }
  }
  return out;
}

std::size_t rank_f4(const F4Matrix& a) {
  F4Matrix work = a;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < work.cols() && rank < work.rows(); ++col) {
    std::size_t pivot = rank;
    while (pivot < work.rows() && work(pivot, col).is_zero()) ++pivot;
    if (pivot == work.rows()) continue;
    for (std::size_t j = 0; j < work.cols(); ++j) std::swap(work(pivot, j), work(rank, j));
    const F4 scale = inv(work(rank, col));
    for (std::size_t j = 0; j < work.cols(); ++j) work(rank, j) *= scale;
    for (std::size_t r = rank + 1; r < work.rows(); ++r) {
      const F4 factor = work(r, col);
      if (factor.is_zero()) continue;
      for (std::size_t j = 0; j < work.cols(); ++j) work(r, j) += factor * work(rank, j);
    }
    ++rank;
  }
  return rank;
}

std::size_t rank_f2(std::span<const F4Vector> rows, std::size_t n) {
  std::vector<std::vector<std::uint8_t>> bits;
  bits.reserve(rows.size());
  for (const auto& row : rows) {
    if (row.size() != n) throw Error(ErrorKind::ShapeError, "rank_f2: ragged input");
    std::vector<std::uint8_t> expanded(2 * n);
    for (std::size_t j = 0; j < n; ++j) {
      expanded[j] = row[j].c0();
      expanded[n + j] = row[j].c1();
    }
    bits.push_back(std::move(expanded));
  }
  return echelon_f2(bits, 2 * n);
}

std::size_t rank_f2(const F2Matrix& a) {
  std::vector<std::vector<std::uint8_t>> bits(a.rows(), std::vector<std::uint8_t>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) bits[i][j] = a(i, j).bit;
  return echelon_f2(bits, a.cols());
}

F2Matrix kernel_f2(const F2Matrix& a) {
  const std::size_t width = a.cols();
  std::vector<std::vector<std::uint8_t>> bits(a.rows(), std::vector<std::uint8_t>(width));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < width; ++j) bits[i][j] = a(i, j).bit;

  std::vector<std::size_t> pivots;
  const std::size_t rank = echelon_f2(bits, width, &pivots);

  std::vector<bool> is_pivot(width, false);
  for (auto c : pivots) is_pivot[c] = true;

  // Reduced echelon form: each free column yields one kernel vector with a
  // 1 in that column and pivot variables read off the reduced rows.
  F2Matrix out(width - rank, width);
  std::size_t k = 0;
  for (std::size_t free = 0; free < width; ++free) {
    if (is_pivot[free]) continue;
    out(k, free) = F2(true);
    for (std::size_t r = 0; r < rank; ++r) {
      if (bits[r][free] != 0) out(k, pivots[r]) = F2(true);
    }
    ++k;
  }
  return out;
}

F4Matrix projection(const F4Matrix& h) {
  const F4Matrix ht = transpose(h);
  const F4Matrix gram_inv = invert(matmul(ht, h));
  return matmul(matmul(h, gram_inv), ht);
}

F4Matrix hstack(const F4Matrix& left, const F4Matrix& right) {
  if (left.rows() != right.rows()) throw Error(ErrorKind::ShapeError, "hstack: row count mismatch");
  F4Matrix out(left.rows(), left.cols() + right.cols());
  for (std::size_t i = 0; i < left.rows(); ++i) {
    for (std::size_t j = 0; j < left.cols(); ++j) out(i, j) = left(i, j);
    for (std::size_t j = 0; j < right.cols(); ++j) out(i, left.cols() + j) = right(i, j);
  }
  return out;
}

F4Matrix block_diagonal(const F4Matrix& top_left, const F4Matrix& bottom_right) {
  F4Matrix out(top_left.rows() + bottom_right.rows(), top_left.cols() + bottom_right.cols());
  for (std::size_t i = 0; i < top_left.rows(); ++i)
    for (std::size_t j = 0; j < top_left.cols(); ++j) out(i, j) = top_left(i, j);
  for (std::size_t i = 0; i < bottom_right.rows(); ++i)
    for (std::size_t j = 0; j < bottom_right.cols(); ++j)
      out(top_left.rows() + i, top_left.cols() + j) = bottom_right(i, j);
  return out;
}

F4Vector parse_row(const std::string& line, std::size_t expected) {
  std::istringstream tokens(line);
  std::vector<std::string> parts;
  for (std::string t; tokens >> t;) parts.push_back(t);
  // A row may also be written compactly as one word, e.g. "w10".
  if (parts.size() == 1 && expected > 1 && parts.front().size() == expected) {
    std::string word = parts.front();
    parts.clear();
    for (char c : word) parts.emplace_back(1, c);
  }
  if (parts.size() != expected) {
    throw Error(ErrorKind::ParseError, "expected " + std::to_string(expected) +
                                           " symbols, got " + std::to_string(parts.size()) +
                                           " in row '" + line + "'");
  }
  F4Vector out;
  out.reserve(expected);
  for (const auto& p : parts) out.push_back(parse_symbol(p));
  return out;
}

F4Matrix parse_f4_matrix(std::istream& in) {
  std::string line;
  if (!next_content_line(in, line)) throw Error(ErrorKind::ParseError, "missing matrix header");
  std::istringstream header(line);
  long long rows = -1;
  long long cols = -1;
  std::string extra;
  if (!(header >> rows >> cols) || rows < 0 || cols < 0 || (header >> extra)) {
    throw Error(ErrorKind::ParseError, "bad matrix header '" + line + "'");
  }
  F4Matrix out(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
  for (std::size_t i = 0; i < out.rows(); ++i) {
    if (!next_content_line(in, line)) {
      throw Error(ErrorKind::ParseError, "expected " + std::to_string(rows) + " rows, got " +
                                             std::to_string(i));
    }
    const F4Vector row = parse_row(line, out.cols());
    std::copy(row.begin(), row.end(), out.row(i).begin());
  }
  if (next_content_line(in, line)) throw Error(ErrorKind::ParseError, "trailing data after matrix");
  return out;
}

F4Matrix parse_f4_matrix(const std::string& text) {
  std::istringstream in(text);
  return parse_f4_matrix(in);
}

F2Matrix parse_f2_matrix(std::istream& in) {
  const F4Matrix wide = parse_f4_matrix(in);
  try {
    return demote(wide);
  } catch (const Error&) {
    throw Error(ErrorKind::ParseError, "binary matrix contains symbols other than 0 and 1");
  }
}

F2Matrix parse_f2_matrix(const std::string& text) {
  std::istringstream in(text);
  return parse_f2_matrix(in);
}

std::string render_row(std::span<const F4> row) {
  std::string out;
  for (std::size_t j = 0; j < row.size(); ++j) {
    if (j != 0) out += ' ';
    out += render_symbol(row[j]);
  }
  return out;
}

std::string render_matrix(const F4Matrix& a) {
  std::string out = std::to_string(a.rows()) + " " + std::to_string(a.cols()) + "\n";
  for (std::size_t i = 0; i < a.rows(); ++i) out += render_row(a.row(i)) + "\n";
  return out;
}

std::string render_matrix(const F2Matrix& a) { return render_matrix(promote(a)); }

}  // namespace tricode
