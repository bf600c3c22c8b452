#ifndef JOINTINFO_ENCODING_HPP_
#define JOINTINFO_ENCODING_HPP_

#include <cstddef>
#include <utility>

namespace jointinfo {

/// Sizes of the two alphabets: X takes r values, Y takes s values.
///
/// All indices exchanged through the public API are 1-based: rows in [1, r],
/// columns in [1, s] and cells of the associated variable Z in [1, r*s].
class PairShape {
public:
  /// Throws std::invalid_argument if either size is zero or r*s overflows.
  PairShape(std::size_t rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t cells() const noexcept { return rows_ * cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  friend bool operator==(const PairShape &, const PairShape &) = default;

private:
  std::size_t rows_;
  std::size_t cols_;
};

/// Row/column coordinates of a cell, 1-based.
struct Cell {
  std::size_t row;
  std::size_t col;

  friend bool operator==(const Cell &, const Cell &) = default;
};

/// k = s(i-1) + j. Throws std::domain_error naming the offending coordinate.
std::size_t encode_pair(std::size_t row, std::size_t col, const PairShape &shape);

/// Inverse of encode_pair: i = floor((k+s-1)/s), j = k - s(i-1).
Cell decode_index(std::size_t k, const PairShape &shape);

/// Z-index of the diagonal cell (i, i) on a square shape: 1 + (i-1)(s+1).
std::size_t diagonal_index(std::size_t i, const PairShape &shape);

} // namespace jointinfo

#endif // JOINTINFO_ENCODING_HPP_
