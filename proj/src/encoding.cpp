#include "jointinfo/encoding.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace jointinfo {

namespace {

void check_range(const char *name, std::size_t value, std::size_t upper) {
  if (value < 1 || value > upper) {
    throw std::domain_error(std::string(name) + " = " + std::to_string(value) +
                            " out of range [1, " + std::to_string(upper) + "]");
  }
}

} // namespace

PairShape::PairShape(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {
  if (rows == 0 || cols == 0) {
    throw std::invalid_argument("alphabet sizes must be >= 1 (got r = " + std::to_string(rows) +
                                ", s = " + std::to_string(cols) + ")");
  }
  if (rows > std::numeric_limits<std::size_t>::max() / cols) {
    throw std::invalid_argument("r*s overflows the index range");
  }
}

std::size_t encode_pair(std::size_t row, std::size_t col, const PairShape &shape) {
  check_range("row index i", row, shape.rows());
  check_range("column index j", col, shape.cols());
  return shape.cols() * (row - 1) + col;
}

Cell decode_index(std::size_t k, const PairShape &shape) {
  check_range("Z index k", k, shape.cells());
  const std::size_t s = shape.cols();
  const std::size_t i = (k + s - 1) / s;
  return Cell{i, k - s * (i - 1)};
}

std::size_t diagonal_index(std::size_t i, const PairShape &shape) {
  if (!shape.is_square()) {
    throw std::domain_error("diagonal index requires a square shape (r = " +
                            std::to_string(shape.rows()) + ", s = " + std::to_string(shape.cols()) +
                            ")");
  }
  check_range("diagonal index i", i, shape.cols());
  return 1 + (i - 1) * (shape.cols() + 1);
}

} // namespace jointinfo
