#include <gtest/gtest.h>

#include <limits>
#include <stdexcept>
#include <vector>

#include "jointinfo/encoding.hpp"

namespace jointinfo {
namespace {

TEST(Encoding, FirstCellMapsToOne) { EXPECT_EQ(encode_pair(1, 1, PairShape(2, 2)), 1u); }

TEST(Encoding, SecondRowStartsAtSPlusOne) {
  EXPECT_EQ(encode_pair(2, 1, PairShape(2, 2)), 3u);
  EXPECT_EQ(encode_pair(2, 1, PairShape(3, 5)), 6u);
}

TEST(Encoding, LastCellMapsToRS) {
  const PairShape shape(4, 7);
  EXPECT_EQ(encode_pair(4, 7, shape), 28u);
}

TEST(Encoding, DecodeExamples) {
  EXPECT_EQ(decode_index(1, PairShape(2, 2)), (Cell{1, 1}));
  EXPECT_EQ(decode_index(4, PairShape(2, 2)), (Cell{2, 2}));
}

TEST(Encoding, DiagonalExamples) {
  EXPECT_EQ(diagonal_index(1, PairShape(3, 3)), 1u);
  EXPECT_EQ(diagonal_index(3, PairShape(3, 3)), 9u);
  EXPECT_EQ(diagonal_index(2, PairShape(4, 4)), 6u);
  EXPECT_EQ(diagonal_index(2, PairShape(4, 4)), encode_pair(2, 2, PairShape(4, 4)));
}

// Row-major enumeration order is the oracle: the k-th visited cell must get index k.
TEST(Encoding, ExhaustiveBijectionUpTo32) {
  for (std::size_t r = 1; r <= 32; ++r) {
    for (std::size_t s = 1; s <= 32; ++s) {
      const PairShape shape(r, s);
      std::vector<bool> hit(r * s + 1, false);
      std::size_t expected = 0;
      for (std::size_t i = 1; i <= r; ++i) {
        for (std::size_t j = 1; j <= s; ++j) {
          const std::size_t k = encode_pair(i, j, shape);
          ASSERT_EQ(k, ++expected);
          ASSERT_FALSE(hit[k]);
          hit[k] = true;
          ASSERT_EQ(decode_index(k, shape), (Cell{i, j}));
        }
      }
      for (std::size_t k = 1; k <= r * s; ++k) {
        const Cell c = decode_index(k, shape);
        ASSERT_EQ(encode_pair(c.row, c.col, shape), k);
      }
      if (r == s) {
        for (std::size_t i = 1; i <= s; ++i) {
          ASSERT_EQ(diagonal_index(i, shape), encode_pair(i, i, shape));
        }
      }
    }
  }
}

TEST(Encoding, OutOfRangeNamesCoordinate) {
  const PairShape shape(2, 3);
  try {
    encode_pair(3, 1, shape);
    FAIL() << "expected domain_error";
  } catch (const std::domain_error &e) {
    EXPECT_NE(std::string(e.what()).find("row index i = 3"), std::string::npos) << e.what();
  }
  try {
    encode_pair(1, 0, shape);
    FAIL() << "expected domain_error";
  } catch (const std::domain_error &e) {
    EXPECT_NE(std::string(e.what()).find("column index j = 0"), std::string::npos) << e.what();
  }
  EXPECT_THROW(decode_index(0, shape), std::domain_error);
  EXPECT_THROW(decode_index(7, shape), std::domain_error);
}

TEST(Encoding, DiagonalRejectsNonSquare) {
  EXPECT_THROW(diagonal_index(1, PairShape(2, 3)), std::domain_error);
  EXPECT_THROW(diagonal_index(4, PairShape(3, 3)), std::domain_error);
}

TEST(Encoding, ShapeValidation) {
  EXPECT_THROW(PairShape(0, 3), std::invalid_argument);
  EXPECT_THROW(PairShape(3, 0), std::invalid_argument);
  const auto big = std::numeric_limits<std::size_t>::max() / 2;
  EXPECT_THROW(PairShape(big, 3), std::invalid_argument);
  EXPECT_NO_THROW(PairShape(big, 2));
}

} // namespace
} // namespace jointinfo
