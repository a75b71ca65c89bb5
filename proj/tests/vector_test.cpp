#include "tikreg/vector.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "tikreg/errors.hpp"

using tikreg::Vector;

TEST(Vector, RejectsEmptyAndNonFinite) {
  EXPECT_THROW((void)Vector(std::vector<double>{}), tikreg::InvalidInput);
  EXPECT_THROW((Vector{1.0, std::numeric_limits<double>::quiet_NaN()}), tikreg::InvalidInput);
  EXPECT_THROW((Vector{std::numeric_limits<double>::infinity()}), tikreg::InvalidInput);
}

TEST(Vector, NormsAndDot) {
  const Vector v{3.0, 4.0};
  EXPECT_EQ(v.dim(), 2u);
  EXPECT_DOUBLE_EQ(v.norm(), 5.0);
  EXPECT_DOUBLE_EQ(v.squared_norm(), 25.0);
  EXPECT_DOUBLE_EQ(tikreg::dot(v, Vector{1.0, -1.0}), -1.0);
  EXPECT_DOUBLE_EQ(tikreg::distance(v, Vector{0.0, 0.0}), 5.0);
}

TEST(Vector, ArithmeticAndMismatch) {
  const Vector a{1.0, 2.0};
  const Vector b{0.5, -1.0};
  EXPECT_EQ(a + b, (Vector{1.5, 1.0}));
  EXPECT_EQ(a - b, (Vector{0.5, 3.0}));
  EXPECT_EQ(2.0 * a, (Vector{2.0, 4.0}));
  EXPECT_EQ(tikreg::linear_combination(2.0, a, -1.0, b), (Vector{1.5, 5.0}));
  EXPECT_THROW(tikreg::dot(a, Vector{1.0}), tikreg::InvalidInput);
  EXPECT_THROW(a - (Vector{1.0, 2.0, 3.0}), tikreg::InvalidInput);
}

TEST(Vector, Factories) {
  EXPECT_EQ(Vector::zeros(3), (Vector{0.0, 0.0, 0.0}));
  EXPECT_EQ(Vector::basis(3, 1), (Vector{0.0, 1.0, 0.0}));
  EXPECT_THROW(Vector::basis(2, 2), tikreg::InvalidInput);
  EXPECT_THROW(Vector::zeros(0), tikreg::InvalidInput);
}
