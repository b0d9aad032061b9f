#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>

#include "otto/bisection.hpp"

TEST(Bisect, SquareRootOfTwo) {
  const double root = otto::bisect([](double x) { return x * x - 2.0; }, 0.0, 2.0, 1e-12);
  EXPECT_NEAR(root, std::sqrt(2.0), 1e-12);
}

TEST(Bisect, DecreasingFunction) {
  const double root = otto::bisect([](double x) { return std::cos(x); }, 0.0, 3.0, 1e-13);
  EXPECT_NEAR(root, std::acos(0.0), 1e-13);
}

TEST(Bisect, ExactZeroAtEndpoint) {
  EXPECT_EQ(otto::bisect([](double x) { return x - 1.0; }, 1.0, 3.0, 1e-10), 1.0);
}

TEST(Bisect, ToleranceBelowUlpTerminates) {
  const double root = otto::bisect([](double x) { return x - 0.1; }, 0.0, 1.0, 0.0);
  EXPECT_NEAR(root, 0.1, 1e-16);
}

TEST(Bisect, RejectsUnbracketed) {
  EXPECT_THROW(otto::bisect([](double x) { return x * x + 1.0; }, -1.0, 1.0, 1e-10), std::invalid_argument);
}
