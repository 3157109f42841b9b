#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "binmath.hpp"
#include "errors.hpp"

using namespace biso;

// High-precision anchors, evaluated independently and pinned.
constexpr double kH011 = 0.49991595816452799564;   // h(0.11)
constexpr double kH02 = 0.72192809488736234787;    // h(0.2)
constexpr double kH09 = 0.46899559358928122125;    // h(0.9)
constexpr double kHinvHalf = 0.11002786443835955126;  // h^{-1}(0.5)

TEST_CASE("binary entropy endpoints and midpoint are exact") {
  CHECK(binary_entropy(0.0) == 0.0);
  CHECK(binary_entropy(1.0) == 0.0);
  CHECK(binary_entropy(0.5) == 1.0);
}

TEST_CASE("binary entropy matches pinned high-precision values") {
  CHECK(std::abs(binary_entropy(0.11) - kH011) < 1e-15);
  CHECK(std::abs(binary_entropy(0.2) - kH02) < 1e-15);
  CHECK(std::abs(binary_entropy(0.9) - kH09) < 1e-15);
}

TEST_CASE("binary entropy is symmetric about one half") {
  for (int i = 0; i <= 100; ++i) {
    double x = i / 100.0;
    CHECK(binary_entropy(x) == doctest::Approx(binary_entropy(1.0 - x)).epsilon(1e-15));
  }
}

TEST_CASE("binary entropy rejects arguments outside the unit interval") {
  CHECK_THROWS_AS(binary_entropy(-0.01), Error);
  CHECK_THROWS_AS(binary_entropy(1.01), Error);
  CHECK_NOTHROW(binary_entropy(-1e-12));  // within abs_eps slack
}

TEST_CASE("inverse entropy endpoints") {
  CHECK(binary_entropy_inverse(0.0) == 0.0);
  CHECK(binary_entropy_inverse(1.0) == 0.5);
}

TEST_CASE("inverse entropy hits the pinned value at one half") {
  CHECK(std::abs(binary_entropy_inverse(0.5) - kHinvHalf) < 1e-12);
}

TEST_CASE("inverse entropy round-trips through the entropy") {
  CHECK(std::abs(binary_entropy_inverse(kH02) - 0.2) < 1e-12);
  Tolerance tol;
  for (int i = 0; i <= 10000; ++i) {
    double y = i / 10000.0;
    double x = binary_entropy_inverse(y);
    REQUIRE(std::abs(binary_entropy(x) - y) <= tol.root_eps);
  }
}

TEST_CASE("inverse entropy is monotone nondecreasing") {
  double prev = 0.0;
  for (int i = 0; i <= 1000; ++i) {
    double x = binary_entropy_inverse(i / 1000.0);
    REQUIRE(x >= prev);
    prev = x;
  }
}

TEST_CASE("convolution identities") {
  CHECK(convolve(0.0, 0.3) == 0.3);
  CHECK(convolve(0.5, 0.3) == 0.5);
  CHECK(convolve(0.1, 0.2) == doctest::Approx(0.26).epsilon(1e-15));
  for (int i = 0; i <= 20; ++i) {
    for (int j = 0; j <= 20; ++j) {
      double a = i / 20.0, b = j / 20.0;
      CHECK(convolve(a, b) == convolve(b, a));
      CHECK(convolve(a, b) >= 0.0);
      CHECK(convolve(a, b) <= 1.0);
    }
  }
}

TEST_CASE("entropy transform y -> h(x * hinv(y)) is convex") {
  // Second differences on a uniform grid must be nonnegative for each
  // crossover; strictly positive away from the degenerate crossovers.
  Tolerance tol;
  for (int k = 1; k <= 9; ++k) {
    double x = 0.05 * k;
    const int n = 200;
    double prev2 = 0, prev1 = 0;
    for (int i = 0; i <= n; ++i) {
      double y = static_cast<double>(i) / n;
      double v = binary_entropy(convolve(x, binary_entropy_inverse(y)));
      if (i >= 2) {
        double second = v - 2.0 * prev1 + prev2;
        REQUIRE(second >= -tol.abs_eps);
      }
      prev2 = prev1;
      prev1 = v;
    }
  }
}
