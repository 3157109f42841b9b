#pragma once

#include "tolerance.hpp"

namespace biso {

// Binary entropy h(x) in bits. h(0) = h(1) = 0, h(1/2) = 1.
double binary_entropy(double x, const Tolerance& tol = {});

// Unique x in [0, 1/2] with h(x) = y, found by bisection.
double binary_entropy_inverse(double y, const Tolerance& tol = {});

// Binary convolution a*b = a(1-b) + b(1-a): crossover of cascaded BSCs.
double convolve(double a, double b, const Tolerance& tol = {});

}  // namespace biso
