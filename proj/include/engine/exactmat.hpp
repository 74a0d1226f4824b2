// Exact dense linear algebra over the rationals: Gaussian elimination with
// first-nonzero pivoting. Systems here are small (class-by-class), so
// clarity wins over fraction-free tricks.
#pragma once

#include <optional>
#include <vector>

#include "engine/numeric.hpp"

namespace engine {

using RatMatrix = std::vector<std::vector<BigRat>>;

// Solves a x = b; nullopt when a is singular. a must be square.
std::optional<std::vector<BigRat>> solve_linear(RatMatrix a,
                                                std::vector<BigRat> b);

// Solves x^T a = b^T, i.e. the transposed system.
std::optional<std::vector<BigRat>> solve_linear_left(const RatMatrix& a,
                                                     const std::vector<BigRat>& b);

}  // namespace engine
