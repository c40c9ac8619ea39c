#pragma once

#include <vector>

#include "chipfire/graph.hpp"
#include "chipfire/rational.hpp"

namespace chipfire {

/// Solves m * x = rhs exactly over the rationals. The matrix must be square
/// and nonsingular; otherwise Error(internal_error). Uses fraction-free
/// elimination on the denominator-cleared integer system.
std::vector<Rat> solve_linear_system(std::vector<std::vector<Rat>> m,
                                     std::vector<Rat> rhs);

/// Solves laplacian(g) * f = rhs with f[pin] = 0, dropping the pinned row.
/// The reduced system is nonsingular for every connected graph. Requires the
/// entries of rhs to sum to zero; otherwise no solution exists and the call
/// throws Error(internal_error).
std::vector<Rat> solve_pinned_laplacian(const Graph& g,
                                        const std::vector<Rat>& rhs,
                                        int pin = 0);

}  // namespace chipfire
