#pragma once

#include <cstddef>
#include <optional>

#include "omega/rational.hpp"

namespace omega::linalg {

std::size_t rank(Matrix rows);

/// Unique solution of the square system, or nullopt when singular.
std::optional<Vector> solve_square(Matrix lhs, Vector rhs);

/// A nonzero vector spanning the null space when it is one-dimensional.
std::optional<Vector> null_direction(const Matrix& rows, std::size_t columns);

}  // namespace omega::linalg
