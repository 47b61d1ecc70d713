#pragma once

#include <cstddef>
#include <vector>

#include "omega/rational.hpp"

namespace omega {

/// maximize c·x subject to x >= 0, A x <= b, with b >= 0.
struct LPProblem {
    std::size_t n = 0;  ///< variables
    std::size_t m = 0;  ///< constraints
    Vector c;
    Matrix A;
    Vector b;
    /// constraint_order[i] is the original index of row i. Identity unless
    /// canonicalize_problem had to move a positive right-hand side to the front.
    std::vector<std::size_t> constraint_order;

    friend bool operator==(const LPProblem&, const LPProblem&) = default;
};

/// Builds a problem and fills the identity constraint order. Shape is checked.
LPProblem make_problem(Vector c, Matrix A, Vector b);

/// Throws InvalidProblem on shape mismatches (n, m >= 1, |c| = n, A is m×n, |b| = m).
void validate_shape(const LPProblem& problem);

/// Returns a problem whose first right-hand side is positive. If b_1 = 0 the
/// first row is swapped with the lowest-index row having b_l > 0.
/// Throws NegativeRhs or AllRhsZero.
LPProblem canonicalize_problem(const LPProblem& raw);

/// Functions on {1, …, n+1}. Element n+1 is the homogenization slot carrying
/// the slack of the first constraint.
struct ReducedData {
    std::size_t n = 0;
    /// fs[l][k] = a_{l+2}(k) - (b_{l+2}/b_1) a_1(k), fs[l][n] = -b_{l+2}/b_1 (0-based l).
    std::vector<Vector> fs;
    Vector e1;  ///< (c, 0)
    Vector e2;  ///< (a_1, 1) / b_1
};

/// Requires b_1 > 0 (see canonicalize_problem).
ReducedData build_reduced_data(const LPProblem& problem);

}  // namespace omega
