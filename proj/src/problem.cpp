#include "omega/problem.hpp"

#include <numeric>
#include <string>
#include <utility>

#include "omega/errors.hpp"

namespace omega {

LPProblem make_problem(Vector c, Matrix A, Vector b)
{
    LPProblem problem;
    problem.n = c.size();
    problem.m = b.size();
    problem.c = std::move(c);
    problem.A = std::move(A);
    problem.b = std::move(b);
    problem.constraint_order.resize(problem.m);
    std::iota(problem.constraint_order.begin(), problem.constraint_order.end(), std::size_t{0});
    validate_shape(problem);
    return problem;
}

void validate_shape(const LPProblem& problem)
{
    if (problem.n == 0)
        throw Error(ErrorKind::InvalidProblem, "problem needs at least one variable (n >= 1)");
    if (problem.m == 0)
        throw Error(ErrorKind::InvalidProblem, "problem needs at least one constraint (m >= 1)");
    if (problem.c.size() != problem.n)
        throw Error(ErrorKind::InvalidProblem, "objective has " + std::to_string(problem.c.size()) +
                                                   " entries, expected n = " + std::to_string(problem.n));
    if (problem.b.size() != problem.m)
        throw Error(ErrorKind::InvalidProblem, "right-hand side has " + std::to_string(problem.b.size()) +
                                                   " entries, expected m = " + std::to_string(problem.m));
    if (problem.A.size() != problem.m)
        throw Error(ErrorKind::InvalidProblem, "constraint matrix has " + std::to_string(problem.A.size()) +
                                                   " rows, expected m = " + std::to_string(problem.m));
    for (std::size_t l = 0; l < problem.m; ++l) {
        if (problem.A[l].size() != problem.n)
            throw Error(ErrorKind::InvalidProblem, "constraint row " + std::to_string(l + 1) + " has " +
                                                       std::to_string(problem.A[l].size()) +
                                                       " entries, expected n = " + std::to_string(problem.n));
    }
    if (!problem.constraint_order.empty() && problem.constraint_order.size() != problem.m)
        throw Error(ErrorKind::InvalidProblem, "constraint order does not match m");
}

LPProblem canonicalize_problem(const LPProblem& raw)
{
    validate_shape(raw);
    LPProblem problem = raw;
    if (problem.constraint_order.empty()) {
        problem.constraint_order.resize(problem.m);
        std::iota(problem.constraint_order.begin(), problem.constraint_order.end(), std::size_t{0});
    }

    for (std::size_t l = 0; l < problem.m; ++l) {
        if (problem.b[l] < 0)
            throw Error(ErrorKind::NegativeRhs, "b_" + std::to_string(l + 1) + " = " + to_string(problem.b[l]) +
                                                    " is negative; right-hand sides must be >= 0");
    }
    if (problem.b[0] > 0)
        return problem;

    std::size_t pivot = 1;
    while (pivot < problem.m && problem.b[pivot] == 0)
        ++pivot;
    if (pivot == problem.m)
        throw Error(ErrorKind::AllRhsZero, "b_1 = 0 and no positive b_l: scaling by b_1 is undefined");

    std::swap(problem.A[0], problem.A[pivot]);
    std::swap(problem.b[0], problem.b[pivot]);
    std::swap(problem.constraint_order[0], problem.constraint_order[pivot]);
    return problem;
}

ReducedData build_reduced_data(const LPProblem& problem)
{
    validate_shape(problem);
    if (problem.b[0] <= 0)
        throw Error(ErrorKind::InvalidProblem, "build_reduced_data requires b_1 > 0; canonicalize first");

    const std::size_t n = problem.n;
    const Rational& b1 = problem.b[0];
    const Vector& a1 = problem.A[0];

    ReducedData reduced;
    reduced.n = n;
    reduced.fs.reserve(problem.m - 1);
    for (std::size_t l = 1; l < problem.m; ++l) {
        const Rational scale = problem.b[l] / b1;
        Vector f(n + 1);
        for (std::size_t k = 0; k < n; ++k)
            f[k] = problem.A[l][k] - scale * a1[k];
        f[n] = -scale;
        reduced.fs.push_back(std::move(f));
    }

    reduced.e1.assign(problem.c.begin(), problem.c.end());
    reduced.e1.push_back(0);

    reduced.e2.resize(n + 1);
    for (std::size_t k = 0; k < n; ++k)
        reduced.e2[k] = a1[k] / b1;
    reduced.e2[n] = Rational(1) / b1;
    return reduced;
}

}  // namespace omega
