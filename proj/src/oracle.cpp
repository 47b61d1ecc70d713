#include "omega/oracle.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "omega/errors.hpp"
#include "omega/linalg.hpp"

namespace omega {

namespace {

/// Constraint rows in "row · x <= rhs" form: -x_j <= 0 first, then A x <= b.
struct ConstraintSet {
    Matrix rows;
    Vector rhs;
};

ConstraintSet all_constraints(const LPProblem& problem)
{
    ConstraintSet set;
    for (std::size_t j = 0; j < problem.n; ++j) {
        Vector row(problem.n, Rational(0));
        row[j] = -1;
        set.rows.push_back(std::move(row));
        set.rhs.push_back(0);
    }
    for (std::size_t l = 0; l < problem.m; ++l) {
        set.rows.push_back(problem.A[l]);
        set.rhs.push_back(problem.b[l]);
    }
    return set;
}

/// Calls visit(indices) for every k-subset of {0, …, total-1} in lexicographic order.
template <typename Visit>
void for_each_subset(std::size_t total, std::size_t k, Visit&& visit)
{
    if (k > total)
        return;
    std::vector<std::size_t> indices(k);
    for (std::size_t i = 0; i < k; ++i)
        indices[i] = i;
    while (true) {
        visit(indices);
        std::size_t i = k;
        while (i > 0 && indices[i - 1] == total - k + (i - 1))
            --i;
        if (i == 0)
            return;
        ++indices[i - 1];
        for (std::size_t j = i; j < k; ++j)
            indices[j] = indices[j - 1] + 1;
    }
}

bool satisfies(const ConstraintSet& set, std::span<const Rational> x, bool homogeneous)
{
    for (std::size_t i = 0; i < set.rows.size(); ++i) {
        const Rational bound = homogeneous ? Rational(0) : set.rhs[i];
        if (dot(set.rows[i], x) > bound)
            return false;
    }
    return true;
}

/// The recession cone {d >= 0, A d <= 0} is pointed; its extreme rays span a
/// one-dimensional solution space of n-1 tight homogeneous constraints.
bool has_improving_ray(const LPProblem& problem, const ConstraintSet& set)
{
    bool improving = false;
    for_each_subset(set.rows.size(), problem.n - 1, [&](const std::vector<std::size_t>& subset) {
        if (improving)
            return;
        Matrix tight;
        for (const auto index : subset)
            tight.push_back(set.rows[index]);
        auto direction = linalg::null_direction(tight, problem.n);
        if (!direction)
            return;
        for (int flip = 0; flip < 2 && !improving; ++flip) {
            if (flip == 1)
                for (auto& value : *direction)
                    value = -value;
            if (satisfies(set, *direction, true) && dot(problem.c, *direction) > 0)
                improving = true;
        }
    });
    return improving;
}

}  // namespace

OracleResult enumerate_vertices(const LPProblem& problem)
{
    validate_shape(problem);
    if (problem.n + problem.m > kOracleMaxSize)
        throw Error(ErrorKind::TooLarge, "oracle is limited to n + m <= " + std::to_string(kOracleMaxSize) +
                                             ", got " + std::to_string(problem.n + problem.m));

    const ConstraintSet set = all_constraints(problem);
    std::set<Vector> vertices;
    OracleResult result;

    for_each_subset(set.rows.size(), problem.n, [&](const std::vector<std::size_t>& subset) {
        ++result.subsets_examined;
        Matrix lhs;
        Vector rhs;
        for (const auto index : subset) {
            lhs.push_back(set.rows[index]);
            rhs.push_back(set.rhs[index]);
        }
        auto x = linalg::solve_square(std::move(lhs), std::move(rhs));
        if (x && satisfies(set, *x, false))
            vertices.insert(std::move(*x));
    });
    result.vertices.assign(vertices.begin(), vertices.end());

    if (result.vertices.empty() || has_improving_ray(problem, set))
        return result;

    Rational best = dot(problem.c, result.vertices.front());
    for (const auto& vertex : result.vertices)
        best = std::max(best, dot(problem.c, vertex));
    for (const auto& vertex : result.vertices)
        if (dot(problem.c, vertex) == best)
            result.optimal_vertices.push_back(vertex);
    result.optimum = best;
    return result;
}

OracleComparison compare_with_oracle(const SolveReport& report, const OracleResult& oracle)
{
    OracleComparison comparison;
    comparison.oracle_optimum = oracle.optimum;
    comparison.optimum_agrees = oracle.optimum && *oracle.optimum == report.lambda_bar;
    comparison.oracle_vertex_count = oracle.vertices.size();
    comparison.oracle_optimal_count = oracle.optimal_vertices.size();
    comparison.report_optimal_count = report.optimal_vertices.size();

    const std::set<Vector> oracle_optimal(oracle.optimal_vertices.begin(), oracle.optimal_vertices.end());
    std::set<Vector> optimal;
    std::set<Vector> extreme_optimal;
    for (const auto& vertex : report.optimal_vertices) {
        optimal.insert(vertex.x);
        if (vertex.extreme)
            extreme_optimal.insert(vertex.x);
    }
    comparison.optimal_sets_equal = !oracle.unbounded() && optimal == oracle_optimal;
    comparison.extreme_optimal_sets_equal = !oracle.unbounded() && extreme_optimal == oracle_optimal;

    if (report.all_vertices) {
        std::set<Vector> points;
        std::size_t non_extreme = 0;
        for (const auto& vertex : *report.all_vertices) {
            points.insert(vertex.x);
            if (!vertex.extreme)
                ++non_extreme;
        }
        comparison.report_point_count = points.size();
        comparison.report_non_extreme_count = non_extreme;
        comparison.oracle_vertices_covered = std::all_of(oracle.vertices.begin(), oracle.vertices.end(),
                                                         [&](const Vector& v) { return points.count(v) > 0; });
    }
    return comparison;
}

}  // namespace omega
