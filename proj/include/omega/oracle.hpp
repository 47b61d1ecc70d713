#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "omega/problem.hpp"
#include "omega/rational.hpp"
#include "omega/solution.hpp"

namespace omega {

inline constexpr std::size_t kOracleMaxSize = 24;

/// Brute-force vertex enumeration over every n-subset of the n+m constraints.
struct OracleResult {
    std::vector<Vector> vertices;          ///< lexicographic order
    std::optional<Rational> optimum;       ///< empty when unbounded
    std::vector<Vector> optimal_vertices;  ///< lexicographic order; empty when unbounded
    std::size_t subsets_examined = 0;

    bool unbounded() const { return !optimum.has_value(); }
};

/// Throws TooLarge when n + m exceeds kOracleMaxSize.
OracleResult enumerate_vertices(const LPProblem& problem);

/// How a pipeline report lines up with the brute-force result.
struct OracleComparison {
    std::optional<Rational> oracle_optimum;
    bool optimum_agrees = false;
    /// Distinct optimal points of the report equal the oracle's optimal vertices.
    bool optimal_sets_equal = false;
    /// Same, restricted to report points flagged extreme.
    bool extreme_optimal_sets_equal = false;
    /// Every oracle vertex appears among the report's points (needs all_vertices).
    std::optional<bool> oracle_vertices_covered;
    std::size_t oracle_vertex_count = 0;
    std::size_t oracle_optimal_count = 0;
    std::size_t report_optimal_count = 0;
    std::optional<std::size_t> report_point_count;
    std::optional<std::size_t> report_non_extreme_count;
};

OracleComparison compare_with_oracle(const SolveReport& report, const OracleResult& oracle);

}  // namespace omega
