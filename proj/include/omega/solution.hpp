#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "omega/elimination.hpp"
#include "omega/problem.hpp"
#include "omega/rational.hpp"

namespace omega {

struct RatioRow {
    Label label;
    Rational d1;
    Rational d2;
    std::optional<Rational> ratio;  ///< d1/d2 when d2 > 0

    friend bool operator==(const RatioRow&, const RatioRow&) = default;
};

/// A point x/d2 produced by one or more final-level labels. d1 and d2 belong
/// to the first label. `extreme` is true when the point has n linearly
/// independent tight constraints, i.e. it is a genuine vertex of the polyhedron;
/// labels built from non-adjacent pairs give feasible non-vertex points.
struct Vertex {
    std::vector<Label> labels;
    Vector x;
    Rational objective;
    Rational d1;
    Rational d2;
    bool optimal = false;
    bool extreme = false;

    friend bool operator==(const Vertex&, const Vertex&) = default;
};

struct SolveReport {
    Rational lambda_bar;
    std::vector<Vertex> optimal_vertices;
    std::optional<std::vector<Vertex>> all_vertices;
    std::vector<RatioRow> ratio_table;
    std::vector<LevelSummary> levels;
    std::vector<std::size_t> constraint_order;
    std::optional<std::vector<TraceLevel>> trace;

    friend bool operator==(const SolveReport&, const SolveReport&) = default;
};

struct SolveOptions {
    bool want_all = false;
    bool trace = false;
    std::size_t max_elements = kDefaultMaxElements;
};

std::vector<RatioRow> ratio_table(const LevelState& final_state);

/// max d1/d2 over elements with d2 > 0. Throws NoPositiveD2 if there are none.
Rational maximin(const LevelState& final_state);

/// kernel_row[j] / d2 for j < n (the homogenization slot is dropped).
/// Throws DivisionByZeroD2 when d2 = 0 and NegativeD2 when d2 < 0.
Vector vertex_coordinates(const LevelElement& element);

/// Maps Ω_m⁺ to points, deduplicated by exact coordinates in first-seen order.
/// Every emitted point is checked against x >= 0, A x <= b and
/// c·x = d1/d2; a violation throws InfeasibleVertexBug / InvariantBreach.
/// Only the vertex lists and lambda_bar are filled in.
SolveReport collect_vertices(const LPProblem& problem, const LevelState& final_state,
                             const Rational& lambda_bar, bool want_all);

/// n linearly independent constraints among {x_j >= 0} ∪ {A_l x <= b_l} are tight at x.
bool is_extreme_point(const LPProblem& problem, std::span<const Rational> x);

/// canonicalize → reduce → eliminate → maximin → collect.
SolveReport solve(const LPProblem& raw, const SolveOptions& options = {});

}  // namespace omega
