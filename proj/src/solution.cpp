#include "omega/solution.hpp"

#include <map>
#include <string>

#include "omega/errors.hpp"
#include "omega/linalg.hpp"

namespace omega {

namespace {

const Rational& d1_of(const LevelElement& element) { return element.carried[0]; }
const Rational& d2_of(const LevelElement& element) { return element.carried[1]; }

void require_final(const LevelState& state, const char* where)
{
    if (!state.is_final())
        throw std::logic_error(std::string(where) + ": state is not at the final level");
}

bool feasible(const LPProblem& problem, std::span<const Rational> x)
{
    for (const auto& value : x)
        if (value < 0)
            return false;
    for (std::size_t l = 0; l < problem.m; ++l)
        if (dot(problem.A[l], x) > problem.b[l])
            return false;
    return true;
}

}  // namespace

std::vector<RatioRow> ratio_table(const LevelState& final_state)
{
    require_final(final_state, "ratio_table");
    std::vector<RatioRow> rows;
    rows.reserve(final_state.elements.size());
    for (const auto& element : final_state.elements) {
        RatioRow row{element.label, d1_of(element), d2_of(element), std::nullopt};
        if (row.d2 > 0)
            row.ratio = row.d1 / row.d2;
        rows.push_back(std::move(row));
    }
    return rows;
}

Rational maximin(const LevelState& final_state)
{
    require_final(final_state, "maximin");
    std::optional<Rational> best;
    for (const auto& element : final_state.elements) {
        if (d2_of(element) <= 0)
            continue;
        Rational ratio = d1_of(element) / d2_of(element);
        if (!best || ratio > *best)
            best = std::move(ratio);
    }
    if (!best)
        throw Error(ErrorKind::NoPositiveD2,
                    "no final-level element has d2 > 0: the construction produced no normalizable vertex");
    return *best;
}

Vector vertex_coordinates(const LevelElement& element)
{
    const Rational& d2 = element.carried.back();
    if (d2 == 0)
        throw Error(ErrorKind::DivisionByZeroD2, "d2 = 0 at " + element.label.render());
    if (d2 < 0)
        throw Error(ErrorKind::NegativeD2, "d2 < 0 at " + element.label.render());
    Vector x(element.kernel_row.begin(), element.kernel_row.end() - 1);
    for (auto& value : x)
        value /= d2;
    return x;
}

bool is_extreme_point(const LPProblem& problem, std::span<const Rational> x)
{
    Matrix tight;
    for (std::size_t j = 0; j < problem.n; ++j) {
        if (x[j] == 0) {
            Vector unit(problem.n, Rational(0));
            unit[j] = 1;
            tight.push_back(std::move(unit));
        }
    }
    for (std::size_t l = 0; l < problem.m; ++l)
        if (dot(problem.A[l], x) == problem.b[l])
            tight.push_back(problem.A[l]);
    return tight.size() >= problem.n && linalg::rank(std::move(tight)) == problem.n;
}

SolveReport collect_vertices(const LPProblem& problem, const LevelState& final_state, const Rational& lambda_bar,
                             bool want_all)
{
    require_final(final_state, "collect_vertices");
    std::vector<Vertex> points;
    std::map<Vector, std::size_t> seen;

    for (const auto& element : final_state.elements) {
        if (d2_of(element) <= 0)
            continue;
        const Rational ratio = d1_of(element) / d2_of(element);
        if (ratio > lambda_bar)
            throw Error(ErrorKind::InvariantBreach,
                        element.label.render() + " has d1/d2 = " + to_string(ratio) + " above the maximin value");
        const bool optimal = ratio == lambda_bar;
        if (!optimal && !want_all)
            continue;

        Vector x = vertex_coordinates(element);
        if (const auto found = seen.find(x); found != seen.end()) {
            points[found->second].labels.push_back(element.label);
            continue;
        }
        if (!feasible(problem, x))
            throw Error(ErrorKind::InfeasibleVertexBug,
                        "point of " + element.label.render() + " violates x >= 0 or A x <= b");
        Rational objective = dot(problem.c, x);
        if (objective != ratio)
            throw Error(ErrorKind::InvariantBreach, "c·x = " + to_string(objective) + " but d1/d2 = " +
                                                        to_string(ratio) + " at " + element.label.render());

        const bool extreme = is_extreme_point(problem, x);
        seen.emplace(x, points.size());
        points.push_back(Vertex{{element.label}, std::move(x), std::move(objective), d1_of(element), d2_of(element),
                                optimal, extreme});
    }

    SolveReport report;
    report.lambda_bar = lambda_bar;
    for (const auto& point : points)
        if (point.optimal)
            report.optimal_vertices.push_back(point);
    if (want_all)
        report.all_vertices = std::move(points);
    return report;
}

SolveReport solve(const LPProblem& raw, const SolveOptions& options)
{
    const LPProblem problem = canonicalize_problem(raw);
    const ReducedData reduced = build_reduced_data(problem);
    EliminationResult elimination =
        run_elimination(reduced, EliminationOptions{options.max_elements, options.trace});

    const Rational lambda_bar = maximin(elimination.final_state);
    SolveReport report = collect_vertices(problem, elimination.final_state, lambda_bar, options.want_all);
    report.ratio_table = ratio_table(elimination.final_state);
    report.levels = std::move(elimination.levels);
    report.constraint_order = problem.constraint_order;
    if (options.trace)
        report.trace = std::move(elimination.trace);
    return report;
}

}  // namespace omega
