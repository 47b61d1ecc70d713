#include "omega/game.hpp"

#include <algorithm>
#include <string>

#include "omega/errors.hpp"

namespace omega {

namespace {

Matrix shifted_payoff(const MatrixGame& game)
{
    Matrix shifted = game.payoff;
    for (auto& row : shifted)
        for (auto& entry : row)
            entry += game.shift;
    return shifted;
}

void validate_game(const MatrixGame& game)
{
    if (game.payoff.empty() || game.payoff.front().empty())
        throw Error(ErrorKind::InvalidProblem, "payoff matrix must be at least 1×1");
    const std::size_t columns = game.payoff.front().size();
    for (const auto& row : game.payoff)
        if (row.size() != columns)
            throw Error(ErrorKind::InvalidProblem, "payoff rows have different lengths");
}

}  // namespace

LPProblem game_to_lp(const MatrixGame& game)
{
    validate_game(game);
    const std::size_t rows = game.payoff.size();
    const std::size_t columns = game.payoff.front().size();
    return make_problem(Vector(columns, Rational(1)), shifted_payoff(game), Vector(rows, Rational(1)));
}

GameSolution solve_game(const MatrixGame& game, const SolveOptions& options)
{
    const LPProblem lp = game_to_lp(game);
    GameSolution solution;
    solution.report = solve(lp, options);
    solution.lp_value = solution.report.lambda_bar;
    solution.shift = game.shift;

    if (solution.lp_value <= 0) {
        Rational smallest = game.payoff.front().front();
        for (const auto& row : game.payoff)
            for (const auto& entry : row)
                smallest = std::min(smallest, entry);
        throw Error(ErrorKind::ValueNotPositive,
                    "LP value " + to_string(solution.lp_value) +
                        " is not positive, so the game reduction is invalid; try --shift " +
                        to_string(1 - smallest));
    }
    solution.game_value = 1 / solution.lp_value - game.shift;

    for (const auto& vertex : solution.report.optimal_vertices) {
        Rational total = 0;
        for (const auto& value : vertex.x)
            total += value;
        Vector y = vertex.x;
        for (auto& value : y)
            value /= total;
        const bool duplicate = std::any_of(solution.strategies.begin(), solution.strategies.end(),
                                           [&](const Strategy& known) { return known.y == y; });
        if (!duplicate)
            solution.strategies.push_back(Strategy{vertex.labels, std::move(y)});
    }
    return solution;
}

StrategyCheck verify_strategy(const MatrixGame& game, std::span<const Rational> y, const Rational& v)
{
    validate_game(game);
    const std::size_t columns = game.payoff.front().size();
    if (y.size() != columns)
        throw Error(ErrorKind::NotAProbabilityVector, "strategy has " + std::to_string(y.size()) +
                                                          " entries, the game has " + std::to_string(columns) +
                                                          " columns");
    Rational total = 0;
    for (const auto& value : y) {
        if (value < 0)
            throw Error(ErrorKind::NotAProbabilityVector, "strategy has a negative entry " + to_string(value));
        total += value;
    }
    if (total != 1)
        throw Error(ErrorKind::NotAProbabilityVector, "strategy sums to " + to_string(total) + ", not 1");

    StrategyCheck check;
    check.row_values = matrix_vector(shifted_payoff(game), y);
    const Rational worst = *std::max_element(check.row_values.begin(), check.row_values.end());
    check.optimal = worst == v;
    return check;
}

}  // namespace omega
