#pragma once

#include <vector>

#include "omega/problem.hpp"
#include "omega/rational.hpp"
#include "omega/solution.hpp"

namespace omega {

/// Zero-sum game; rows are the first player's pure strategies. The LP is
/// built on payoff + shift.
struct MatrixGame {
    Matrix payoff;
    Rational shift = 0;
};

struct Strategy {
    std::vector<Label> labels;
    Vector y;

    friend bool operator==(const Strategy&, const Strategy&) = default;
};

struct GameSolution {
    Rational lp_value;    ///< λ̄ of the LP
    Rational game_value;  ///< 1/λ̄ - shift, on the payoff's own scale
    Rational shift;
    std::vector<Strategy> strategies;  ///< second player, one per optimal point
    SolveReport report;
};

struct StrategyCheck {
    bool optimal = false;
    Vector row_values;  ///< (payoff + shift)·y
};

/// n = columns, m = rows, c = 1, A = payoff + shift, b = 1.
LPProblem game_to_lp(const MatrixGame& game);

/// Throws ValueNotPositive if λ̄ <= 0 (the message suggests a shift).
GameSolution solve_game(const MatrixGame& game, const SolveOptions& options = {});

/// optimal iff max_i ((payoff + shift)·y)_i = v. Throws NotAProbabilityVector
/// unless y has one entry per column, y >= 0 and Σy = 1.
StrategyCheck verify_strategy(const MatrixGame& game, std::span<const Rational> y, const Rational& v);

}  // namespace omega
