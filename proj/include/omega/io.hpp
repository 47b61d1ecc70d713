#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "omega/game.hpp"
#include "omega/oracle.hpp"
#include "omega/problem.hpp"
#include "omega/solution.hpp"

namespace omega::io {

enum class InputFormat { Auto, Json, Text };

/// JSON: {"n":…, "m":…, "c":[…], "A":[[…]], "b":[…]} where numbers are
/// integers, decimal strings or "p/q" strings.
/// Text: "n m", then m rows of A, then b, then c.
LPProblem parse_problem(std::string_view content, InputFormat format = InputFormat::Auto);

/// JSON {"payoff": [[…]], "shift": "0"} or a whitespace matrix, one row per line.
MatrixGame parse_game(std::string_view content, InputFormat format = InputFormat::Auto);

struct StrategyInput {
    Vector y;
    std::optional<Rational> value;
};

/// JSON {"y": […], "value": "10/3"} (value optional) or text: y on the first
/// line, optional value on the second.
StrategyInput parse_strategy(std::string_view content, InputFormat format = InputFormat::Auto);

nlohmann::json to_json(const Rational& value);
Rational rational_from_json(const nlohmann::json& value);

nlohmann::json report_to_json(const SolveReport& report);
SolveReport report_from_json(const nlohmann::json& json);

nlohmann::json game_to_json(const GameSolution& solution);
nlohmann::json comparison_to_json(const OracleComparison& comparison);
nlohmann::json strategy_check_to_json(const StrategyCheck& check, const Rational& value);

}  // namespace omega::io
