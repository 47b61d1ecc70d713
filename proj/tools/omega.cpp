// Command-line front end: solve LPs, list vertices, solve matrix games and
// verify strategies with exact rational output.

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "omega/errors.hpp"
#include "omega/game.hpp"
#include "omega/io.hpp"
#include "omega/oracle.hpp"
#include "omega/solution.hpp"
#include "omega/tables.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUser = 1;
constexpr int kExitInternal = 2;
constexpr int kExitResource = 3;

struct Config {
    std::string input;
    std::string output;
    std::string format = "text";
    std::string input_format = "auto";
    std::string strategy;
    std::string shift;
    std::size_t max_elements = 0;
    bool all_vertices = false;
    bool oracle_check = false;
    bool trace_levels = false;
    bool decimal = false;
    bool meta = false;
};

int exit_code_for(omega::ErrorKind kind)
{
    switch (kind) {
    case omega::ErrorKind::InfeasibleVertexBug:
    case omega::ErrorKind::InvariantBreach:
        return kExitInternal;
    case omega::ErrorKind::SizeLimitExceeded:
    case omega::ErrorKind::TooLarge:
        return kExitResource;
    default:
        return kExitUser;
    }
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw omega::Error(omega::ErrorKind::ParseError, "cannot open \"" + path + "\"");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

omega::io::InputFormat input_format(const Config& config)
{
    if (config.input_format == "json")
        return omega::io::InputFormat::Json;
    if (config.input_format == "text")
        return omega::io::InputFormat::Text;
    return omega::io::InputFormat::Auto;
}

std::size_t element_cap(const Config& config)
{
    if (config.max_elements > 0)
        return config.max_elements;
    if (const char* env = std::getenv("OMEGA_MAX_ELEMENTS"); env && *env) {
        try {
            return static_cast<std::size_t>(std::stoull(env));
        } catch (const std::exception&) {
            throw omega::Error(omega::ErrorKind::ParseError,
                               "OMEGA_MAX_ELEMENTS must be a positive integer, got \"" + std::string(env) + "\"");
        }
    }
    return omega::kDefaultMaxElements;
}

omega::SolveOptions solve_options(const Config& config, bool want_all)
{
    return omega::SolveOptions{want_all, config.trace_levels, element_cap(config)};
}

std::string timestamp()
{
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm utc{};
    gmtime_r(&now, &utc);
    std::ostringstream out;
    out << std::put_time(&utc, "%Y-%m-%dT%H:%M:%SZ");
    return out.str();
}

void emit(const Config& config, const std::string& text)
{
    if (config.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(config.output, std::ios::binary);
    if (!out)
        throw omega::Error(omega::ErrorKind::ParseError, "cannot write \"" + config.output + "\"");
    out << text;
}

void emit_json(const Config& config, json root)
{
    if (config.meta)
        root["meta"] = json{{"tool", "omega"}, {"generated_at", timestamp()}, {"input", config.input}};
    emit(config, root.dump(2) + "\n");
}

std::string meta_header(const Config& config)
{
    return config.meta ? "# omega " + config.input + " " + timestamp() + "\n" : std::string();
}

int run_solve(const Config& config, bool vertices_command)
{
    const auto problem = omega::io::parse_problem(read_file(config.input), input_format(config));
    const bool want_all = vertices_command || config.all_vertices;
    const auto report = omega::solve(problem, solve_options(config, want_all));

    std::optional<omega::OracleComparison> comparison;
    if (config.oracle_check)
        comparison = omega::compare_with_oracle(report, omega::enumerate_vertices(problem));

    if (config.format == "json") {
        json root = omega::io::report_to_json(report);
        if (comparison)
            root["oracle"] = omega::io::comparison_to_json(*comparison);
        emit_json(config, std::move(root));
    } else {
        const omega::tables::TextOptions options{config.decimal};
        std::string text = meta_header(config) + omega::tables::format_report(report, options);
        if (comparison)
            text += "\n" + omega::tables::format_comparison(*comparison);
        emit(config, text);
    }
    return kExitOk;
}

omega::MatrixGame load_game(const Config& config)
{
    auto game = omega::io::parse_game(read_file(config.input), input_format(config));
    if (!config.shift.empty())
        game.shift = omega::parse_rational(config.shift);
    return game;
}

int run_game(const Config& config)
{
    const auto game = load_game(config);
    const auto solution = omega::solve_game(game, solve_options(config, config.all_vertices));

    std::optional<omega::OracleComparison> comparison;
    if (config.oracle_check)
        comparison = omega::compare_with_oracle(solution.report, omega::enumerate_vertices(omega::game_to_lp(game)));

    if (config.format == "json") {
        json root = omega::io::game_to_json(solution);
        if (comparison)
            root["oracle"] = omega::io::comparison_to_json(*comparison);
        emit_json(config, std::move(root));
    } else {
        const omega::tables::TextOptions options{config.decimal};
        std::ostringstream out;
        out << meta_header(config);
        out << "lp_value = " << omega::to_string(solution.lp_value) << '\n';
        out << "game_value = " << omega::to_string(solution.game_value) << '\n';
        if (solution.shift != 0)
            out << "shift = " << omega::to_string(solution.shift) << '\n';
        out << "\nOptimal strategies of the column player (" << solution.strategies.size() << ")\n";
        out << omega::tables::format_strategy_table(solution.strategies, options);
        out << '\n' << omega::tables::format_report(solution.report, options);
        if (comparison)
            out << '\n' << omega::tables::format_comparison(*comparison);
        emit(config, out.str());
    }
    return kExitOk;
}

int run_verify(const Config& config)
{
    const auto game = load_game(config);
    const auto strategy = omega::io::parse_strategy(read_file(config.strategy), input_format(config));
    omega::Rational value;
    if (strategy.value) {
        value = *strategy.value;
    } else {
        const auto solution = omega::solve_game(game, solve_options(config, false));
        value = solution.game_value + solution.shift;
    }
    const auto check = omega::verify_strategy(game, strategy.y, value);

    if (config.format == "json") {
        emit_json(config, omega::io::strategy_check_to_json(check, value));
    } else {
        std::ostringstream out;
        out << meta_header(config);
        out << "value = " << omega::to_string(value) << '\n';
        out << "row values:";
        for (const auto& row : check.row_values)
            out << ' ' << omega::to_string(row);
        out << '\n' << "optimal: " << (check.optimal ? "yes" : "no") << '\n';
        emit(config, out.str());
    }
    return check.optimal ? kExitOk : kExitUser;
}

void add_common(CLI::App* command, Config& config)
{
    command->add_option("input", config.input, "Input file")->required()->check(CLI::ExistingFile);
    command->add_option("--format", config.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    command->add_option("--input-format", config.input_format, "Input format")
        ->check(CLI::IsMember({"auto", "json", "text"}));
    command->add_option("--output,-o", config.output, "Write the report to this file");
    command->add_flag("--decimal", config.decimal, "Append decimal approximations in text output");
    command->add_flag("--meta", config.meta, "Add a timestamp to the report");
    command->add_option("--max-elements", config.max_elements,
                        "Cap on elements per level (default 1000000, env OMEGA_MAX_ELEMENTS)")
        ->check(CLI::PositiveNumber);
}

void add_solver_flags(CLI::App* command, Config& config)
{
    command->add_flag("--oracle-check", config.oracle_check, "Cross-check against brute-force vertex enumeration");
    command->add_flag("--trace-levels", config.trace_levels, "Append per-level tables");
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact LP solver returning every optimal vertex, with a zero-sum game adapter"};
    app.require_subcommand(1);
    Config config;

    auto* solve = app.add_subcommand("solve", "Maximum and all optimal points of max c.x, x >= 0, Ax <= b");
    add_common(solve, config);
    add_solver_flags(solve, config);
    solve->add_flag("--all-vertices", config.all_vertices, "Also list every point of the final level");

    auto* vertices = app.add_subcommand("vertices", "Every point of the final level, deduplicated");
    add_common(vertices, config);
    add_solver_flags(vertices, config);

    auto* game = app.add_subcommand("game", "Optimal mixed strategies of the column player");
    add_common(game, config);
    add_solver_flags(game, config);
    game->add_flag("--all-vertices", config.all_vertices, "Also list every point of the final level");
    game->add_option("--shift", config.shift, "Rational added to every payoff entry");

    auto* verify = app.add_subcommand("verify", "Check a column strategy against the game value");
    add_common(verify, config);
    verify->add_option("--strategy", config.strategy, "Strategy file")->required()->check(CLI::ExistingFile);
    verify->add_option("--shift", config.shift, "Rational added to every payoff entry");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& error) {
        const int code = app.exit(error);
        return code == 0 ? kExitOk : kExitUser;
    }

    try {
        if (solve->parsed())
            return run_solve(config, false);
        if (vertices->parsed())
            return run_solve(config, true);
        if (game->parsed())
            return run_game(config);
        return run_verify(config);
    } catch (const omega::Error& error) {
        std::cerr << "error: " << omega::to_string(error.kind()) << ": " << error.what() << '\n';
        return exit_code_for(error.kind());
    } catch (const std::exception& error) {
        std::cerr << "error: " << error.what() << '\n';
        return kExitInternal;
    }
}
