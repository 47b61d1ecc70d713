#include "omega/io.hpp"

#include <cctype>
#include <string>
#include <vector>

#include "omega/errors.hpp"

namespace omega::io {

using nlohmann::json;

namespace {

struct Token {
    std::string text;
    std::size_t line;
    std::size_t column;
};

/// Whitespace tokens grouped by line; '#' starts a comment. Blank lines are dropped.
std::vector<std::vector<Token>> tokenize_lines(std::string_view content)
{
    std::vector<std::vector<Token>> lines;
    std::vector<Token> current;
    std::size_t line = 1;
    std::size_t column = 1;
    std::size_t i = 0;
    while (i < content.size()) {
        const char ch = content[i];
        if (ch == '\n') {
            if (!current.empty())
                lines.push_back(std::move(current));
            current.clear();
            ++line;
            column = 1;
            ++i;
        } else if (ch == '#') {
            while (i < content.size() && content[i] != '\n')
                ++i;
        } else if (std::isspace(static_cast<unsigned char>(ch))) {
            ++column;
            ++i;
        } else {
            Token token{{}, line, column};
            while (i < content.size() && !std::isspace(static_cast<unsigned char>(content[i])) && content[i] != '#') {
                token.text.push_back(content[i]);
                ++i;
                ++column;
            }
            current.push_back(std::move(token));
        }
    }
    if (!current.empty())
        lines.push_back(std::move(current));
    return lines;
}

[[noreturn]] void fail_at(const Token& token, const std::string& what)
{
    throw Error(ErrorKind::ParseError, what, token.line, token.column);
}

Rational token_rational(const Token& token)
{
    try {
        return parse_rational(token.text);
    } catch (const Error&) {
        fail_at(token, "not an exact number: \"" + token.text + "\"");
    }
}

std::size_t token_count(const Token& token)
{
    const Rational value = token_rational(token);
    if (boost::multiprecision::denominator(value) != 1 || value < 0)
        fail_at(token, "expected a non-negative integer, got \"" + token.text + "\"");
    return static_cast<std::size_t>(boost::multiprecision::numerator(value));
}

Vector line_rationals(const std::vector<Token>& line)
{
    Vector values;
    values.reserve(line.size());
    for (const auto& token : line)
        values.push_back(token_rational(token));
    return values;
}

/// Translates a byte offset into 1-based line and column.
std::pair<std::size_t, std::size_t> position_of(std::string_view content, std::size_t offset)
{
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i < offset && i < content.size(); ++i) {
        if (content[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

json parse_json(std::string_view content)
{
    try {
        return json::parse(content.begin(), content.end());
    } catch (const json::parse_error& error) {
        const auto [line, column] = position_of(content, error.byte == 0 ? 0 : error.byte - 1);
        throw Error(ErrorKind::ParseError, std::string("malformed JSON: ") + error.what(), line, column);
    }
}

[[noreturn]] void fail_field(const std::string& path, const std::string& what)
{
    throw Error(ErrorKind::ParseError, path + ": " + what);
}

Rational field_rational(const json& value, const std::string& path)
{
    try {
        return rational_from_json(value);
    } catch (const Error& error) {
        fail_field(path, error.what());
    }
}

Vector field_vector(const json& value, const std::string& path)
{
    if (!value.is_array())
        fail_field(path, "expected an array");
    Vector result;
    for (std::size_t i = 0; i < value.size(); ++i)
        result.push_back(field_rational(value[i], path + "[" + std::to_string(i) + "]"));
    return result;
}

Matrix field_matrix(const json& value, const std::string& path)
{
    if (!value.is_array())
        fail_field(path, "expected an array of rows");
    Matrix result;
    for (std::size_t i = 0; i < value.size(); ++i)
        result.push_back(field_vector(value[i], path + "[" + std::to_string(i) + "]"));
    return result;
}

const json& require(const json& object, const char* key)
{
    if (!object.is_object())
        fail_field("$", "expected a JSON object");
    const auto found = object.find(key);
    if (found == object.end())
        fail_field(key, "missing field");
    return *found;
}

std::size_t field_count(const json& value, const std::string& path)
{
    if (!value.is_number_unsigned() && !(value.is_number_integer() && value.get<long long>() >= 0))
        fail_field(path, "expected a non-negative integer");
    return value.get<std::size_t>();
}

bool looks_like_json(std::string_view content, InputFormat format)
{
    if (format != InputFormat::Auto)
        return format == InputFormat::Json;
    for (const char ch : content) {
        if (std::isspace(static_cast<unsigned char>(ch)))
            continue;
        return ch == '{';
    }
    return false;
}

LPProblem checked_problem(std::size_t n, std::size_t m, Vector c, Matrix A, Vector b)
{
    LPProblem problem = make_problem(std::move(c), std::move(A), std::move(b));
    if (problem.n != n || problem.m != m)
        throw Error(ErrorKind::InvalidProblem, "declared n = " + std::to_string(n) + ", m = " + std::to_string(m) +
                                                   " but the data has n = " + std::to_string(problem.n) +
                                                   ", m = " + std::to_string(problem.m));
    return problem;
}

LPProblem problem_from_json(std::string_view content)
{
    const json root = parse_json(content);
    const std::size_t n = field_count(require(root, "n"), "n");
    const std::size_t m = field_count(require(root, "m"), "m");
    return checked_problem(n, m, field_vector(require(root, "c"), "c"), field_matrix(require(root, "A"), "A"),
                           field_vector(require(root, "b"), "b"));
}

LPProblem problem_from_text(std::string_view content)
{
    const auto lines = tokenize_lines(content);
    if (lines.empty())
        throw Error(ErrorKind::ParseError, "empty problem file", 1, 1);
    const auto& header = lines.front();
    if (header.size() != 2)
        fail_at(header.front(), "first line must be \"n m\"");
    const std::size_t n = token_count(header[0]);
    const std::size_t m = token_count(header[1]);
    if (lines.size() != m + 3) {
        const Token& where = lines.back().back();
        fail_at(where, "expected " + std::to_string(m + 3) + " non-empty lines (header, " + std::to_string(m) +
                           " rows of A, b, c), found " + std::to_string(lines.size()));
    }

    auto row_of = [&](std::size_t index, std::size_t width, const char* what) {
        const auto& line = lines[index];
        if (line.size() != width)
            fail_at(line.front(), std::string(what) + " needs " + std::to_string(width) + " entries, found " +
                                      std::to_string(line.size()));
        return line_rationals(line);
    };

    Matrix A;
    for (std::size_t l = 0; l < m; ++l)
        A.push_back(row_of(1 + l, n, "constraint row"));
    Vector b = row_of(1 + m, m, "right-hand side");
    Vector c = row_of(2 + m, n, "objective");
    return checked_problem(n, m, std::move(c), std::move(A), std::move(b));
}

json labels_to_json(const std::vector<Label>& labels)
{
    json array = json::array();
    for (const auto& label : labels)
        array.push_back(label.render());
    return array;
}

std::vector<Label> labels_from_json(const json& array)
{
    std::vector<Label> labels;
    for (const auto& item : array)
        labels.push_back(Label::parse(item.get<std::string>()));
    return labels;
}

json vector_to_json(const Vector& values)
{
    json array = json::array();
    for (const auto& value : values)
        array.push_back(to_json(value));
    return array;
}

Vector vector_from_json(const json& array)
{
    Vector values;
    for (const auto& item : array)
        values.push_back(rational_from_json(item));
    return values;
}

json vertex_to_json(const Vertex& vertex)
{
    return json{{"label", vertex.labels.front().render()},
                {"labels", labels_to_json(vertex.labels)},
                {"x", vector_to_json(vertex.x)},
                {"objective", to_json(vertex.objective)},
                {"d1", to_json(vertex.d1)},
                {"d2", to_json(vertex.d2)},
                {"optimal", vertex.optimal},
                {"extreme", vertex.extreme}};
}

Vertex vertex_from_json(const json& object)
{
    return Vertex{labels_from_json(object.at("labels")),
                  vector_from_json(object.at("x")),
                  rational_from_json(object.at("objective")),
                  rational_from_json(object.at("d1")),
                  rational_from_json(object.at("d2")),
                  object.at("optimal").get<bool>(),
                  object.at("extreme").get<bool>()};
}

json vertices_to_json(const std::vector<Vertex>& vertices)
{
    json array = json::array();
    for (const auto& vertex : vertices)
        array.push_back(vertex_to_json(vertex));
    return array;
}

std::vector<Vertex> vertices_from_json(const json& array)
{
    std::vector<Vertex> vertices;
    for (const auto& item : array)
        vertices.push_back(vertex_from_json(item));
    return vertices;
}

}  // namespace

LPProblem parse_problem(std::string_view content, InputFormat format)
{
    return looks_like_json(content, format) ? problem_from_json(content) : problem_from_text(content);
}

MatrixGame parse_game(std::string_view content, InputFormat format)
{
    MatrixGame game;
    if (looks_like_json(content, format)) {
        const json root = parse_json(content);
        game.payoff = field_matrix(require(root, "payoff"), "payoff");
        if (const auto shift = root.find("shift"); shift != root.end())
            game.shift = field_rational(*shift, "shift");
    } else {
        const auto lines = tokenize_lines(content);
        if (lines.empty())
            throw Error(ErrorKind::ParseError, "empty payoff file", 1, 1);
        for (const auto& line : lines) {
            if (line.size() != lines.front().size())
                fail_at(line.front(), "payoff row has " + std::to_string(line.size()) + " entries, expected " +
                                          std::to_string(lines.front().size()));
            game.payoff.push_back(line_rationals(line));
        }
    }
    if (game.payoff.empty() || game.payoff.front().empty())
        throw Error(ErrorKind::InvalidProblem, "payoff matrix must be at least 1×1");
    for (const auto& row : game.payoff)
        if (row.size() != game.payoff.front().size())
            throw Error(ErrorKind::InvalidProblem, "payoff rows have different lengths");
    return game;
}

StrategyInput parse_strategy(std::string_view content, InputFormat format)
{
    StrategyInput input;
    if (looks_like_json(content, format)) {
        const json root = parse_json(content);
        input.y = field_vector(require(root, "y"), "y");
        if (const auto value = root.find("value"); value != root.end() && !value->is_null())
            input.value = field_rational(*value, "value");
        return input;
    }
    const auto lines = tokenize_lines(content);
    if (lines.empty() || lines.size() > 2)
        throw Error(ErrorKind::ParseError, "strategy file needs the strategy on one line and optionally the value on a second", 1, 1);
    input.y = line_rationals(lines[0]);
    if (lines.size() == 2) {
        if (lines[1].size() != 1)
            fail_at(lines[1].front(), "value line must hold a single number");
        input.value = token_rational(lines[1].front());
    }
    return input;
}

json to_json(const Rational& value)
{
    return to_string(value);
}

Rational rational_from_json(const json& value)
{
    if (value.is_number_integer())
        return Rational(value.dump());
    if (value.is_string())
        return parse_rational(value.get<std::string>());
    if (value.is_number_float())
        throw Error(ErrorKind::ParseError,
                    "non-integer JSON number " + value.dump() + "; write decimals as strings such as \"0.25\"");
    throw Error(ErrorKind::ParseError, "expected a number or a \"p/q\" string, got " + value.dump());
}

json report_to_json(const SolveReport& report)
{
    json root;
    root["lambda_bar"] = to_json(report.lambda_bar);
    root["optimal_vertices"] = vertices_to_json(report.optimal_vertices);
    if (report.all_vertices)
        root["all_vertices"] = vertices_to_json(*report.all_vertices);

    json table = json::array();
    for (const auto& row : report.ratio_table)
        table.push_back(json{{"label", row.label.render()},
                             {"d1", to_json(row.d1)},
                             {"d2", to_json(row.d2)},
                             {"ratio", row.ratio ? to_json(*row.ratio) : json(nullptr)}});
    root["ratio_table"] = std::move(table);

    json levels = json::array();
    for (const auto& level : report.levels)
        levels.push_back(json{{"level", level.level},
                              {"elements", level.element_count},
                              {"zero", level.zero_count},
                              {"neg", level.neg_count},
                              {"pos", level.pos_count},
                              {"rho", labels_to_json(level.rho)}});
    root["levels"] = std::move(levels);

    json order = json::array();
    for (const auto index : report.constraint_order)
        order.push_back(index + 1);
    root["constraint_order"] = std::move(order);

    if (report.trace) {
        json trace = json::array();
        for (const auto& level : *report.trace) {
            json rows = json::array();
            for (std::size_t k = 0; k < level.rows.size(); ++k)
                rows.push_back(json{{"name", level.row_names[k]}, {"values", vector_to_json(level.rows[k])}});
            trace.push_back(json{{"level", level.level}, {"labels", labels_to_json(level.labels)}, {"rows", rows}});
        }
        root["trace"] = std::move(trace);
    }
    return root;
}

SolveReport report_from_json(const json& root)
{
    SolveReport report;
    report.lambda_bar = rational_from_json(root.at("lambda_bar"));
    report.optimal_vertices = vertices_from_json(root.at("optimal_vertices"));
    if (root.contains("all_vertices"))
        report.all_vertices = vertices_from_json(root.at("all_vertices"));
    for (const auto& row : root.at("ratio_table")) {
        RatioRow parsed{Label::parse(row.at("label").get<std::string>()), rational_from_json(row.at("d1")),
                        rational_from_json(row.at("d2")), std::nullopt};
        if (!row.at("ratio").is_null())
            parsed.ratio = rational_from_json(row.at("ratio"));
        report.ratio_table.push_back(std::move(parsed));
    }
    for (const auto& level : root.at("levels"))
        report.levels.push_back(LevelSummary{level.at("level").get<std::size_t>(),
                                             level.at("elements").get<std::size_t>(),
                                             level.at("zero").get<std::size_t>(),
                                             level.at("neg").get<std::size_t>(),
                                             level.at("pos").get<std::size_t>(),
                                             labels_from_json(level.at("rho"))});
    for (const auto& index : root.at("constraint_order"))
        report.constraint_order.push_back(index.get<std::size_t>() - 1);
    if (root.contains("trace")) {
        std::vector<TraceLevel> trace;
        for (const auto& level : root.at("trace")) {
            TraceLevel parsed;
            parsed.level = level.at("level").get<std::size_t>();
            parsed.labels = labels_from_json(level.at("labels"));
            for (const auto& row : level.at("rows")) {
                parsed.row_names.push_back(row.at("name").get<std::string>());
                parsed.rows.push_back(vector_from_json(row.at("values")));
            }
            trace.push_back(std::move(parsed));
        }
        report.trace = std::move(trace);
    }
    return report;
}

json game_to_json(const GameSolution& solution)
{
    json strategies = json::array();
    for (const auto& strategy : solution.strategies)
        strategies.push_back(json{{"labels", labels_to_json(strategy.labels)}, {"y", vector_to_json(strategy.y)}});
    return json{{"lp_value", to_json(solution.lp_value)},
                {"game_value", to_json(solution.game_value)},
                {"shift", to_json(solution.shift)},
                {"strategies", std::move(strategies)},
                {"report", report_to_json(solution.report)}};
}

json comparison_to_json(const OracleComparison& comparison)
{
    json root{{"oracle_optimum", comparison.oracle_optimum ? to_json(*comparison.oracle_optimum) : json("unbounded")},
              {"optimum_agrees", comparison.optimum_agrees},
              {"optimal_sets_equal", comparison.optimal_sets_equal},
              {"extreme_optimal_sets_equal", comparison.extreme_optimal_sets_equal},
              {"oracle_vertices", comparison.oracle_vertex_count},
              {"oracle_optimal_vertices", comparison.oracle_optimal_count},
              {"report_optimal_points", comparison.report_optimal_count}};
    if (comparison.report_point_count)
        root["report_points"] = *comparison.report_point_count;
    if (comparison.report_non_extreme_count)
        root["report_non_extreme_points"] = *comparison.report_non_extreme_count;
    if (comparison.oracle_vertices_covered)
        root["oracle_vertices_covered"] = *comparison.oracle_vertices_covered;
    return root;
}

json strategy_check_to_json(const StrategyCheck& check, const Rational& value)
{
    return json{{"optimal", check.optimal}, {"value", to_json(value)}, {"row_values", vector_to_json(check.row_values)}};
}

}  // namespace omega::io
