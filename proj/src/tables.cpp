#include "omega/tables.hpp"

#include <algorithm>
#include <sstream>

namespace omega::tables {

namespace {

using Grid = std::vector<std::vector<std::string>>;

std::string render_grid(const Grid& grid)
{
    std::vector<std::size_t> widths;
    for (const auto& row : grid) {
        if (widths.size() < row.size())
            widths.resize(row.size(), 0);
        for (std::size_t i = 0; i < row.size(); ++i)
            widths[i] = std::max(widths[i], row[i].size());
    }
    std::ostringstream out;
    for (const auto& row : grid) {
        std::string line;
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i > 0)
                line += "  ";
            line += row[i];
            if (i + 1 < row.size())
                line.append(widths[i] - row[i].size(), ' ');
        }
        out << line << '\n';
    }
    return out.str();
}

std::string cell(const Rational& value, const TextOptions& options)
{
    std::string text = to_string(value);
    if (options.decimal && boost::multiprecision::denominator(value) != 1)
        text += " (~" + to_decimal(value) + ")";
    return text;
}

std::string vector_cell(const Vector& values, const TextOptions& options)
{
    std::string text = "(";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0)
            text += ", ";
        text += cell(values[i], options);
    }
    return text + ")";
}

std::string label_list(const std::vector<Label>& labels)
{
    std::string text;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (i > 0)
            text += " ";
        text += labels[i].render();
    }
    return text;
}

}  // namespace

std::string format_trace(const std::vector<TraceLevel>& trace, const TextOptions& options)
{
    std::ostringstream out;
    for (const auto& level : trace) {
        out << "Level " << level.level << " (" << level.labels.size() << " elements)\n";
        Grid grid;
        std::vector<std::string> header{"w_" + std::to_string(level.level)};
        for (const auto& label : level.labels)
            header.push_back(label.render());
        grid.push_back(std::move(header));
        for (std::size_t k = 0; k < level.rows.size(); ++k) {
            std::vector<std::string> row{level.row_names[k]};
            for (const auto& value : level.rows[k])
                row.push_back(cell(value, options));
            grid.push_back(std::move(row));
        }
        out << render_grid(grid) << '\n';
    }
    return out.str();
}

std::string format_rho(const std::vector<LevelSummary>& levels)
{
    std::ostringstream out;
    for (const auto& level : levels) {
        if (level.rho.empty())
            continue;
        const std::string next = std::to_string(level.level + 1);
        out << "rho_" << level.level << '\n';
        Grid grid{{"w_" + next}, {"rho_" + std::to_string(level.level)}};
        for (std::size_t k = 0; k < level.rho.size(); ++k) {
            grid[0].push_back("[" + std::to_string(k + 1) + "]_" + next);
            grid[1].push_back(level.rho[k].render());
        }
        out << render_grid(grid) << '\n';
    }
    return out.str();
}

std::string format_ratio_table(const std::vector<RatioRow>& rows, const TextOptions& options)
{
    Grid grid{{"#", "label", "d^1", "d^2", "d^1/d^2"}};
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& row = rows[i];
        grid.push_back({std::to_string(i + 1), row.label.render(), cell(row.d1, options), cell(row.d2, options),
                        row.ratio ? cell(*row.ratio, options) : "-"});
    }
    return render_grid(grid);
}

std::string format_vertices(const std::vector<Vertex>& vertices, const TextOptions& options)
{
    Grid grid{{"#", "label", "x", "c.x", "vertex"}};
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        const auto& vertex = vertices[i];
        grid.push_back({std::to_string(i + 1), label_list(vertex.labels), vector_cell(vertex.x, options),
                        cell(vertex.objective, options), vertex.extreme ? "yes" : "no"});
    }
    return render_grid(grid);
}

std::string format_strategy_table(const std::vector<Strategy>& strategies, const TextOptions& options)
{
    Grid grid{{""}};
    for (std::size_t i = 0; i < strategies.size(); ++i)
        grid[0].push_back(std::to_string(i + 1));
    const std::size_t components = strategies.empty() ? 0 : strategies.front().y.size();
    for (std::size_t j = 0; j < components; ++j) {
        std::vector<std::string> row{"y" + std::to_string(j + 1)};
        for (const auto& strategy : strategies)
            row.push_back(cell(strategy.y[j], options));
        grid.push_back(std::move(row));
    }
    std::string text = render_grid(grid);
    for (std::size_t i = 0; i < strategies.size(); ++i)
        text += std::to_string(i + 1) + ": " + label_list(strategies[i].labels) + "\n";
    return text;
}

std::string format_comparison(const OracleComparison& comparison)
{
    std::ostringstream out;
    out << "Oracle check (exhaustive basis enumeration)\n";
    out << "  oracle optimum:           "
        << (comparison.oracle_optimum ? to_string(*comparison.oracle_optimum) : std::string("unbounded")) << '\n';
    out << "  optimum agrees:           " << (comparison.optimum_agrees ? "yes" : "NO") << '\n';
    out << "  oracle vertices:          " << comparison.oracle_vertex_count << '\n';
    out << "  optimal points (report):  " << comparison.report_optimal_count << '\n';
    out << "  optimal vertices (oracle): " << comparison.oracle_optimal_count << '\n';
    out << "  optimal sets equal:       " << (comparison.optimal_sets_equal ? "yes" : "no") << '\n';
    out << "  extreme optimal sets equal: " << (comparison.extreme_optimal_sets_equal ? "yes" : "no") << '\n';
    if (comparison.report_point_count)
        out << "  points (report):          " << *comparison.report_point_count << " ("
            << *comparison.report_non_extreme_count << " not vertices)\n";
    if (comparison.oracle_vertices_covered)
        out << "  oracle vertices covered:  " << (*comparison.oracle_vertices_covered ? "yes" : "NO") << '\n';
    return out.str();
}

std::string format_report(const SolveReport& report, const TextOptions& options)
{
    std::ostringstream out;
    out << "lambda_bar = " << cell(report.lambda_bar, options) << '\n';
    out << "level sizes:";
    for (const auto& level : report.levels)
        out << " |W_" << level.level << "| = " << level.element_count;
    out << '\n';

    bool reordered = false;
    for (std::size_t i = 0; i < report.constraint_order.size(); ++i)
        reordered = reordered || report.constraint_order[i] != i;
    if (reordered) {
        out << "constraint order:";
        for (const auto index : report.constraint_order)
            out << ' ' << index + 1;
        out << '\n';
    }

    out << "\nOptimal points (" << report.optimal_vertices.size() << ")\n"
        << format_vertices(report.optimal_vertices, options);
    if (report.all_vertices)
        out << "\nAll points (" << report.all_vertices->size() << ")\n" << format_vertices(*report.all_vertices, options);
    out << "\nRatio table\n" << format_ratio_table(report.ratio_table, options);
    if (const std::string rho = format_rho(report.levels); !rho.empty())
        out << '\n' << rho;
    if (report.trace)
        out << '\n' << format_trace(*report.trace, options);
    return out.str();
}

}  // namespace omega::tables
