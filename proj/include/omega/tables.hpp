#pragma once

#include <string>
#include <vector>

#include "omega/elimination.hpp"
#include "omega/game.hpp"
#include "omega/oracle.hpp"
#include "omega/solution.hpp"

namespace omega::tables {

struct TextOptions {
    bool decimal = false;  ///< append rounded decimals to fractions
};

/// One column per label, one line per transported function.
std::string format_trace(const std::vector<TraceLevel>& trace, const TextOptions& options = {});

/// Kept-element map of every level: "[k]_{l+1} -> label".
std::string format_rho(const std::vector<LevelSummary>& levels);

/// Numbered rows: label, d1, d2, d1/d2.
std::string format_ratio_table(const std::vector<RatioRow>& rows, const TextOptions& options = {});

std::string format_vertices(const std::vector<Vertex>& vertices, const TextOptions& options = {});

/// Rows are components, columns are strategies.
std::string format_strategy_table(const std::vector<Strategy>& strategies, const TextOptions& options = {});

std::string format_comparison(const OracleComparison& comparison);

std::string format_report(const SolveReport& report, const TextOptions& options = {});

}  // namespace omega::tables
