#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "omega/problem.hpp"
#include "omega/rational.hpp"

namespace omega {

/// Identity of an element of a level set.
///
/// Level 1 elements are the base indices 1…n+1 and render as plain integers.
/// An element kept from level l into level l+1 renders "[rank]_{l+1}", where
/// rank is its 1-based position among the kept elements. An element formed
/// from a negative/positive pair at level l renders "[neg,pos]_{l+1}" with the
/// components being the level-l labels.
class Label {
public:
    enum class Kind { Base, Kept, Pair };

    static Label base(std::size_t index);
    static Label kept(std::size_t level, std::size_t rank);
    static Label pair(std::size_t level, Label neg, Label pos);

    /// Inverse of render(). Throws Error(ParseError).
    static Label parse(std::string_view text);

    Kind kind() const;
    std::size_t level() const;
    /// Base index for Base, rank for Kept, 0 for Pair.
    std::size_t number() const;
    const Label& neg() const;
    const Label& pos() const;

    std::string render() const;

    friend bool operator==(const Label& lhs, const Label& rhs);

private:
    struct Node;
    explicit Label(std::shared_ptr<const Node> node);
    std::shared_ptr<const Node> node_;
};

struct LevelElement {
    Label label;
    /// Coefficients over {1, …, n+1} expressing this element as a
    /// combination of the base elements.
    Vector kernel_row;
    /// Transported values: the not-yet-consumed constraint functions in
    /// order, then e1, then e2. The first entry is the current g-value
    /// while the level is not final; at the final level only (d1, d2) remain.
    Vector carried;

    friend bool operator==(const LevelElement&, const LevelElement&) = default;
};

/// Positions (0-based, ascending) of zero / negative / positive values.
struct Partition {
    std::vector<std::size_t> zero;
    std::vector<std::size_t> neg;
    std::vector<std::size_t> pos;

    friend bool operator==(const Partition&, const Partition&) = default;
};

struct LevelState {
    std::size_t level = 1;
    std::size_t last_level = 1;  ///< m
    std::vector<LevelElement> elements;
    Partition partition;  ///< empty at the final level

    bool is_final() const { return level == last_level; }

    friend bool operator==(const LevelState&, const LevelState&) = default;
};

/// Bookkeeping for one level of the construction.
struct LevelSummary {
    std::size_t level = 0;
    std::size_t element_count = 0;
    std::size_t zero_count = 0;
    std::size_t neg_count = 0;
    std::size_t pos_count = 0;
    /// Image of each kept element [k]_{level+1} in this level, in rank order.
    /// Empty for the final level.
    std::vector<Label> rho;

    friend bool operator==(const LevelSummary&, const LevelSummary&) = default;
};

/// Labels and transported rows of one level, for trace output.
struct TraceLevel {
    std::size_t level = 0;
    std::vector<Label> labels;
    std::vector<std::string> row_names;
    std::vector<Vector> rows;

    friend bool operator==(const TraceLevel&, const TraceLevel&) = default;
};

inline constexpr std::size_t kDefaultMaxElements = 1'000'000;

struct EliminationOptions {
    std::size_t max_elements = kDefaultMaxElements;
    bool keep_trace = false;
};

struct EliminationResult {
    LevelState final_state;
    std::vector<LevelSummary> levels;
    std::vector<TraceLevel> trace;  ///< filled when keep_trace
};

Partition sign_partition(std::span<const Rational> values);

std::vector<std::pair<std::size_t, std::size_t>> ordered_pairs(std::span<const std::size_t> neg,
                                                               std::span<const std::size_t> pos);

LevelState initial_state(const ReducedData& reduced);

/// g-values of a non-final level (first carried entry of every element).
Vector g_values(const LevelState& state);

/// One level of the construction: kept elements (zero or negative g) first in
/// ascending order, then one element per ordered (neg, pos) pair with every
/// transported quantity h' = g(pos)·h(neg) - g(neg)·h(pos). The consumed
/// constraint is dropped from the carried values.
/// Throws SizeLimitExceeded if the next level would exceed max_elements.
LevelState advance(const LevelState& state, std::size_t max_elements = kDefaultMaxElements);

EliminationResult run_elimination(const ReducedData& reduced, const EliminationOptions& options = {});

/// Original functions on {1, …, n+1} whose transports are carried at `level`,
/// in carried order.
std::vector<Vector> carried_sources(const ReducedData& reduced, std::size_t level);

/// True iff every carried value equals kernel_row · (its source function).
bool kernel_identity_holds(const LevelState& state, const ReducedData& reduced);

TraceLevel trace_level(const LevelState& state);

}  // namespace omega
