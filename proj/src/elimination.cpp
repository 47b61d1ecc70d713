#include "omega/elimination.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <optional>
#include <string>

#include "omega/errors.hpp"

namespace omega {

struct Label::Node {
    Kind kind;
    std::size_t level;
    std::size_t number;
    std::optional<Label> neg;
    std::optional<Label> pos;
};

Label::Label(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Label Label::base(std::size_t index)
{
    return Label(std::make_shared<const Node>(Node{Kind::Base, 1, index, std::nullopt, std::nullopt}));
}

Label Label::kept(std::size_t level, std::size_t rank)
{
    return Label(std::make_shared<const Node>(Node{Kind::Kept, level, rank, std::nullopt, std::nullopt}));
}

Label Label::pair(std::size_t level, Label neg, Label pos)
{
    return Label(std::make_shared<const Node>(Node{Kind::Pair, level, 0, std::move(neg), std::move(pos)}));
}

Label::Kind Label::kind() const { return node_->kind; }
std::size_t Label::level() const { return node_->level; }
std::size_t Label::number() const { return node_->number; }

const Label& Label::neg() const
{
    if (node_->kind != Kind::Pair)
        throw std::logic_error("Label::neg on a non-pair label");
    return *node_->neg;
}

const Label& Label::pos() const
{
    if (node_->kind != Kind::Pair)
        throw std::logic_error("Label::pos on a non-pair label");
    return *node_->pos;
}

std::string Label::render() const
{
    switch (node_->kind) {
    case Kind::Base:
        return std::to_string(node_->number);
    case Kind::Kept:
        return "[" + std::to_string(node_->number) + "]_" + std::to_string(node_->level);
    case Kind::Pair:
        return "[" + node_->neg->render() + "," + node_->pos->render() + "]_" + std::to_string(node_->level);
    }
    return {};
}

bool operator==(const Label& lhs, const Label& rhs)
{
    if (lhs.node_ == rhs.node_)
        return true;
    if (lhs.kind() != rhs.kind() || lhs.level() != rhs.level() || lhs.number() != rhs.number())
        return false;
    if (lhs.kind() != Label::Kind::Pair)
        return true;
    return lhs.neg() == rhs.neg() && lhs.pos() == rhs.pos();
}

namespace {

class LabelParser {
public:
    explicit LabelParser(std::string_view text) : text_(text) {}

    Label parse_all()
    {
        Label label = parse_label();
        if (at_ < text_.size())
            fail("trailing characters");
        return label;
    }

private:
    Label parse_label()
    {
        if (peek() != '[') {
            const std::size_t index = parse_number();
            if (index == 0)
                fail("base index must be >= 1");
            return Label::base(index);
        }
        ++at_;
        Label first = parse_label();
        if (peek() == ']') {
            ++at_;
            const std::size_t level = parse_level();
            if (first.kind() != Label::Kind::Base)
                fail("kept label must hold a plain rank");
            if (level < 2)
                fail("kept labels start at level 2");
            return Label::kept(level, first.number());
        }
        expect(',');
        Label second = parse_label();
        expect(']');
        const std::size_t level = parse_level();
        if (first.level() + 1 != level || second.level() + 1 != level)
            fail("pair components must belong to the previous level");
        return Label::pair(level, std::move(first), std::move(second));
    }

    std::size_t parse_level()
    {
        expect('_');
        return parse_number();
    }

    std::size_t parse_number()
    {
        const std::size_t start = at_;
        std::size_t value = 0;
        while (at_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[at_]))) {
            value = value * 10 + static_cast<std::size_t>(text_[at_] - '0');
            ++at_;
        }
        if (at_ == start)
            fail("expected a number");
        return value;
    }

    char peek() const { return at_ < text_.size() ? text_[at_] : '\0'; }

    void expect(char ch)
    {
        if (peek() != ch)
            fail(std::string("expected '") + ch + "'");
        ++at_;
    }

    [[noreturn]] void fail(const std::string& what) const
    {
        throw Error(ErrorKind::ParseError, "bad label \"" + std::string(text_) + "\": " + what, 1, at_ + 1);
    }

    std::string_view text_;
    std::size_t at_ = 0;
};

std::vector<std::size_t> merged_kept(const Partition& partition)
{
    std::vector<std::size_t> kept;
    kept.reserve(partition.zero.size() + partition.neg.size());
    std::merge(partition.zero.begin(), partition.zero.end(), partition.neg.begin(), partition.neg.end(),
               std::back_inserter(kept));
    return kept;
}

std::string function_row_name(std::size_t level, const std::string& function)
{
    if (level == 1)
        return function;
    return "G(" + std::to_string(level - 1) + ")" + function;
}

}  // namespace

Label Label::parse(std::string_view text)
{
    return LabelParser(text).parse_all();
}

Partition sign_partition(std::span<const Rational> values)
{
    Partition partition;
    for (std::size_t i = 0; i < values.size(); ++i) {
        switch (values[i].sign()) {
        case 0: partition.zero.push_back(i); break;
        case -1: partition.neg.push_back(i); break;
        default: partition.pos.push_back(i); break;
        }
    }
    return partition;
}

std::vector<std::pair<std::size_t, std::size_t>> ordered_pairs(std::span<const std::size_t> neg,
                                                               std::span<const std::size_t> pos)
{
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    pairs.reserve(neg.size() * pos.size());
    for (const std::size_t minus : neg)
        for (const std::size_t plus : pos)
            pairs.emplace_back(minus, plus);
    return pairs;
}

LevelState initial_state(const ReducedData& reduced)
{
    const std::size_t width = reduced.n + 1;
    LevelState state;
    state.level = 1;
    state.last_level = reduced.fs.size() + 1;
    state.elements.reserve(width);
    for (std::size_t i = 0; i < width; ++i) {
        LevelElement element{Label::base(i + 1), Vector(width, Rational(0)), {}};
        element.kernel_row[i] = 1;
        element.carried.reserve(reduced.fs.size() + 2);
        for (const auto& f : reduced.fs)
            element.carried.push_back(f[i]);
        element.carried.push_back(reduced.e1[i]);
        element.carried.push_back(reduced.e2[i]);
        state.elements.push_back(std::move(element));
    }
    if (!state.is_final())
        state.partition = sign_partition(g_values(state));
    return state;
}

Vector g_values(const LevelState& state)
{
    if (state.is_final())
        throw std::logic_error("g_values: the final level has no constraint left");
    Vector g;
    g.reserve(state.elements.size());
    for (const auto& element : state.elements)
        g.push_back(element.carried.front());
    return g;
}

LevelState advance(const LevelState& state, std::size_t max_elements)
{
    if (state.is_final())
        throw std::logic_error("advance: state is already at the final level");

    const Partition& partition = state.partition;
    const std::vector<std::size_t> kept = merged_kept(partition);
    const std::size_t neg_count = partition.neg.size();
    const std::size_t pos_count = partition.pos.size();
    if (neg_count != 0 && pos_count > (std::numeric_limits<std::size_t>::max() - kept.size()) / neg_count)
        throw Error(ErrorKind::SizeLimitExceeded, "level size overflows");
    const std::size_t next_size = kept.size() + neg_count * pos_count;
    if (next_size > max_elements)
        throw Error(ErrorKind::SizeLimitExceeded,
                    "level " + std::to_string(state.level + 1) + " would hold " + std::to_string(next_size) +
                        " elements, above the cap of " + std::to_string(max_elements));

    LevelState next;
    next.level = state.level + 1;
    next.last_level = state.last_level;
    next.elements.reserve(next_size);

    for (std::size_t rank = 0; rank < kept.size(); ++rank) {
        const LevelElement& source = state.elements[kept[rank]];
        next.elements.push_back(LevelElement{Label::kept(next.level, rank + 1), source.kernel_row,
                                             Vector(source.carried.begin() + 1, source.carried.end())});
    }

    for (const auto& [minus, plus] : ordered_pairs(partition.neg, partition.pos)) {
        const LevelElement& lo = state.elements[minus];
        const LevelElement& hi = state.elements[plus];
        const Rational& g_lo = lo.carried.front();
        const Rational& g_hi = hi.carried.front();

        LevelElement element{Label::pair(next.level, lo.label, hi.label), Vector(lo.kernel_row.size()),
                             Vector(lo.carried.size() - 1)};
        for (std::size_t k = 0; k < element.kernel_row.size(); ++k)
            element.kernel_row[k] = g_hi * lo.kernel_row[k] - g_lo * hi.kernel_row[k];
        for (std::size_t k = 0; k < element.carried.size(); ++k)
            element.carried[k] = g_hi * lo.carried[k + 1] - g_lo * hi.carried[k + 1];
        next.elements.push_back(std::move(element));
    }

    if (!next.is_final())
        next.partition = sign_partition(g_values(next));
    return next;
}

EliminationResult run_elimination(const ReducedData& reduced, const EliminationOptions& options)
{
    EliminationResult result;
    LevelState state = initial_state(reduced);
    if (options.keep_trace)
        result.trace.push_back(trace_level(state));

    while (!state.is_final()) {
        LevelSummary summary{state.level,
                             state.elements.size(),
                             state.partition.zero.size(),
                             state.partition.neg.size(),
                             state.partition.pos.size(),
                             {}};
        for (const std::size_t position : merged_kept(state.partition))
            summary.rho.push_back(state.elements[position].label);
        result.levels.push_back(std::move(summary));

        state = advance(state, options.max_elements);
        if (options.keep_trace)
            result.trace.push_back(trace_level(state));
    }
    result.levels.push_back(LevelSummary{state.level, state.elements.size(), 0, 0, 0, {}});
    result.final_state = std::move(state);
    return result;
}

std::vector<Vector> carried_sources(const ReducedData& reduced, std::size_t level)
{
    std::vector<Vector> sources;
    for (std::size_t j = level; j <= reduced.fs.size(); ++j)
        sources.push_back(reduced.fs[j - 1]);
    sources.push_back(reduced.e1);
    sources.push_back(reduced.e2);
    return sources;
}

bool kernel_identity_holds(const LevelState& state, const ReducedData& reduced)
{
    const auto sources = carried_sources(reduced, state.level);
    for (const auto& element : state.elements) {
        if (element.carried.size() != sources.size())
            return false;
        for (std::size_t k = 0; k < sources.size(); ++k) {
            if (dot(element.kernel_row, sources[k]) != element.carried[k])
                return false;
        }
    }
    return true;
}

TraceLevel trace_level(const LevelState& state)
{
    TraceLevel trace;
    trace.level = state.level;
    const std::size_t constraint_rows = state.last_level - state.level;
    const std::size_t row_count = constraint_rows + 2;
    for (std::size_t k = 0; k < constraint_rows; ++k) {
        const std::size_t function = state.level + k;
        if (k == 0)
            trace.row_names.push_back("g^" + std::to_string(function));
        else
            trace.row_names.push_back(function_row_name(state.level, "f^" + std::to_string(function)));
    }
    if (state.is_final() && state.level > 1) {
        trace.row_names.push_back("d^1");
        trace.row_names.push_back("d^2");
    } else {
        trace.row_names.push_back(function_row_name(state.level, "e^1"));
        trace.row_names.push_back(function_row_name(state.level, "e^2"));
    }

    trace.rows.assign(row_count, Vector{});
    for (const auto& element : state.elements) {
        trace.labels.push_back(element.label);
        for (std::size_t k = 0; k < row_count; ++k)
            trace.rows[k].push_back(element.carried[k]);
    }
    return trace;
}

}  // namespace omega
