#include "omega/linalg.hpp"

#include <utility>

namespace omega::linalg {

namespace {

/// Reduced row echelon form in place, pivoting only in the first `columns`
/// columns (any further columns are carried along); returns the pivot columns.
std::vector<std::size_t> reduce(Matrix& rows, std::size_t columns)
{
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < columns && row < rows.size(); ++col) {
        std::size_t pick = row;
        while (pick < rows.size() && rows[pick][col] == 0)
            ++pick;
        if (pick == rows.size())
            continue;
        std::swap(rows[row], rows[pick]);
        const Rational inverse = 1 / rows[row][col];
        for (std::size_t k = col; k < rows[row].size(); ++k)
            rows[row][k] *= inverse;
        for (std::size_t other = 0; other < rows.size(); ++other) {
            if (other == row || rows[other][col] == 0)
                continue;
            const Rational factor = rows[other][col];
            for (std::size_t k = col; k < rows[row].size(); ++k)
                rows[other][k] -= factor * rows[row][k];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

std::size_t rank(Matrix rows)
{
    if (rows.empty())
        return 0;
    const std::size_t columns = rows.front().size();
    return reduce(rows, columns).size();
}

std::optional<Vector> solve_square(Matrix lhs, Vector rhs)
{
    const std::size_t size = lhs.size();
    for (std::size_t i = 0; i < size; ++i)
        lhs[i].push_back(rhs[i]);
    const auto pivots = reduce(lhs, size);
    if (pivots.size() != size)
        return std::nullopt;
    Vector x(size);
    for (std::size_t i = 0; i < size; ++i)
        x[i] = lhs[i][size];
    return x;
}

std::optional<Vector> null_direction(const Matrix& rows, std::size_t columns)
{
    Matrix work = rows;
    const auto pivots = reduce(work, columns);
    if (pivots.size() + 1 != columns)
        return std::nullopt;

    std::size_t free_column = 0;
    for (std::size_t i = 0; i < pivots.size() && pivots[i] == free_column; ++i)
        ++free_column;

    Vector direction(columns, Rational(0));
    direction[free_column] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i)
        direction[pivots[i]] = -work[i][free_column];
    return direction;
}

}  // namespace omega::linalg
