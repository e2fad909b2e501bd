#pragma once

#include <optional>
#include <vector>

namespace kronstab {

/// Rectangular profit matrix, rows = agents, columns = tasks, rows <= cols.
/// std::nullopt marks a forbidden pair.
using ProfitMatrix = std::vector<std::vector<std::optional<long long>>>;

struct Assignment {
    long long value = 0;
    std::vector<int> column_of_row;
};

/// Maximum-profit assignment of every row to a distinct column
/// (Hungarian method with potentials, O(rows^2 cols)). Returns nullopt when
/// no assignment avoids the forbidden pairs.
std::optional<Assignment> max_assignment(const ProfitMatrix &profit);

} // namespace kronstab
