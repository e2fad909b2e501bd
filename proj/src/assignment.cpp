#include "kronstab/assignment.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>

#include "kronstab/errors.hpp"

namespace kronstab {

std::optional<Assignment> max_assignment(const ProfitMatrix &profit) {
    const int n = static_cast<int>(profit.size());
    if (n == 0)
        return Assignment{};
    const int m = static_cast<int>(profit[0].size());
    if (m < n)
        throw DomainError("assignment needs at least as many columns as rows");

    long long spread = 1;
    for (const auto &row : profit) {
        if (static_cast<int>(row.size()) != m)
            throw DomainError("ragged profit matrix");
        for (const auto &p : row)
            if (p)
                spread = std::max(spread, std::abs(*p) + 1);
    }
    // Forbidden pairs cost more than any allowed full assignment can gain.
    const long long forbidden = spread * (n + 1) * 2;
    auto cost = [&](int i, int j) -> long long {
        const auto &p = profit[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        return p ? -*p : forbidden;
    };

    // Hungarian method on a 1-based layout; column 0 is the virtual start.
    using idx = std::size_t;
    const long long inf = std::numeric_limits<long long>::max() / 4;
    const idx rows = static_cast<idx>(n), cols = static_cast<idx>(m);
    std::vector<long long> u(rows + 1, 0), v(cols + 1, 0);
    std::vector<idx> match(cols + 1, 0), way(cols + 1, 0);
    for (idx i = 1; i <= rows; ++i) {
        match[0] = i;
        idx j0 = 0;
        std::vector<long long> minv(cols + 1, inf);
        std::vector<char> used(cols + 1, 0);
        do {
            used[j0] = 1;
            const idx i0 = match[j0];
            long long delta = inf;
            idx j1 = 0;
            for (idx j = 1; j <= cols; ++j) {
                if (used[j])
                    continue;
                const long long cur = cost(static_cast<int>(i0) - 1, static_cast<int>(j) - 1) - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (idx j = 0; j <= cols; ++j) {
                if (used[j]) {
                    u[match[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (match[j0] != 0);
        do {
            const idx j1 = way[j0];
            match[j0] = match[j1];
            j0 = j1;
        } while (j0);
    }

    Assignment result;
    result.column_of_row.assign(rows, -1);
    for (idx j = 1; j <= cols; ++j)
        if (match[j])
            result.column_of_row[match[j] - 1] = static_cast<int>(j) - 1;
    for (idx i = 0; i < rows; ++i) {
        const auto &p = profit[i][static_cast<idx>(result.column_of_row[i])];
        if (!p)
            return std::nullopt;
        result.value += *p;
    }
    return result;
}

} // namespace kronstab
