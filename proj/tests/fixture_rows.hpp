#pragma once

#include <array>

#include "kronstab/partition.hpp"
#include "kronstab/report.hpp"

inline std::vector<std::array<kronstab::Partition, 3>> table_triples(const char *id) {
    std::vector<std::array<kronstab::Partition, 3>> out;
    for (const auto &row : kronstab::table_fixture(id).rows)
        out.push_back({row.lambda, row.mu, row.nu});
    return out;
}

inline int expected_cell(const char *id, std::size_t row, const char *column) {
    for (const auto &c : kronstab::table_fixture(id).rows.at(row).cells)
        if (c.column == column)
            return c.value;
    throw std::out_of_range(column);
}
