#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kronstab/gitbounds.hpp"
#include "kronstab/partition.hpp"
#include "kronstab/stabilization.hpp"

namespace kronstab {

struct FixtureCell {
    std::string column;
    int value = 0;
    /// False for columns that are only echoed (bounds from other methods).
    bool computed = true;
    bool known_mismatch = false;
};

struct FixtureRow {
    Partition lambda, mu, nu;
    std::vector<FixtureCell> cells;
};

struct TableFixture {
    std::string id;
    Family family = Family::Murnaghan;
    std::vector<std::string> columns;
    std::vector<FixtureRow> rows;
};

/// Embedded published tables: "murnaghan" and "squares".
const std::vector<TableFixture> &table_fixtures();
const TableFixture &table_fixture(const std::string &id);

struct CellResult {
    std::string column;
    std::optional<int> computed;
    std::optional<int> expected;
    std::string source;
    /// "match", "mismatch-known", "mismatch" or "fixture".
    std::string status;

    friend bool operator==(const CellResult &, const CellResult &) = default;
};

struct RowResult {
    std::string triple;
    std::map<std::string, int> bounds;
    int d_real = 0;
    long long limit = 0;
    int horizon = 0;
    std::string certificate;
    std::vector<std::string> notes;
    std::vector<CellResult> cells;

    friend bool operator==(const RowResult &, const RowResult &) = default;
};

struct TableReport {
    std::string table;
    Family family = Family::Murnaghan;
    std::vector<std::string> columns;
    std::vector<RowResult> rows;

    /// No cell with status "mismatch".
    bool all_match() const;
    friend bool operator==(const TableReport &, const TableReport &) = default;
};

/// Value of a table column computed from the bounds and the stabilization
/// result; nullopt for echo-only columns.
std::optional<int> computed_column(const std::string &column, const BoundReport &bounds, const StabilizationResult &s);

RowResult evaluate_row(const TableFixture &table, const FixtureRow &row);

/// Rows evaluated in parallel, assembled in fixture order.
TableReport evaluate_table(const TableFixture &table);

std::string emit_markdown(const TableReport &r);
std::string emit_csv(const TableReport &r);
std::string emit_json(const TableReport &r);
TableReport parse_json_report(const std::string &text);

} // namespace kronstab
