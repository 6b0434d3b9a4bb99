#pragma once

#include "fmd/mass.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fmd::cli {

// One row of the common output table.  Absent fields serialize as empty
// CSV cells / JSON nulls: a predictive row has no mass, the top mass row
// has no predictive component.
struct TableRow {
    long long a = 0;
    double abscissa = 0.0;
    std::optional<double> p_aN;
    std::optional<double> q_aNp1;
    std::optional<double> density;
};

struct Table {
    std::vector<TableRow> rows;
    bool log_output = false; // q and density columns carry natural logs
};

inline constexpr const char* kCsvHeader = "a,abscissa,p_aN,q_aNp1,density";

// Shortest exact decimal: 17 significant digits round-trip any double.
std::string fmt17(double v);

void write_table_csv(const Table& t, const std::string& path);
void write_table_json(const Table& t, const std::string& path);
void write_table(const Table& t, const std::string& path,
                 const std::string& format);

// Reads a table written by write_table_csv.  Malformed input raises
// ValidationError naming the offending line number.
Table read_table_csv(const std::string& path);

// Rebuilds the mass function from a table's q column (or, when the table
// was written with log output, from the log values).
MassFunction read_mass_csv(const std::string& path, bool log_input = false);

} // namespace fmd::cli
