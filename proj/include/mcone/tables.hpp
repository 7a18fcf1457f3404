#pragma once

#include <string>
#include <vector>

namespace mcone {

/// One CSV row of a reproduced example table. Flags are "✓" or "×"; cells
/// that a table does not report are empty.
struct TableRow {
  std::string family;
  std::string params;
  std::string c1, c2, c3;
  std::string level;
  std::string count;
  std::string image;

  bool operator==(const TableRow&) const = default;
};

inline constexpr const char* kTableHeader = "family,params,c1,c2,c3,level,count,image";

/// Runs the analyzer over the representative rows of table 1..4.
/// Throws DomainError for any other table number.
std::vector<TableRow> reproduce_table(int table);

/// Resolution used for the given table.
int table_resolution(int table);

/// "3pi/4"-style rendering of multiples of pi with denominator <= 12;
/// falls back to %.12g.
std::string pi_fraction(double x);

std::string to_csv(const std::vector<TableRow>& rows);

/// Parses CSV text with the standard header. Lines starting with '#' and
/// blank lines are skipped. Throws InputError naming the line.
std::vector<TableRow> parse_csv(const std::string& text);

/// Golden CSV text for the table, read from `data_dir`/golden/tableN.csv
/// (defaults to the data directory configured at build time).
std::string load_golden(int table, const std::string& data_dir = "");

/// Unified diff of two texts, line based; empty when they are equal.
std::string unified_diff(const std::string& expected, const std::string& actual,
                         const std::string& expected_name = "golden", const std::string& actual_name = "reproduced");

}  // namespace mcone
