#include "mcone/tables.hpp"

#include "mcone/contact_examples.hpp"
#include "parallel.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <numeric>
#include <sstream>

#ifndef MCONE_DATA_DIR
#define MCONE_DATA_DIR "data"
#endif

namespace mcone {
namespace {

const char* flag(bool b) { return b ? "✓" : "×"; }

std::string interval_params(double a, double b_prime, int k) {
  return "a=" + pi_fraction(a) + ";b=" + pi_fraction(b_prime) + ";k=" + std::to_string(k);
}

// A row is computed lazily so the table can be filled in parallel.
using RowJob = std::function<std::vector<TableRow>()>;

RowJob flag_job(ContactExample ex, std::string params, int res) {
  return [ex = std::move(ex), params = std::move(params), res] {
    const AnalysisReport r = analyze(ex, res);
    TableRow row;
    row.family = r.family;
    row.params = params;
    row.c1 = flag(r.c1);
    row.c2 = flag(r.c2);
    row.c3 = flag(r.c3);
    return std::vector<TableRow>{row};
  };
}

RowJob level_job(double a, double b_prime, int k, int res) {
  return [=] {
    const ContactExample ex = ContactExample::restrict_to_circle(ContactExample::interval(a, b_prime, k));
    const DiscretizedSpace x = sample(ex, res);
    const std::string image = image_tag_1d(x);
    std::vector<TableRow> out;
    const std::pair<const char*, double> levels[] = {{"x<0", -0.5}, {"x=0", 0.0}, {"x>0", 0.5}};
    for (const auto& [name, mu] : levels) {
      TableRow row;
      row.family = ex.name();
      row.params = interval_params(a, b_prime, k);
      row.level = name;
      row.count = std::to_string(level_component_count(x, LevelQuery{Vec::Constant(1, mu), 2.0 * x.mesh_h()}));
      row.image = image;
      out.push_back(row);
    }
    return out;
  };
}

std::vector<RowJob> jobs_for(int table) {
  const int res = table_resolution(table);
  std::vector<RowJob> jobs;
  switch (table) {
    case 1:
      for (int n : {1, 2}) jobs.push_back(flag_job(ContactExample::mn(n), "n=" + std::to_string(n), res));
      for (double b : {3 * kPi / 4, 5 * kPi / 4, 2 * kPi})
        jobs.push_back(flag_job(ContactExample::interval(0.0, b), interval_params(0.0, b, 0), res));
      break;
    case 2: {
      const std::pair<double, double> rows[] = {
          {-kPi / 2, kPi / 4}, {-kPi / 2, kPi / 2}, {-kPi / 2, 3 * kPi / 4}, {-kPi / 2, 3 * kPi / 2},
          {0.0, kPi / 4},      {0.0, kPi / 2},      {0.0, kPi},             {0.0, 3 * kPi / 2},
          {0.0, 7 * kPi / 4}};
      for (const auto& [a, b] : rows)
        for (int k = 0; k <= 2; ++k) jobs.push_back(level_job(a, b, k, res));
      break;
    }
    case 3:
      for (int n : {1, 2})
        jobs.push_back(flag_job(ContactExample::restrict_to_circle(ContactExample::mn(n)), "n=" + std::to_string(n), res));
      break;
    case 4: {
      const std::pair<double, double> rows[] = {
          {-kPi / 2, kPi / 4}, {-kPi / 2, kPi / 2},     {-kPi / 2, 3 * kPi / 4}, {-kPi / 2, 3 * kPi / 2},
          {0.0, kPi / 4},      {0.0, kPi / 2},          {0.0, kPi},              {0.0, 3 * kPi / 2},
          {0.0, 7 * kPi / 4},  {0.0, 2 * kPi}};
      for (const auto& [a, b] : rows)
        for (int k = 0; k <= 1; ++k)
          jobs.push_back(flag_job(ContactExample::restrict_to_circle(ContactExample::interval(a, b, k)),
                                  interval_params(a, b, k), res));
      break;
    }
    default:
      throw DomainError("no table " + std::to_string(table) + "; expected 1, 2, 3 or 4");
  }
  return jobs;
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

}  // namespace

int table_resolution(int table) { return table == 2 ? 1024 : 512; }

std::string pi_fraction(double x) {
  if (x == 0.0) return "0";
  for (int den = 1; den <= 12; ++den) {
    const double num = x / kPi * den;
    const long r = std::lround(num);
    if (r == 0 || std::abs(num - static_cast<double>(r)) > 1e-9 || std::gcd(r, static_cast<long>(den)) != 1) continue;
    std::string s = r == 1 ? "" : r == -1 ? "-" : std::to_string(r);
    s += "pi";
    if (den != 1) s += "/" + std::to_string(den);
    return s;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::vector<TableRow> reproduce_table(int table) {
  const std::vector<RowJob> jobs = jobs_for(table);
  std::vector<std::vector<TableRow>> parts(jobs.size());
  detail::parallel_for(jobs.size(), [&](std::size_t i) { parts[i] = jobs[i](); });
  std::vector<TableRow> rows;
  for (auto& p : parts) rows.insert(rows.end(), p.begin(), p.end());
  return rows;
}

std::string to_csv(const std::vector<TableRow>& rows) {
  std::string out = std::string(kTableHeader) + "\n";
  for (const auto& r : rows)
    out += r.family + "," + r.params + "," + r.c1 + "," + r.c2 + "," + r.c3 + "," + r.level + "," + r.count + "," +
           r.image + "\n";
  return out;
}

std::vector<TableRow> parse_csv(const std::string& text) {
  std::vector<TableRow> rows;
  bool header_seen = false;
  const std::vector<std::string> lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string& line = lines[i];
    const std::string where = "line " + std::to_string(i + 1);
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {
      if (line != kTableHeader) throw InputError(where, where + ": expected header '" + kTableHeader + "'");
      header_seen = true;
      continue;
    }
    std::vector<std::string> cells;
    std::size_t start = 0;
    for (;;) {
      const std::size_t comma = line.find(',', start);
      cells.push_back(line.substr(start, comma == std::string::npos ? std::string::npos : comma - start));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (cells.size() != 8)
      throw InputError(where, where + ": expected 8 cells, found " + std::to_string(cells.size()));
    rows.push_back(TableRow{cells[0], cells[1], cells[2], cells[3], cells[4], cells[5], cells[6], cells[7]});
  }
  if (!header_seen) throw InputError("header", "CSV has no header line");
  return rows;
}

std::string load_golden(int table, const std::string& data_dir) {
  if (table < 1 || table > 4) throw DomainError("no table " + std::to_string(table) + "; expected 1, 2, 3 or 4");
  const std::string dir = data_dir.empty() ? std::string(MCONE_DATA_DIR) : data_dir;
  const std::string path = dir + "/golden/table" + std::to_string(table) + ".csv";
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path, "cannot open golden file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string unified_diff(const std::string& expected, const std::string& actual, const std::string& expected_name,
                         const std::string& actual_name) {
  const std::vector<std::string> a = split_lines(expected);
  const std::vector<std::string> b = split_lines(actual);
  if (a == b) return "";
  // LCS table over suffixes.
  const std::size_t n = a.size(), m = b.size();
  std::vector<std::vector<int>> lcs(n + 1, std::vector<int>(m + 1, 0));
  for (std::size_t i = n; i-- > 0;)
    for (std::size_t j = m; j-- > 0;)
      lcs[i][j] = a[i] == b[j] ? lcs[i + 1][j + 1] + 1 : std::max(lcs[i + 1][j], lcs[i][j + 1]);

  std::string out = "--- " + expected_name + "\n+++ " + actual_name + "\n";
  out += "@@ -1," + std::to_string(n) + " +1," + std::to_string(m) + " @@\n";
  std::size_t i = 0, j = 0;
  while (i < n || j < m) {
    if (i < n && j < m && a[i] == b[j]) {
      out += " " + a[i] + "\n";
      ++i, ++j;
    } else if (i < n && (j == m || lcs[i + 1][j] >= lcs[i][j + 1])) {
      out += "-" + a[i++] + "\n";
    } else {
      out += "+" + b[j++] + "\n";
    }
  }
  return out;
}

}  // namespace mcone
