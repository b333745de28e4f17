#include <algorithm>
#include <charconv>
#include <cmath>
#include <set>

#include "gtminer/corpus.hpp"
#include "gtminer/error.hpp"
#include "text_util.hpp"

namespace gtminer {
namespace {

bool is_blank(std::string_view line) { return detail::trim(line).empty(); }

std::vector<std::string> split_cells(std::string_view line) {
  std::vector<std::string> cells;
  for (auto cell : detail::split(line, ',')) cells.emplace_back(detail::trim(cell));
  return cells;
}

double parse_cell(const CsvGrid& grid, std::size_t row, std::size_t col) {
  std::string_view cell = grid.rows[row][col];
  const std::size_t line = grid.line_numbers[row];
  const std::string& name = grid.header[col];
  if (cell.empty()) throw ValidationError(line, col + 1, "empty cell in column '" + name + "'");
  std::string_view digits = cell;
  if (digits.front() == '+') digits.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || !std::isfinite(value))
    throw ValidationError(line, col + 1,
                          "non-numeric value '" + std::string(cell) + "' in column '" + name + "'");
  return value;
}

NumericTable build_table(std::shared_ptr<const CsvGrid> grid,
                         const std::vector<std::size_t>& columns) {
  NumericTable t;
  const std::size_t id_col = columns.front();
  const std::size_t dv_col = columns.back();
  t.id_name = grid->header[id_col];
  t.dv_name = grid->header[dv_col];
  for (std::size_t i = 1; i + 1 < columns.size(); ++i)
    t.feature_names.push_back(grid->header[columns[i]]);

  const std::size_t n = grid->rows.size();
  t.features = Matrix(n, t.feature_names.size());
  t.ids.reserve(n);
  t.dv.reserve(n);
  for (std::size_t r = 0; r < n; ++r) {
    t.ids.push_back(grid->rows[r][id_col]);
    for (std::size_t i = 1; i + 1 < columns.size(); ++i)
      t.features(r, i - 1) = parse_cell(*grid, r, columns[i]);
    t.dv.push_back(parse_cell(*grid, r, dv_col));
  }
  t.source = std::move(grid);
  return t;
}

std::string join_header(const std::vector<std::string>& header) {
  std::string out;
  for (const auto& h : header) {
    if (!out.empty()) out += ", ";
    out += h;
  }
  return out;
}

}  // namespace

CsvGrid parse_csv_grid(std::string_view raw) {
  if (raw.starts_with("\xEF\xBB\xBF")) raw.remove_prefix(3);
  const auto lines = detail::split_lines(raw);
  CsvGrid grid;
  std::size_t i = 0;
  while (i < lines.size() && is_blank(lines[i])) ++i;
  if (i == lines.size()) throw SchemaError("CSV has no header row");

  grid.header = split_cells(lines[i]);
  if (grid.header.size() < 3)
    throw SchemaError("CSV needs at least 3 columns (identifier, feature, dependent variable)");
  std::set<std::string> seen;
  for (std::size_t c = 0; c < grid.header.size(); ++c) {
    if (grid.header[c].empty())
      throw SchemaError("empty header name in column " + std::to_string(c + 1));
    if (!seen.insert(grid.header[c]).second)
      throw SchemaError("duplicate header name '" + grid.header[c] + "'");
  }

  for (++i; i < lines.size(); ++i) {
    if (is_blank(lines[i])) continue;
    auto cells = split_cells(lines[i]);
    if (cells.size() != grid.header.size())
      throw ValidationError(i + 1, std::min(cells.size(), grid.header.size()) + 1,
                            "expected " + std::to_string(grid.header.size()) + " cells, found " +
                                std::to_string(cells.size()));
    grid.rows.push_back(std::move(cells));
    grid.line_numbers.push_back(i + 1);
  }
  return grid;
}

NumericTable parse_numeric_csv(std::string_view raw) {
  auto grid = std::make_shared<const CsvGrid>(parse_csv_grid(raw));
  std::vector<std::size_t> columns(grid->header.size());
  for (std::size_t c = 0; c < columns.size(); ++c) columns[c] = c;
  return build_table(std::move(grid), columns);
}

NumericTable select_columns(const NumericTable& table, std::span<const std::string> titles) {
  if (!table.source) throw SchemaError("table has no originating CSV to select columns from");
  const auto& header = table.source->header;
  if (titles.size() < 3)
    throw SchemaError("column selection needs at least 3 titles (identifier, feature, "
                      "dependent variable)");

  std::vector<std::size_t> columns;
  for (const auto& title : titles) {
    auto exact = std::find(header.begin(), header.end(), title);
    std::size_t col = header.size();
    if (exact != header.end()) {
      col = static_cast<std::size_t>(exact - header.begin());
    } else {
      // Fall back to a case-insensitive match when it is unambiguous.
      const auto wanted = detail::to_lower(title);
      std::size_t matches = 0;
      for (std::size_t c = 0; c < header.size(); ++c)
        if (detail::to_lower(header[c]) == wanted) {
          col = c;
          ++matches;
        }
      if (matches != 1) col = header.size();
    }
    if (col == header.size())
      throw SchemaError("unknown column '" + title + "'; available: " + join_header(header));
    if (std::find(columns.begin(), columns.end(), col) != columns.end())
      throw SchemaError("column '" + title + "' selected twice");
    columns.push_back(col);
  }
  return build_table(table.source, columns);
}

NumericTable NumericTable::select_rows(std::span<const std::size_t> indices) const {
  NumericTable out;
  out.id_name = id_name;
  out.feature_names = feature_names;
  out.dv_name = dv_name;
  out.features = features.select_rows(indices);
  out.ids.reserve(indices.size());
  out.dv.reserve(indices.size());
  for (auto i : indices) {
    out.ids.push_back(ids[i]);
    out.dv.push_back(dv[i]);
  }
  return out;
}

}  // namespace gtminer
