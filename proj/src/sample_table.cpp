#include "sample_table.hpp"

#include <cmath>
#include <unordered_set>

#include "csv.hpp"
#include "errors.hpp"

namespace rcg {

SampleTable read_sample_table(const std::string& path) {
  const csvio::Table raw = csvio::read_table(path);
  if (raw.header.size() < 5)
    throw ValidationError(path +
                          ": expected header id, x, y, z, var1..varp"
                          "[, category]");
  const std::vector<std::string> fixed{"id", "x", "y", "z"};
  for (size_t i = 0; i < fixed.size(); ++i)
    if (raw.header[i] != fixed[i])
      throw ValidationError(path + ": header column " + std::to_string(i + 1) +
                            " must be '" + fixed[i] + "', got '" +
                            raw.header[i] + "'");
  const bool has_category = raw.header.back() == "category";
  const int var_end = static_cast<int>(raw.header.size()) - (has_category ? 1 : 0);

  SampleTable table;
  for (int c = 4; c < var_end; ++c) table.variables.push_back(raw.header[c]);
  if (table.variables.empty())
    throw ValidationError(path + ": no variable columns");

  const int n = static_cast<int>(raw.rows.size());
  table.values.resize(n, table.p());
  std::unordered_set<std::string> seen;
  for (int r = 0; r < n; ++r) {
    const std::string& id = raw.rows[static_cast<size_t>(r)][0];
    if (id.empty())
      throw ValidationError(path + ": line " + std::to_string(r + 2) +
                            ": empty id");
    if (!seen.insert(id).second)
      throw ValidationError(path + ": line " + std::to_string(r + 2) +
                            ": duplicate id '" + id + "'");
    table.ids.push_back(id);
    Point3 pt{raw.number(r, 1), raw.number(r, 2), raw.number(r, 3)};
    if (!std::isfinite(pt.x) || !std::isfinite(pt.y) || !std::isfinite(pt.z))
      throw ValidationError(path + ": line " + std::to_string(r + 2) +
                            ": non-finite coordinate");
    table.coords.push_back(pt);
    for (int c = 0; c < table.p(); ++c)
      table.values(r, c) = raw.number(r, 4 + c);
    if (has_category)
      table.categories.push_back(raw.rows[static_cast<size_t>(r)].back());
  }
  return table;
}

SampleTable select_variables(const SampleTable& table,
                             const std::vector<std::string>& names) {
  if (names.empty()) return table;
  SampleTable out = table;
  out.variables = names;
  out.values.resize(table.n(), static_cast<int>(names.size()));
  for (size_t j = 0; j < names.size(); ++j) {
    int src = -1;
    for (int c = 0; c < table.p(); ++c)
      if (table.variables[static_cast<size_t>(c)] == names[j]) src = c;
    if (src < 0)
      throw ValidationError("unknown variable '" + names[j] + "'");
    out.values.col(static_cast<Eigen::Index>(j)) = table.values.col(src);
  }
  return out;
}

void write_sample_table(const SampleTable& table, const std::string& path) {
  std::vector<std::string> header{"id", "x", "y", "z"};
  for (const auto& v : table.variables) header.push_back(v);
  const bool has_category = !table.categories.empty();
  if (has_category) header.emplace_back("category");
  csvio::Writer writer(std::move(header));
  for (int r = 0; r < table.n(); ++r) {
    std::vector<std::string> row;
    row.push_back(table.ids[static_cast<size_t>(r)]);
    row.push_back(csvio::format_double(table.coords[static_cast<size_t>(r)].x));
    row.push_back(csvio::format_double(table.coords[static_cast<size_t>(r)].y));
    row.push_back(csvio::format_double(table.coords[static_cast<size_t>(r)].z));
    for (int c = 0; c < table.p(); ++c)
      row.push_back(csvio::format_double(table.values(r, c)));
    if (has_category) row.push_back(table.categories[static_cast<size_t>(r)]);
    writer.add_row(std::move(row));
  }
  writer.write(path);
}

}  // namespace rcg
