#include "csv.hpp"

#include <cerrno>
#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <utility>

#include "errors.hpp"

namespace rcg::csvio {
namespace {

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::stringstream ss(line);
  while (std::getline(ss, cell, ',')) {
    // trim surrounding whitespace
    const auto b = cell.find_first_not_of(" \t\r");
    const auto e = cell.find_last_not_of(" \t\r");
    cells.push_back(b == std::string::npos ? std::string()
                                           : cell.substr(b, e - b + 1));
  }
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

Writer::Writer(std::vector<std::string> header) : header_(std::move(header)) {}

void Writer::add_row(std::vector<std::string> cells) {
  if (cells.size() != header_.size())
    throw IoError("csv row has " + std::to_string(cells.size()) +
                  " cells, header has " + std::to_string(header_.size()));
  rows_.push_back(std::move(cells));
}

void Writer::add_row(const std::vector<double>& cells) {
  std::vector<std::string> formatted;
  formatted.reserve(cells.size());
  for (double v : cells) formatted.push_back(format_double(v));
  add_row(std::move(formatted));
}

void Writer::write(const std::string& path) const {
  std::string text;
  for (size_t i = 0; i < header_.size(); ++i) {
    if (i) text += ',';
    text += header_[i];
  }
  text += '\n';
  for (const auto& row : rows_) {
    for (size_t i = 0; i < row.size(); ++i) {
      if (i) text += ',';
      text += row[i];
    }
    text += '\n';
  }
  write_file_atomic(path, text);
}

void write_file_atomic(const std::string& path, const std::string& text) {
  const std::filesystem::path target(path);
  if (target.has_parent_path())
    std::filesystem::create_directories(target.parent_path());
  const std::filesystem::path tmp = target.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + tmp.string() + " for writing");
    out << text;
    if (!out) throw IoError("write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, target, ec);
  if (ec)
    throw IoError("cannot rename " + tmp.string() + " to " + target.string() +
                  ": " + ec.message());
}

int Table::column(const std::string& name) const {
  for (size_t i = 0; i < header.size(); ++i)
    if (header[i] == name) return static_cast<int>(i);
  throw ValidationError(path + ": missing column '" + name + "'");
}

double Table::number(int row, int col) const {
  const std::string& cell = rows[static_cast<size_t>(row)][static_cast<size_t>(col)];
  // +2: 1 for the header line, 1 for 1-based line numbers
  if (cell.empty())
    throw ValidationError(path + ": line " + std::to_string(row + 2) +
                          ", column '" + header[static_cast<size_t>(col)] +
                          "': missing value");
  double value = 0.0;
  const auto [ptr, ec] =
      std::from_chars(cell.data(), cell.data() + cell.size(), value);
  if (ec != std::errc() || ptr != cell.data() + cell.size())
    throw ValidationError(path + ": line " + std::to_string(row + 2) +
                          ", column '" + header[static_cast<size_t>(col)] +
                          "': '" + cell + "' is not a number");
  return value;
}

Table read_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  Table table;
  table.path = path;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() ||
        line.find_first_not_of(" \t\r") == std::string::npos)
      continue;
    auto cells = split_line(line);
    if (table.header.empty()) {
      table.header = std::move(cells);
      continue;
    }
    if (cells.size() != table.header.size())
      throw ValidationError(path + ": line " + std::to_string(line_no) +
                            " has " + std::to_string(cells.size()) +
                            " cells, expected " +
                            std::to_string(table.header.size()));
    table.rows.push_back(std::move(cells));
  }
  if (table.header.empty())
    throw ValidationError(path + ": empty file, expected a header row");
  return table;
}

}  // namespace rcg::csvio
