#pragma once

#include <string>
#include <vector>

namespace rcg::csvio {

// Full round-trip decimal formatting (17 significant digits) so rewritten
// numbers are bit-exact on re-read and diffs between runs are meaningful.
std::string format_double(double v);

// Comma-delimited writer with a header row. Rows are buffered and the file
// is written atomically (temp file + rename).
class Writer {
 public:
  explicit Writer(std::vector<std::string> header);
  void add_row(std::vector<std::string> cells);
  // Convenience: formats every double with format_double.
  void add_row(const std::vector<double>& cells);
  void write(const std::string& path) const;
  size_t rows() const { return rows_.size(); }

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;  // all rows have header size
  std::string path;                            // for error messages

  // Column lookup; throws ValidationError naming the column when absent.
  int column(const std::string& name) const;
  // Numeric cell access; throws ValidationError naming row and column on
  // missing or non-numeric content. `row` is 0-based over data rows.
  double number(int row, int col) const;
};

Table read_table(const std::string& path);

// Writes `text` to path atomically.
void write_file_atomic(const std::string& path, const std::string& text);

}  // namespace rcg::csvio
