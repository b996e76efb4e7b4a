#pragma once

#include <string>
#include <utility>
#include <vector>

namespace planckian {

enum class OutputFormat { Csv, Json };

/// Tabular result with ordered metadata. Numbers are rendered with %.12g so
/// identical inputs always produce byte-identical output.
class Dataset {
 public:
  struct Cell {
    bool is_number = true;
    double number = 0.0;
    std::string text;

    Cell(double v) : number(v) {}  // NOLINT(google-explicit-constructor)
    Cell(std::string v) : is_number(false), text(std::move(v)) {}  // NOLINT
    Cell(const char* v) : is_number(false), text(v) {}             // NOLINT
  };

  void add_meta(std::string key, std::string value);
  void add_meta(std::string key, double value);
  void set_columns(std::vector<std::string> names);
  void add_row(std::vector<Cell> cells);

  const std::vector<std::pair<std::string, std::string>>& meta() const { return meta_; }
  const std::vector<std::string>& columns() const { return columns_; }
  const std::vector<std::vector<Cell>>& rows() const { return rows_; }

  std::string to_csv() const;
  std::string to_json() const;

 private:
  std::vector<std::pair<std::string, std::string>> meta_;
  std::vector<std::string> columns_;
  std::vector<std::vector<Cell>> rows_;
};

/// %.12g rendering shared by both formats.
std::string format_number(double v);

/// Serializes to the chosen format and writes to `path`, or to stdout when
/// path is empty.
void write_dataset(const Dataset& ds, const std::string& path, OutputFormat format);

}  // namespace planckian
