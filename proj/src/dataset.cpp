#include "planckian/dataset.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>

#include <json.hpp>

#include "planckian/errors.hpp"

namespace planckian {

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

void Dataset::add_meta(std::string key, std::string value) {
  meta_.emplace_back(std::move(key), std::move(value));
}

void Dataset::add_meta(std::string key, double value) {
  meta_.emplace_back(std::move(key), format_number(value));
}

void Dataset::set_columns(std::vector<std::string> names) { columns_ = std::move(names); }

void Dataset::add_row(std::vector<Cell> cells) {
  if (cells.size() != columns_.size()) {
    throw DimError("Dataset: row width does not match column count");
  }
  rows_.push_back(std::move(cells));
}

std::string Dataset::to_csv() const {
  std::string out;
  for (const auto& [key, value] : meta_) {
    out += "# " + key + " = " + value + "\n";
  }
  for (size_t i = 0; i < columns_.size(); ++i) {
    out += (i ? "," : "") + columns_[i];
  }
  out += "\n";
  for (const auto& row : rows_) {
    for (size_t i = 0; i < row.size(); ++i) {
      if (i) out += ",";
      out += row[i].is_number ? format_number(row[i].number) : row[i].text;
    }
    out += "\n";
  }
  return out;
}

std::string Dataset::to_json() const {
  nlohmann::ordered_json j;
  nlohmann::ordered_json meta = nlohmann::ordered_json::object();
  for (const auto& [key, value] : meta_) meta[key] = value;
  j["meta"] = std::move(meta);
  j["columns"] = columns_;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : rows_) {
    nlohmann::ordered_json r = nlohmann::ordered_json::array();
    for (const auto& cell : row) {
      // Render numbers through the same %.12g path as CSV for determinism.
      if (cell.is_number) {
        r.push_back(nlohmann::ordered_json::parse(format_number(cell.number)));
      } else {
        r.push_back(cell.text);
      }
    }
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);
  return j.dump(2) + "\n";
}

void write_dataset(const Dataset& ds, const std::string& path, OutputFormat format) {
  const std::string body = format == OutputFormat::Csv ? ds.to_csv() : ds.to_json();
  if (path.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("write_dataset: cannot open " + path);
  out << body;
}

}  // namespace planckian
