// Copyright 2026 The hamshape Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HAMSHAPE_PLOT_HPP
#define HAMSHAPE_PLOT_HPP

#include <filesystem>
#include <string>
#include <vector>

namespace hamshape {

/// Decimal text for CSV cells, twelve significant digits.
std::string format_number(double v);

class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header);

  /// Row length must match the header.
  void add_row(std::vector<std::string> cells);
  const std::vector<std::string>& header() const { return header_; }
  const std::vector<std::vector<std::string>>& rows() const { return rows_; }

  std::string to_string() const;
  void write(const std::filesystem::path& path) const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

struct Series {
  std::string name;
  std::vector<double> x;
  std::vector<double> y;
  /// Optional shaded band; empty or the same length as x.
  std::vector<double> lower;
  std::vector<double> upper;
  bool dashed = false;
};

/// Static line chart with optional bands and logarithmic axes.
struct LineChart {
  std::string title;
  std::string x_label;
  std::string y_label;
  bool log_x = false;
  bool log_y = false;
  std::vector<Series> series;

  std::string to_svg() const;
  void write(const std::filesystem::path& path) const;
};

}  // namespace hamshape

#endif  // HAMSHAPE_PLOT_HPP
