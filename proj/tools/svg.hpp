#pragma once

#include <string>
#include <vector>

namespace ceit::cli {

struct SvgCurve {
  std::vector<double> x, y;
  std::string color = "#1f77b4";
  bool dashed = false;
};

// Best-effort presentation output; the CSV files are the data contract.
void write_line_plot(const std::string& path, const std::string& title,
                     const std::string& xlabel, const std::string& ylabel,
                     const std::vector<SvgCurve>& curves);

void write_heatmap(const std::string& path, const std::string& title,
                   const std::string& xlabel, const std::string& ylabel,
                   const std::vector<double>& xs, const std::vector<double>& ys,
                   const std::vector<double>& cells /* row-major iy*nx+ix */);

}  // namespace ceit::cli
