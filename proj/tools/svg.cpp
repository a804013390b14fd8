#include "svg.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "ceit/errors.hpp"

namespace ceit::cli {

namespace {

constexpr int kWidth = 720;
constexpr int kHeight = 480;
constexpr int kMargin = 60;

struct Range {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  void add(double v) {
    if (!std::isfinite(v)) return;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  void pad() {
    if (lo > hi) { lo = 0.0; hi = 1.0; }
    if (hi == lo) { lo -= 0.5; hi += 0.5; }
  }
};

double map_x(double v, const Range& r) {
  return kMargin + (v - r.lo) / (r.hi - r.lo) * (kWidth - 2 * kMargin);
}
double map_y(double v, const Range& r) {
  return kHeight - kMargin - (v - r.lo) / (r.hi - r.lo) * (kHeight - 2 * kMargin);
}

void open_svg(std::ofstream& out, const std::string& title,
              const std::string& xlabel, const std::string& ylabel) {
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
      << "\" height=\"" << kHeight << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "<text x=\"" << kWidth / 2 << "\" y=\"24\" text-anchor=\"middle\" "
         "font-size=\"16\">" << title << "</text>\n"
      << "<text x=\"" << kWidth / 2 << "\" y=\"" << kHeight - 12
      << "\" text-anchor=\"middle\" font-size=\"13\">" << xlabel << "</text>\n"
      << "<text x=\"18\" y=\"" << kHeight / 2
      << "\" text-anchor=\"middle\" font-size=\"13\" transform=\"rotate(-90 18 "
      << kHeight / 2 << ")\">" << ylabel << "</text>\n";
}

void axes(std::ofstream& out, const Range& rx, const Range& ry) {
  out << "<rect x=\"" << kMargin << "\" y=\"" << kMargin << "\" width=\""
      << kWidth - 2 * kMargin << "\" height=\"" << kHeight - 2 * kMargin
      << "\" fill=\"none\" stroke=\"black\"/>\n";
  std::ostringstream lo_x, hi_x, lo_y, hi_y;
  lo_x << rx.lo; hi_x << rx.hi; lo_y << ry.lo; hi_y << ry.hi;
  out << "<text x=\"" << kMargin << "\" y=\"" << kHeight - kMargin + 18
      << "\" font-size=\"11\">" << lo_x.str() << "</text>\n"
      << "<text x=\"" << kWidth - kMargin << "\" y=\"" << kHeight - kMargin + 18
      << "\" text-anchor=\"end\" font-size=\"11\">" << hi_x.str() << "</text>\n"
      << "<text x=\"" << kMargin - 6 << "\" y=\"" << kHeight - kMargin
      << "\" text-anchor=\"end\" font-size=\"11\">" << lo_y.str() << "</text>\n"
      << "<text x=\"" << kMargin - 6 << "\" y=\"" << kMargin + 4
      << "\" text-anchor=\"end\" font-size=\"11\">" << hi_y.str() << "</text>\n";
}

}  // namespace

void write_line_plot(const std::string& path, const std::string& title,
                     const std::string& xlabel, const std::string& ylabel,
                     const std::vector<SvgCurve>& curves) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open output file " + path);

  Range rx, ry;
  for (const auto& c : curves) {
    for (double v : c.x) rx.add(v);
    for (double v : c.y) ry.add(v);
  }
  rx.pad();
  ry.pad();

  open_svg(out, title, xlabel, ylabel);
  axes(out, rx, ry);
  for (const auto& c : curves) {
    out << "<polyline fill=\"none\" stroke=\"" << c.color << "\"";
    if (c.dashed) out << " stroke-dasharray=\"5,4\"";
    out << " points=\"";
    for (std::size_t i = 0; i < c.x.size(); ++i) {
      if (!std::isfinite(c.y[i])) continue;
      out << map_x(c.x[i], rx) << "," << map_y(c.y[i], ry) << " ";
    }
    out << "\"/>\n";
  }
  out << "</svg>\n";
}

void write_heatmap(const std::string& path, const std::string& title,
                   const std::string& xlabel, const std::string& ylabel,
                   const std::vector<double>& xs, const std::vector<double>& ys,
                   const std::vector<double>& cells) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open output file " + path);

  Range rv;
  for (double v : cells) rv.add(v);
  rv.pad();

  Range rx, ry;
  for (double v : xs) rx.add(v);
  for (double v : ys) ry.add(v);
  rx.pad();
  ry.pad();

  open_svg(out, title, xlabel, ylabel);
  const std::size_t nx = xs.size(), ny = ys.size();
  const double cw = double(kWidth - 2 * kMargin) / nx;
  const double ch = double(kHeight - 2 * kMargin) / ny;
  for (std::size_t iy = 0; iy < ny; ++iy) {
    for (std::size_t ix = 0; ix < nx; ++ix) {
      const double v = cells[iy * nx + ix];
      double t = std::isfinite(v) ? (v - rv.lo) / (rv.hi - rv.lo) : 0.0;
      const int r = int(255 * t);
      const int b = int(255 * (1.0 - t));
      out << "<rect x=\"" << kMargin + ix * cw << "\" y=\""
          << kHeight - kMargin - (iy + 1) * ch << "\" width=\"" << cw + 0.5
          << "\" height=\"" << ch + 0.5 << "\" fill=\"rgb(" << r << ",64," << b
          << ")\"/>\n";
    }
  }
  axes(out, rx, ry);
  out << "</svg>\n";
}

}  // namespace ceit::cli
