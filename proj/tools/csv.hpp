#pragma once

#include <cstdio>
#include <fstream>
#include <string>

#include "ceit/errors.hpp"

namespace ceit::cli {

// CSV writer with fixed numeric formatting: 17 significant digits, so
// reruns on the same platform are byte-identical.
class CsvWriter {
 public:
  explicit CsvWriter(const std::string& path) : out_(path) {
    if (!out_) throw Error("cannot open output file " + path);
  }

  void header(const std::string& h) { out_ << h << "\n"; }

  CsvWriter& field(const std::string& s) {
    sep();
    out_ << s;
    return *this;
  }

  CsvWriter& field(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return field(std::string(buf));
  }

  CsvWriter& field(int v) { return field(std::to_string(v)); }

  void endrow() {
    out_ << "\n";
    first_ = true;
  }

 private:
  void sep() {
    if (!first_) out_ << ",";
    first_ = false;
  }

  std::ofstream out_;
  bool first_ = true;
};

}  // namespace ceit::cli
