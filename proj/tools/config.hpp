#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ceit/params.hpp"
#include "ceit/qme.hpp"
#include "ceit/sweep.hpp"

namespace ceit::cli {

// Flat key=value run configuration. Unknown keys are rejected; missing keys
// take the documented defaults (kappa units).
struct RunConfig {
  SystemParams params;
  bool g_units = false;  // interpret omega/u0/delta_c as multiples of g

  bool engine_mfa = true;
  bool engine_qme = true;

  std::optional<double> range_lo, range_hi;
  std::optional<double> range2_lo, range2_hi;
  std::optional<int> resolution, resolution2;

  CutoffPolicy cutoff;
  int threads = 0;
  int qme_cell_budget = 4096;

  double tau_max = 50.0;
  int tau_points = 201;

  std::string out_dir = ".";

  // Effective params with the g-units convention applied.
  SystemParams effective_params() const {
    return g_units ? from_g_units(params) : params;
  }
};

// Throws ceit::InvalidParams on unknown keys or malformed values.
RunConfig load_config(const std::optional<std::string>& path,
                      const std::vector<std::string>& overrides);

void apply_key(RunConfig& cfg, const std::string& key, const std::string& value);

}  // namespace ceit::cli
