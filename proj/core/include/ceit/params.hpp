#pragma once

#include "ceit/errors.hpp"

namespace ceit {

// All rates and detunings are expressed in units of the cavity decay rate
// kappa, which is fixed at 1 internally. Defaults follow the operating point
// used throughout: g/kappa = 4, gamma/kappa = 0.047, Omega/g = 0.35,
// eta/kappa = 0.1.
struct SystemParams {
  double g = 4.0;         // atom-cavity coupling
  double kappa = 1.0;     // cavity decay rate (unit by convention)
  double gamma13 = 0.047; // |3> -> |1> decay rate
  double gamma23 = 0.047; // |3> -> |2> decay rate
  double omega = 1.4;     // control-field Rabi frequency
  double eta = 0.1;       // cavity drive amplitude
  double delta_c = 0.0;   // cavity-light detuning (any sign)
  double u0 = 0.0;        // optical Stark shift (any sign)

  void validate() const {
    if (g < 0.0) throw InvalidParams("SystemParams: g must be >= 0");
    if (kappa <= 0.0) throw InvalidParams("SystemParams: kappa must be > 0");
    if (gamma13 < 0.0) throw InvalidParams("SystemParams: gamma13 must be >= 0");
    if (gamma23 < 0.0) throw InvalidParams("SystemParams: gamma23 must be >= 0");
    if (omega < 0.0) throw InvalidParams("SystemParams: omega must be >= 0");
    if (eta < 0.0) throw InvalidParams("SystemParams: eta must be >= 0");
  }
};

// Convenience for inputs quoted relative to g instead of kappa:
// reinterprets omega, u0 and delta_c as multiples of g and rescales them to
// kappa units. g and eta are already in kappa units.
inline SystemParams from_g_units(SystemParams p) {
  p.omega *= p.g;
  p.u0 *= p.g;
  p.delta_c *= p.g;
  return p;
}

}  // namespace ceit
