#pragma once

#include <cmath>

#include "spp/dispersion.hpp"

namespace spp {

// Integrals of |bracket(z)|^2 over the two claddings together and over the
// film. Real and nonnegative for every bound mode; the lossless limits
// (Re nu -> 0 in the film, Im nu_m -> 0 in the cross term) are exact.
struct FilmIntegrals {
  double cladding = 0.0;
  double film = 0.0;
};

inline FilmIntegrals film_integrals(const ModeSolution& sol) {
  const double d = sol.geom.d;
  const double s = upper_sign(sol.parity);
  const double k2 = std::norm(sol.k_spp);

  const double a0 = sol.nu0.real();
  const double cladding = (1.0 + k2 / std::norm(sol.nu0)) / a0;

  const double a = sol.num.real();
  const double b = sol.num.imag();
  const double q = k2 / std::norm(sol.num);
  // 2 (1 - e^{-(nu + nu*) d}) / (nu + nu*)
  const double diag = a != 0.0 ? -std::expm1(-2.0 * a * d) / a : 2.0 * d;
  // 2 (e^{-nu* d} - e^{-nu d}) / (nu - nu*) = 2 d e^{-a d} sin(b d) / (b d)
  const double bd = b * d;
  const double sinc = bd != 0.0 ? std::sin(bd) / bd : 1.0;
  const double cross = 2.0 * d * std::exp(-a * d) * sinc;
  const double film = std::norm(sol.amplitude_A) * ((1.0 + q) * diag - s * (1.0 - q) * cross);
  return {cladding, film};
}

}  // namespace spp
