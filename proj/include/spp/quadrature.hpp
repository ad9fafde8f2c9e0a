#pragma once

#include <functional>

#include "spp/constants.hpp"

namespace spp::quadrature {

struct Options {
  double rel_tol = 1e-13;
  unsigned max_depth = 25;
  // Estimated error above this fraction of the integral of |f| raises
  // QuadratureFailure.
  double fail_above = 1e-8;
};

using Integrand = std::function<Complex(double)>;

/// Adaptive Gauss-Kronrod (31-point) over [a, b]; converged when the error
/// estimate is below rel_tol times the integral of |f|.
Complex integrate(const Integrand& f, double a, double b, const Options& options = {});

/// Integral over the whole z-line split at the slab faces 0 and d. Each
/// cladding is integrated numerically over a window of a few decay lengths;
/// beyond it the integrand is a pure exponential decaying at `tail_rate`
/// (Re > 0) and its remainder is added in closed form.
Complex integrate_cross_section(const Integrand& f, double d, Complex tail_rate,
                                const Options& options = {});

}  // namespace spp::quadrature
