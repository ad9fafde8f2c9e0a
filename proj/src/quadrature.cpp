#include "spp/quadrature.hpp"

#include <cmath>
#include <sstream>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "spp/error.hpp"

namespace spp::quadrature {

namespace {

using Rule = boost::math::quadrature::gauss_kronrod<double, 31>;

struct Panel {
  Complex value;
  double error = 0.0;
  double l1 = 0.0;
};

// One Kronrod panel. The rule is always evaluated on [-1, 1] and rescaled,
// since Boost's error and L1 outputs are in units of the reference interval.
Panel panel(const Integrand& f, double a, double b) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const auto unit = [&](double t) { return f(mid + half * t); };
  Panel p;
  p.value = half * Rule::integrate(unit, -1.0, 1.0, 0, 0.0, &p.error, &p.l1);
  p.error *= std::abs(half);
  p.l1 *= std::abs(half);
  return p;
}

// Bisection with the absolute budget split evenly between the halves.
Panel refine(const Integrand& f, double a, double b, const Panel& whole, double budget,
             unsigned depth) {
  if (whole.error <= budget || depth == 0) return whole;
  const double mid = 0.5 * (a + b);
  const Panel left = panel(f, a, mid);
  const Panel right = panel(f, mid, b);
  const Panel l = refine(f, a, mid, left, 0.5 * budget, depth - 1);
  const Panel r = refine(f, mid, b, right, 0.5 * budget, depth - 1);
  return {l.value + r.value, l.error + r.error, l.l1 + r.l1};
}

}  // namespace

Complex integrate(const Integrand& f, double a, double b, const Options& options) {
  if (a == b) return {};
  const Panel first = panel(f, a, b);
  const Panel p = refine(f, a, b, first, options.rel_tol * first.l1, options.max_depth);
  const bool finite = std::isfinite(p.value.real()) && std::isfinite(p.value.imag());
  if (!finite || p.error > options.fail_above * p.l1 + 1e-300) {
    std::ostringstream os;
    os << "quadrature on [" << a << ", " << b << "] did not converge (estimate " << p.value
       << ", error " << p.error << ")";
    throw Error(ErrorCode::QuadratureFailure, os.str());
  }
  return p.value;
}

Complex integrate_cross_section(const Integrand& f, double d, Complex tail_rate,
                                const Options& options) {
  if (!(tail_rate.real() > 0.0))
    throw Error(ErrorCode::QuadratureFailure, "cladding integrand does not decay");
  const double window = 6.0 / tail_rate.real();
  const Complex lower = integrate(f, -window, 0.0, options) + f(-window) / tail_rate;
  const Complex slab = integrate(f, 0.0, 0.5 * d, options) + integrate(f, 0.5 * d, d, options);
  const Complex upper = integrate(f, d, d + window, options) + f(d + window) / tail_rate;
  return lower + slab + upper;
}

}  // namespace spp::quadrature
