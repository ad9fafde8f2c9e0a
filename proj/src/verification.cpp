#include "spp/verification.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "spp/quadrature.hpp"

namespace spp {

namespace {

constexpr Complex I{0.0, 1.0};

// Tolerances of the verify report; the acceptance suite pins its own.
constexpr double kCcrTol = 1e-12;
constexpr double kCommutatorTol = 1e-6;
constexpr double kGreenTol = 1e-6;
constexpr double kQuadratureTol = 1e-8;
constexpr double kCurlTol = 1e-6;
constexpr double kThickFilmTol = 1e-9;
constexpr double kThickFilmD = 2e-6;

quadrature::Integrand weighted_norm(const ModeSolution& sol, double in_cladding, double in_film) {
  const ModeProfile profile(sol);
  const double d = sol.geom.d;
  return [profile, d, in_cladding, in_film](double s) {
    const Vec2 b = profile.bracket(s);
    const double w = (s < 0.0 || s > d) ? in_cladding : in_film;
    return Complex(w * (std::norm(b[0]) + std::norm(b[1])), 0.0);
  };
}

double relative(Complex got, Complex want) {
  const double scale = std::abs(want);
  return scale > 0.0 ? std::abs(got - want) / scale : std::abs(got - want);
}

}  // namespace

Complex normalization_by_quadrature(const ModeSolution& sol) {
  const ModeProfile profile(sol);
  const double d = sol.geom.d;
  const Complex eps_d = sol.media.eps_d;
  const Complex eps_m = sol.media.eps_m;
  const quadrature::Integrand f = [&](double s) {
    const Vec2 b = profile.bracket(s);
    const Complex eps = (s < 0.0 || s > d) ? eps_d : eps_m;
    return eps * (std::norm(b[0]) + std::norm(b[1]));
  };
  return quadrature::integrate_cross_section(f, d, 2.0 * sol.nu0.real());
}

double beta_prime_by_quadrature(const ModeSolution& sol) {
  const auto amps = noise_amplitudes(sol.media);
  const auto f = weighted_norm(sol, amps.weight_d, amps.weight_m);
  return quadrature::integrate_cross_section(f, sol.geom.d, 2.0 * sol.nu0.real()).real();
}

double curl_deviation(const ModeSolution& sol, double x, double z, double step) {
  const ModeProfile profile(sol);
  const Vec2 zp = profile(x, z + step);
  const Vec2 zm = profile(x, z - step);
  const Vec2 xp = profile(x + step, z);
  const Vec2 xm = profile(x - step, z);
  const Complex dax_dz = (zp[0] - zm[0]) / (2.0 * step);
  const Complex daz_dx = (xp[1] - xm[1]) / (2.0 * step);
  const Complex numeric = dax_dz - daz_dx;
  const Complex analytic = h_field_bracket(sol, z) * std::exp(I * sol.k_spp * x);
  return relative(numeric, analytic);
}

std::vector<double> sample_depths(const ModeSolution& sol, std::size_t per_region) {
  // Stay 2% of the region (or decay length) away from each face so that the
  // central stencil never straddles an interface.
  const double d = sol.geom.d;
  const double reach = 3.0 / sol.nu0.real();
  std::vector<double> out;
  out.reserve(3 * per_region);
  const auto spread = [&](double lo, double hi) {
    const double pad = 0.02 * (hi - lo);
    for (std::size_t i = 0; i < per_region; ++i) {
      const double t = per_region > 1 ? double(i) / double(per_region - 1) : 0.5;
      out.push_back(lo + pad + t * (hi - lo - 2.0 * pad));
    }
  };
  spread(-reach, 0.0);
  spread(0.0, d);
  spread(d, d + reach);
  return out;
}

namespace {

CheckResult make(std::string name, const ModeSolution& sol, double value, double tol,
                 std::string note = {}) {
  CheckResult r;
  r.name = std::move(name);
  r.parity = sol.parity;
  r.omega = sol.omega;
  r.value = value;
  r.tolerance = tol;
  r.pass = std::isfinite(value) && value <= tol;
  r.note = std::move(note);
  return r;
}

CheckResult vacuous(std::string name, const ModeSolution& sol, double tol) {
  auto r = make(std::move(name), sol, 0.0, tol, "vacuous: no absorption or gain");
  r.pass = true;
  return r;
}

CheckResult commutator_check(CommutatorKind kind, const ModeSolution& sol,
                             const VerifyOptions& options) {
  const char* name = kind == CommutatorKind::SameDirection ? "commutator_same_direction"
                                                           : "commutator_cross_direction";
  if (sol.k_spp.imag() == 0.0 || beta_prime(sol) == 0.0) return vacuous(name, sol, kCommutatorTol);
  return make(name, sol, commutator_deviation(kind, sol, options.commutator_pairs, options.seed),
              kCommutatorTol);
}

}  // namespace

double commutator_deviation(CommutatorKind kind, const ModeSolution& sol, std::size_t pairs,
                            std::uint64_t seed) {
  const double ki = sol.k_spp.imag();
  const double kr = sol.k_spp.real();
  if (ki == 0.0) throw Error(ErrorCode::NeutralModeSingularity, "commutators need Im k != 0");
  std::mt19937_64 rng(seed + (kind == CommutatorKind::SameDirection ? 0 : 1));
  std::uniform_real_distribution<double> pos(0.0, 1.0 / std::abs(ki));
  double worst = 0.0;
  for (std::size_t i = 0; i < pairs; ++i) {
    double x = pos(rng);
    double xp = pos(rng);
    if (kind == CommutatorKind::CrossDirection && x < xp) std::swap(x, xp);
    const Complex closed = commutator(kind, x, xp, sol);
    const Complex built = commutator_from_noise(kind, x, xp, sol);
    // The cross kernel oscillates through zero; measure it against its envelope.
    const double u = std::abs(x - xp);
    const double envelope = kind == CommutatorKind::SameDirection
                                ? std::exp(-ki * u)
                                : std::abs(2.0 * ki / kr) * std::exp(-ki * u);
    worst = std::max(worst, std::abs(closed - built) / envelope);
  }
  return worst;
}

std::vector<CheckResult> run_verification(std::span<const Parity> parities,
                                          const SlabGeometry& geom, const DielectricSpec& dielectric,
                                          const MetalModel& metal, double omega,
                                          const VerifyOptions& options) {
  const MediumSet media = make_media(dielectric, metal, omega);
  std::vector<CheckResult> out;
  for (Parity parity : parities) {
    const ModeSolution sol = solve_dispersion(parity, geom, media, std::nullopt, options.solve);

    out.push_back(make("dispersion_residual", sol, sol.residual, 1e-10));

    const auto ccr = ccr_check(sol, options.gamma_labels);
    if (ccr.vacuous)
      out.push_back(vacuous("ccr_ratio", sol, kCcrTol));
    else
      out.push_back(make("ccr_ratio", sol, std::abs(ccr.ratio - 1.0), kCcrTol,
                         options.gamma_labels == GammaLabels::AsPrinted ? "swapped gamma' labels"
                                                                        : ""));

    out.push_back(commutator_check(CommutatorKind::SameDirection, sol, options));
    out.push_back(commutator_check(CommutatorKind::CrossDirection, sol, options));

    const auto green = green_identity_check(sol);
    if (green.vacuous)
      out.push_back(vacuous("green_identity", sol, kGreenTol));
    else
      out.push_back(make("green_identity", sol, green.deviation, kGreenTol));

    out.push_back(make("normalization_quadrature", sol,
                       relative(normalization(sol).N_prime, normalization_by_quadrature(sol)),
                       kQuadratureTol));

    const double beta_quad = beta_prime_by_quadrature(sol);
    if (beta_quad == 0.0 && beta_prime(sol) == 0.0)
      out.push_back(vacuous("beta_prime_quadrature", sol, kQuadratureTol));
    else
      out.push_back(make("beta_prime_quadrature", sol,
                         relative(beta_prime(sol), beta_quad), kQuadratureTol));

    double curl = 0.0;
    for (double z : sample_depths(sol, options.curl_depths))
      curl = std::max(curl, curl_deviation(sol, 0.0, z));
    out.push_back(make("curl_consistency", sol, curl, kCurlTol));

    const ModeSolution thick =
        solve_dispersion(parity, SlabGeometry{kThickFilmD}, media, std::nullopt, options.solve);
    out.push_back(make("thick_film_limit", thick,
                       relative(thick.k_spp, single_interface_root(media)), kThickFilmTol,
                       "d = 2 um"));
  }
  return out;
}

}  // namespace spp
