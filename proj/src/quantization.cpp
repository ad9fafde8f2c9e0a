#include "spp/quantization.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "film_integrals.hpp"
#include "spp/quadrature.hpp"

namespace spp {

namespace {

constexpr Complex I{0.0, 1.0};

double noise_scale(double omega) {
  return 2.0 * constants::hbar * omega * omega * constants::eps0;
}

double frobenius(const Tensor2& t) {
  double s = 0.0;
  for (const auto& row : t)
    for (Complex v : row) s += std::norm(v);
  return std::sqrt(s);
}

}  // namespace

NoiseAmplitudes noise_amplitudes(const MediumSet& media) {
  const double scale = noise_scale(media.omega);
  NoiseAmplitudes out;
  out.weight_d = scale * media.eps_d.imag();
  out.weight_m = scale * media.eps_m.imag();
  out.alpha_d = std::abs(out.weight_d);
  out.alpha_m = std::abs(out.weight_m);
  return out;
}

double beta_prime(const ModeSolution& sol, const NoiseAmplitudes& amplitudes) {
  const auto w = film_integrals(sol);
  return amplitudes.weight_d * w.cladding + amplitudes.weight_m * w.film;
}

double beta_prime(const ModeSolution& sol) { return beta_prime(sol, noise_amplitudes(sol.media)); }

double gamma_prime(const ModeSolution& sol, GammaLabels labels) {
  const auto w = film_integrals(sol);
  const double im_d = sol.media.eps_d.imag();
  const double im_m = sol.media.eps_m.imag();
  if (labels == GammaLabels::AsPrinted) return im_m * w.cladding + im_d * w.film;
  return im_d * w.cladding + im_m * w.film;
}

QuantCoefficients quant_coefficients(const ModeSolution& sol, GammaLabels labels) {
  const auto amps = noise_amplitudes(sol.media);
  QuantCoefficients q;
  q.alpha_d = amps.alpha_d;
  q.alpha_m = amps.alpha_m;
  q.beta_prime = beta_prime(sol, amps);
  q.gamma_prime = gamma_prime(sol, labels);
  const auto ccr = ccr_check(sol, labels);
  q.ccr_ratio = ccr.ratio;
  q.vacuous = ccr.vacuous;
  return q;
}

CcrCheck ccr_check(const ModeSolution& sol, GammaLabels labels) {
  const double beta = beta_prime(sol);
  const double gamma = gamma_prime(sol, labels);
  if (beta == 0.0 && gamma == 0.0) return {1.0, true};
  return {beta / (noise_scale(sol.omega) * gamma), false};
}

Complex transverse_overlap(Complex k, double u) {
  // Pieces s < min(x, x'), between the points, and s > max(x, x').
  const double kr = k.real();
  const double ki = k.imag();
  const Complex forward = std::exp(I * k * u);
  const Complex backward = std::exp(-I * std::conj(k) * u);
  const Complex outer = (forward + backward) / (2.0 * ki);
  const Complex inner = (forward - backward) / (2.0 * I * kr);
  return outer + inner;
}

GreenIdentityCheck green_identity_check(const ModeSolution& sol, double x, double z,
                                        double x_prime, double z_prime) {
  GreenIdentityCheck out;
  const double gamma = gamma_prime(sol);
  const double im_d = sol.media.eps_d.imag();
  const double im_m = sol.media.eps_m.imag();
  if (im_d == 0.0 && im_m == 0.0) {
    out.vacuous = true;
    return out;
  }
  const Complex k = sol.k_spp;
  if (k.imag() == 0.0 || k.real() == 0.0)
    throw Error(ErrorCode::NeutralModeSingularity, "Green identity needs Im k != 0 and Re k != 0");

  const ModeProfile profile(sol);
  const double d = sol.geom.d;
  const quadrature::Integrand integrand = [&](double s) {
    const Vec2 b = profile.bracket(s);
    const double im = (s < 0.0 || s > d) ? im_d : im_m;
    return Complex(im * (std::norm(b[0]) + std::norm(b[1])), 0.0);
  };
  const Complex z_integral =
      quadrature::integrate_cross_section(integrand, d, 2.0 * sol.nu0.real());

  const auto coeff = green_coefficient(sol);
  const double u = std::abs(x - x_prime);
  const double d2 = std::norm(coeff.D);
  const Complex lhs_scalar = d2 * transverse_overlap(k, u) * z_integral;
  const Complex braces = std::exp(I * k * u) / k + std::exp(-I * std::conj(k) * u) / std::conj(k);
  const Complex rhs_scalar = std::norm(k) / (2.0 * k.real() * k.imag()) * gamma * d2 * braces;

  const Vec2 b = profile.bracket(z);
  const Vec2 bp = profile.bracket(z_prime);
  Tensor2 diff{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      const Complex outer = b[i] * std::conj(bp[j]);
      out.lhs[i][j] = lhs_scalar * outer;
      out.rhs[i][j] = rhs_scalar * outer;
      diff[i][j] = out.lhs[i][j] - out.rhs[i][j];
    }
  const double scale = frobenius(out.rhs);
  out.deviation = scale > 0.0 ? frobenius(diff) / scale : frobenius(diff);
  return out;
}

GreenIdentityCheck green_identity_check(const ModeSolution& sol) {
  const double d = sol.geom.d;
  const double reach = 1.0 / sol.nu0.real();
  const double lx = 1.0 / std::max(std::abs(sol.k_spp.imag()), 1e-3 * std::abs(sol.k_spp));
  const double pairs[][4] = {
      {0.0, 0.0, 0.0, 0.0},
      {0.3 * lx, -0.5 * reach, 0.0, 0.25 * d},
      {0.0, 0.5 * d, 0.7 * lx, d + 0.5 * reach},
      {1.1 * lx, d, 0.2 * lx, -reach},
      {0.0, 0.9 * d, 0.0, 0.1 * d},
  };
  GreenIdentityCheck worst;
  for (const auto& p : pairs) {
    auto check = green_identity_check(sol, p[0], p[1], p[2], p[3]);
    if (check.vacuous) return check;
    if (check.deviation >= worst.deviation) worst = check;
  }
  return worst;
}

Complex commutator(CommutatorKind kind, double x, double x_prime, const ModeSolution& sol) {
  const double kr = sol.k_spp.real();
  const double ki = sol.k_spp.imag();
  const double u = x - x_prime;
  if (kind == CommutatorKind::SameDirection)
    return std::exp(Complex(-ki * std::abs(u), kr * u));
  if (u <= 0.0) return {};
  return 2.0 * ki / kr * std::exp(-ki * u) * std::sin(kr * u);
}

Complex commutator_from_noise(CommutatorKind kind, double x, double x_prime,
                              const ModeSolution& sol) {
  const Complex k = sol.k_spp;
  const double ki = k.imag();
  if (ki == 0.0)
    throw Error(ErrorCode::NeutralModeSingularity,
                "ladder operators are undefined for a mode with Im k = 0");
  const double beta = beta_prime(sol);
  if (beta == 0.0)
    throw Error(ErrorCode::NeutralModeSingularity, "ladder operators need nonzero noise weight");

  // |(2 k_I / beta')^{1/2}|^2 from the two operator prefactors.
  const Complex pref = std::sqrt(Complex(2.0 * ki / beta, 0.0));
  const double pref2 = std::norm(pref);

  // z'-integral of the noise commutator contracted with the two brackets.
  const auto amps = noise_amplitudes(sol.media);
  const ModeProfile profile(sol);
  const double d = sol.geom.d;
  const quadrature::Integrand weight = [&](double s) {
    const Vec2 b = profile.bracket(s);
    const double w = (s < 0.0 || s > d) ? amps.weight_d : amps.weight_m;
    return Complex(w * (std::norm(b[0]) + std::norm(b[1])), 0.0);
  };
  const Complex z_part = quadrature::integrate_cross_section(weight, d, 2.0 * sol.nu0.real());

  Complex x_part;
  if (kind == CommutatorKind::SameDirection) {
    // Support of both operators: s <= min(x, x').
    const double top = std::min(x, x_prime);
    const double window = 4.0 / (2.0 * std::abs(ki));
    const quadrature::Integrand f = [&](double s) {
      return std::exp(I * k * (x - s)) * std::exp(-I * std::conj(k) * (x_prime - s));
    };
    const Complex tail = f(top - window) / (2.0 * ki);
    x_part = quadrature::integrate(f, top - window, top) + tail;
  } else {
    if (x <= x_prime) return {};
    const quadrature::Integrand f = [&](double s) {
      return std::exp(I * k * (x - s)) * std::exp(I * std::conj(k) * (x_prime - s));
    };
    // Split into pieces of about one oscillation so each stays well resolved.
    const double period = std::numbers::pi / std::abs(k.real());
    const int pieces = std::max(1, static_cast<int>(std::ceil((x - x_prime) / period)));
    const double h = (x - x_prime) / pieces;
    for (int p = 0; p < pieces; ++p)
      x_part += quadrature::integrate(f, x_prime + p * h, x_prime + (p + 1) * h);
  }
  return pref2 * z_part * x_part;
}

}  // namespace spp
