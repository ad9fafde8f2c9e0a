#include "spp/modes.hpp"

#include <cmath>

#include "film_integrals.hpp"

namespace spp {

namespace {
constexpr Complex I{0.0, 1.0};
}

ModeProfile::ModeProfile(ModeSolution sol) : sol_(std::move(sol)) {}

Vec2 ModeProfile::bracket(double z) const {
  const Complex k = sol_.k_spp;
  const Complex nu0 = sol_.nu0;
  const Complex num = sol_.num;
  const double d = sol_.geom.d;
  const double s = upper_sign(sol_.parity);
  if (z < 0.0) {
    const Complex e = std::exp(nu0 * z);
    return {e, -I * (k / nu0) * e};
  }
  if (z > d) {
    const Complex e = -s * std::exp(-nu0 * (z - d));
    return {e, I * (k / nu0) * e};
  }
  const Complex a = std::exp(-num * z);
  const Complex b = std::exp(num * (z - d));
  const Complex A = sol_.amplitude_A;
  return {A * (a - s * b), A * I * (k / num) * (a + s * b)};
}

Vec2 ModeProfile::operator()(double x, double z) const {
  const Complex phase = std::exp(I * sol_.k_spp * x);
  auto v = bracket(z);
  v[0] *= phase;
  v[1] *= phase;
  return v;
}

Vec2 mode_profile(const ModeSolution& sol, double x, double z) { return ModeProfile(sol)(x, z); }

Normalization normalization(const ModeSolution& sol, NormalizationForm form) {
  const Complex k = sol.k_spp;
  const Complex nu0 = sol.nu0;
  const Complex num = sol.num;
  const double d = sol.geom.d;
  const double s = upper_sign(sol.parity);
  const double k0 = sol.media.k0();
  const Complex lambda = k0 * k0 - (k * k - num * num) / sol.media.eps_m;

  if (form == NormalizationForm::AsPrinted) {
    const Complex A = sol.amplitude_A;
    const Complex e = std::exp(-num * d);
    const Complex n = sol.media.eps_d / nu0 * (1.0 + k * k / (nu0 * nu0)) +
                      A * A * sol.media.eps_m / num * (1.0 + k * k / (num * num)) * (1.0 - e) -
                      s * 2.0 * d * (1.0 - k * k / (num * num)) * e;
    return {n, lambda};
  }

  const auto w = film_integrals(sol);
  return {sol.media.eps_d * w.cladding + sol.media.eps_m * w.film, lambda};
}

GreenCoefficient green_coefficient(const ModeSolution& sol) {
  return green_coefficient(sol, normalization(sol).N_prime);
}

GreenCoefficient green_coefficient(const ModeSolution& sol, Complex N_prime) {
  const Complex k = sol.k_spp;
  const Complex dnum = k / sol.num;
  const Complex denom = 2.0 * (-N_prime * (sol.num * dnum + k));
  if (!(std::abs(denom) >= 1e-30))
    throw Error(ErrorCode::DegenerateResidue, "residue denominator vanishes (coalescing roots)");
  return {sol.media.eps_m / denom, N_prime, dnum};
}

Tensor2 green_tensor(const ModeSolution& sol, double x, double z, double x_prime, double z_prime) {
  return green_tensor(sol, green_coefficient(sol), x, z, x_prime, z_prime);
}

Tensor2 green_tensor(const ModeSolution& sol, const GreenCoefficient& coeff, double x, double z,
                     double x_prime, double z_prime) {
  const ModeProfile profile(sol);
  const Vec2 b = profile.bracket(z);
  const Vec2 bp = profile.bracket(z_prime);
  const Complex pre = -I * coeff.D * std::exp(I * sol.k_spp * std::abs(x - x_prime));
  Tensor2 t{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) t[i][j] = pre * b[i] * bp[j];
  return t;
}

LinearizedDenominator linearized_denominator(const ModeSolution& sol, Complex k) {
  const Complex ks = sol.k_spp;
  const Complex dnu = ks / sol.num;
  const Complex nu_lin = sol.num + (k - ks) * dnu;
  const double k0 = sol.media.k0();
  const Complex direct = sol.media.eps_m * k0 * k0 - k * k + nu_lin * nu_lin;
  const Complex factorized =
      (k - ks) * (-(k + ks) + (k - ks) * dnu * dnu + 2.0 * sol.num * dnu);
  return {direct, factorized};
}

}  // namespace spp
