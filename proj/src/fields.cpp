#include "spp/fields.hpp"

#include <cmath>

#include "spp/quantization.hpp"

namespace spp {

namespace {
constexpr Complex I{0.0, 1.0};
constexpr double kNeutralThreshold = 1e-20;
}  // namespace

void validate(const SppState& state) {
  const bool finite = std::isfinite(state.alpha_mag) && std::isfinite(state.theta) &&
                      std::isfinite(state.xi_mag) && std::isfinite(state.theta_xi);
  if (!finite || state.alpha_mag < 0.0 || state.xi_mag < 0.0)
    throw Error(ErrorCode::InvalidArgument, "state needs finite |alpha| >= 0 and |xi| >= 0");
}

Complex ladder_mean(const SppState& state, SqueezeForm form) {
  validate(state);
  const Complex alpha = state.alpha();
  if (state.xi_mag == 0.0) return alpha;
  const Complex paired = form == SqueezeForm::Textbook ? std::conj(alpha) : alpha;
  return state.mu() * alpha - state.nu() * paired;
}

Complex langevin_mean(const ModeSolution& sol, double x, Complex a0) {
  return std::exp(I * sol.k_spp * x) * a0;
}

Complex h_field_bracket(const ModeSolution& sol, double z) {
  const Complex k = sol.k_spp;
  const Complex k2 = k * k;
  const Complex nu0 = sol.nu0;
  const Complex num = sol.num;
  const double d = sol.geom.d;
  const double s = upper_sign(sol.parity);
  if (z < 0.0) return (nu0 - k2 / nu0) * std::exp(nu0 * z);
  if (z > d) return -s * (-nu0 + k2 / nu0) * std::exp(-nu0 * (z - d));
  return sol.amplitude_A * ((-num + k2 / num) * std::exp(-num * z) -
                            s * (num - k2 / num) * std::exp(num * (z - d)));
}

Complex h_field_prefactor(const ModeSolution& sol) {
  const double ki = sol.k_spp.imag();
  if (std::abs(ki) < kNeutralThreshold)
    throw Error(ErrorCode::NeutralModeSingularity,
                "field prefactor (beta'/2 k_I)^{1/2} is undefined for a neutral mode");
  const auto coeff = green_coefficient(sol);
  const double beta = beta_prime(sol);
  return I * coeff.D * std::sqrt(Complex(beta / (2.0 * ki), 0.0));
}

FieldSamples h_field_mean_from_ladder(const ModeSolution& sol, Complex ladder,
                                      std::span<const GridPoint> grid) {
  FieldSamples out;
  out.grid.assign(grid.begin(), grid.end());
  out.parity = sol.parity;
  out.omega = sol.omega;
  out.media = sol.media;
  out.geom = sol.geom;
  out.regime = classify_mode(sol);
  out.prefactor = h_field_prefactor(sol);
  out.ladder = ladder;
  out.values.reserve(grid.size());
  for (const auto& p : grid)
    out.values.push_back(out.prefactor * langevin_mean(sol, p.x, ladder) * h_field_bracket(sol, p.z));
  return out;
}

FieldSamples h_field_mean(const ModeSolution& sol, const SppState& state,
                          std::span<const GridPoint> grid, SqueezeForm form) {
  auto out = h_field_mean_from_ladder(sol, ladder_mean(state, form), grid);
  out.state = state;
  out.squeeze_form = form;
  return out;
}

FieldSamples compare_states(const ModeSolution& sol, const SppState& a, const SppState& b,
                            std::span<const GridPoint> grid, SqueezeForm form) {
  auto fa = h_field_mean(sol, a, grid, form);
  const auto fb = h_field_mean(sol, b, grid, form);
  for (std::size_t i = 0; i < fa.values.size(); ++i) fa.values[i] -= fb.values[i];
  fa.ladder -= fb.ladder;
  return fa;
}

std::vector<GridPoint> default_field_grid(const ModeSolution& sol, std::size_t count) {
  const double ki = std::abs(sol.k_spp.imag());
  if (ki < kNeutralThreshold)
    throw Error(ErrorCode::NeutralModeSingularity, "default grid length 5/|Im k| is undefined");
  if (count < 2) throw Error(ErrorCode::InvalidArgument, "field grid needs at least 2 samples");
  const double x_max = 5.0 / ki;
  std::vector<GridPoint> grid;
  grid.reserve(2 * count);
  for (double z : {0.0, sol.geom.d})
    for (std::size_t i = 0; i < count; ++i)
      grid.push_back({x_max * double(i) / double(count - 1), z});
  return grid;
}

}  // namespace spp
