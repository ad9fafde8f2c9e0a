#pragma once

#include <span>
#include <vector>

#include "spp/modes.hpp"

namespace spp {

/// Coherent (xi_mag = 0) or squeezed-coherent state of the right-moving mode.
struct SppState {
  double alpha_mag = 0.0;  // |alpha|
  double theta = 0.0;      // arg alpha, rad
  double xi_mag = 0.0;     // |xi|
  double theta_xi = 0.0;   // arg xi, rad

  static SppState coherent(double alpha_mag, double theta) { return {alpha_mag, theta, 0.0, 0.0}; }

  Complex alpha() const { return std::polar(alpha_mag, theta); }
  double mu() const { return std::cosh(xi_mag); }
  Complex nu() const { return std::polar(std::sinh(xi_mag), theta_xi); }
};

void validate(const SppState& state);

enum class SqueezeForm {
  AsPrinted,  // mu alpha - nu alpha
  Textbook,   // mu alpha - nu alpha*
};

/// <a_R> for the state.
Complex ladder_mean(const SppState& state, SqueezeForm form = SqueezeForm::AsPrinted);

/// Mean of the Langevin solution launched with a0 at x = 0: e^{i k x} a0
/// (the noise force has zero mean).
Complex langevin_mean(const ModeSolution& sol, double x, Complex a0);

/// State-independent z-bracket of the magnetic field, equal to the
/// y-component of curl(bracket(z) e^{ikx}) at x = 0.
Complex h_field_bracket(const ModeSolution& sol, double z);

struct GridPoint {
  double x = 0.0;
  double z = 0.0;
};

struct FieldSamples {
  std::vector<GridPoint> grid;
  std::vector<Complex> values;  // <H_y^+>, up to the quantization prefactor's units
  Parity parity = Parity::Symmetric;
  double omega = 0.0;
  SppState state;
  SqueezeForm squeeze_form = SqueezeForm::AsPrinted;
  MediumSet media;
  SlabGeometry geom;
  Regime regime = Regime::Neutral;
  Complex prefactor;  // i D (beta' / 2 k_I)^{1/2}, principal root
  Complex ladder;     // <a_R> used for the samples
};

/// i D (beta' / 2 k_I)^{1/2}. Throws NeutralModeSingularity for |Im k| < 1e-20.
Complex h_field_prefactor(const ModeSolution& sol);

FieldSamples h_field_mean(const ModeSolution& sol, const SppState& state,
                          std::span<const GridPoint> grid,
                          SqueezeForm form = SqueezeForm::AsPrinted);

/// Same as h_field_mean with the ladder mean given directly.
FieldSamples h_field_mean_from_ladder(const ModeSolution& sol, Complex ladder,
                                      std::span<const GridPoint> grid);

/// Pointwise <H>_a - <H>_b on a shared grid.
FieldSamples compare_states(const ModeSolution& sol, const SppState& a, const SppState& b,
                            std::span<const GridPoint> grid,
                            SqueezeForm form = SqueezeForm::AsPrinted);

/// x in [0, 5/|Im k|] with `count` samples on each of the faces z = 0 and z = d.
std::vector<GridPoint> default_field_grid(const ModeSolution& sol, std::size_t count = 500);

}  // namespace spp
