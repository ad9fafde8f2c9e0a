#pragma once

#include <array>

#include "spp/dispersion.hpp"

namespace spp {

/// (x, z) components of a vector in the plane of propagation.
using Vec2 = std::array<Complex, 2>;
/// 2x2 dyadic over (x, z); tensor[i][j] couples component i at r with j at r'.
using Tensor2 = std::array<std::array<Complex, 2>, 2>;

/// Vector-potential eigenmode of a converged slab root. The decay constants
/// are always the root-evaluated ones stored in the solution.
class ModeProfile {
 public:
  explicit ModeProfile(ModeSolution sol);

  /// z-dependent bracket of the mode (the e^{ikx} factor stripped). The
  /// slab expression is used on the closed interval [0, d].
  Vec2 bracket(double z) const;

  /// Full mode value bracket(z) e^{ikx}.
  Vec2 operator()(double x, double z) const;

  const ModeSolution& solution() const noexcept { return sol_; }

 private:
  ModeSolution sol_;
};

Vec2 mode_profile(const ModeSolution& sol, double x, double z);

enum class NormalizationForm {
  // Closed form of the eps-weighted integral of |mode|^2 over z (both
  // claddings and the film). Agrees with direct quadrature.
  Integral,
  // Alternative closed form, kept for comparison; it differs from the
  // integral in the film terms.
  AsPrinted,
};

struct Normalization {
  Complex N_prime;   // N_n / (2 pi), m^-1 scale
  Complex lambda_n;  // k0^2 - (k^2 - nu_m^2) / eps_m
};

Normalization normalization(const ModeSolution& sol,
                            NormalizationForm form = NormalizationForm::Integral);

struct GreenCoefficient {
  Complex D;
  Complex N_prime;
  Complex dnum_dk;
};

/// Residue prefactor D = eps_m / (2 {-N'(nu_m dnu_m/dk + k)}) at the root.
GreenCoefficient green_coefficient(const ModeSolution& sol);
GreenCoefficient green_coefficient(const ModeSolution& sol, Complex N_prime);

/// Pole contribution of the slab Green's tensor:
/// -i D e^{ik|x - x'|} bracket(z) (x) bracket(z').
Tensor2 green_tensor(const ModeSolution& sol, double x, double z, double x_prime, double z_prime);
Tensor2 green_tensor(const ModeSolution& sol, const GreenCoefficient& coeff, double x, double z,
                     double x_prime, double z_prime);

/// Denominator eps_m k0^2 - k^2 + nu_m(k)^2 with nu_m linearized about the
/// root, and its factorized form (k - k_s){-(k + k_s) + (k - k_s) nu'^2 +
/// 2 nu_s nu'}. Used to check the residue algebra near the pole.
struct LinearizedDenominator {
  Complex direct;
  Complex factorized;
};

LinearizedDenominator linearized_denominator(const ModeSolution& sol, Complex k);

}  // namespace spp
