#pragma once

#include "spp/modes.hpp"

namespace spp {

/// Noise-current amplitudes of the cladding (d) and film (m) regions.
///
/// alpha_* are the magnitudes 2 hbar omega^2 eps0 |Im eps|. The weight_*
/// members carry the sign of Im eps: in an amplifying region the noise
/// operator enters as a creation operator, so its contribution to the ladder
/// commutators is negative. All coefficients below use the signed weights.
struct NoiseAmplitudes {
  double alpha_d = 0.0;
  double alpha_m = 0.0;
  double weight_d = 0.0;
  double weight_m = 0.0;
};

NoiseAmplitudes noise_amplitudes(const MediumSet& media);

/// Normalization of the ladder operators: the noise-weighted integral of
/// |bracket(z)|^2 over both claddings and the film.
double beta_prime(const ModeSolution& sol, const NoiseAmplitudes& amplitudes);
double beta_prime(const ModeSolution& sol);

enum class GammaLabels {
  // Cladding term weighted by Im eps_d, film term by Im eps_m.
  Corrected,
  // Assignment with the two permittivities interchanged.
  AsPrinted,
};

/// Im-eps-weighted integral of |bracket(z)|^2, the z-part of the Green
/// identity for this mode.
double gamma_prime(const ModeSolution& sol, GammaLabels labels = GammaLabels::Corrected);

struct QuantCoefficients {
  double alpha_d = 0.0;
  double alpha_m = 0.0;
  double beta_prime = 0.0;
  double gamma_prime = 0.0;
  double ccr_ratio = 0.0;  // beta' / (2 hbar eps0 omega^2 gamma')
  bool vacuous = false;    // beta' = gamma' = 0 (lossless media)
};

QuantCoefficients quant_coefficients(const ModeSolution& sol,
                                     GammaLabels labels = GammaLabels::Corrected);

struct CcrCheck {
  double ratio = 0.0;
  bool vacuous = false;
};

/// beta' / (2 hbar eps0 omega^2 gamma'); the canonical commutator closes iff
/// this is 1. Lossless media give 0/0 and are flagged vacuous.
CcrCheck ccr_check(const ModeSolution& sol, GammaLabels labels = GammaLabels::Corrected);

struct GreenIdentityCheck {
  double deviation = 0.0;  // ||lhs - rhs||_F / ||rhs||_F
  bool vacuous = false;    // no absorption or gain anywhere
  Tensor2 lhs{};
  Tensor2 rhs{};
};

/// Compares the quadrature of Im eps(s) G(r, s) G*(s, r') over the z-line
/// (x-integral done analytically) against its closed form in gamma' and D.
GreenIdentityCheck green_identity_check(const ModeSolution& sol, double x, double z,
                                        double x_prime, double z_prime);

/// Largest deviation over a fixed set of point pairs that covers the three
/// regions and both interfaces.
GreenIdentityCheck green_identity_check(const ModeSolution& sol);

/// x-integral of e^{ik|x - s|} e^{-ik*|s - x'|} over the real line, as a
/// function of u = |x - x'|. Converges for Im k > 0; for amplifying modes the
/// same expression is its analytic continuation.
Complex transverse_overlap(Complex k, double u);

enum class CommutatorKind {
  SameDirection,   // [a_R(x), a_R^dagger(x')]
  CrossDirection,  // [a_R(x), a_L^dagger(x')]
};

/// Closed-form ladder commutators with the delta(omega - omega') stripped.
Complex commutator(CommutatorKind kind, double x, double x_prime, const ModeSolution& sol);

/// The same commutators built from the noise-current definition of the
/// ladder operators: the z'-integral and the x'-integral are evaluated by
/// quadrature. For the same-direction kernel the x'-range below the
/// quadrature window is added as the closed-form exponential tail.
Complex commutator_from_noise(CommutatorKind kind, double x, double x_prime,
                              const ModeSolution& sol);

}  // namespace spp
