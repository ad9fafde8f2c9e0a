#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "spp/fields.hpp"
#include "spp/quantization.hpp"

namespace spp {

/// eps-weighted integral of |bracket(z)|^2 by quadrature (the reference for
/// normalization()).
Complex normalization_by_quadrature(const ModeSolution& sol);

/// Noise-weighted integral of |bracket(z)|^2 by quadrature (the reference
/// for beta_prime()).
double beta_prime_by_quadrature(const ModeSolution& sol);

/// Relative difference between h_field_bracket(z) e^{ikx} and the central
/// finite-difference curl dA_x/dz - dA_z/dx of the mode profile at (x, z).
double curl_deviation(const ModeSolution& sol, double x, double z, double step = 1e-12);

/// `per_region` depths in each of the three regions, kept clear of the faces.
/// The claddings span three decay lengths.
std::vector<double> sample_depths(const ModeSolution& sol, std::size_t per_region);

/// Largest difference between the closed-form commutator and its noise-current
/// construction over `pairs` seeded pairs with x, x' in [0, 1/|Im k|], relative
/// to the kernel's envelope e^{-Im k |x - x'|} (times |2 Im k / Re k| for the
/// cross kernel, whose magnitude carries that factor).
double commutator_deviation(CommutatorKind kind, const ModeSolution& sol, std::size_t pairs,
                            std::uint64_t seed);

struct CheckResult {
  std::string name;
  Parity parity = Parity::Symmetric;
  double omega = 0.0;
  double value = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string note;
};

struct VerifyOptions {
  GammaLabels gamma_labels = GammaLabels::Corrected;
  std::size_t commutator_pairs = 10;
  std::uint64_t seed = 20240229;
  std::size_t curl_depths = 20;
  SolveOptions solve;
};

/// Runs the self-adjudicating checks for each parity at the given media:
/// CCR closure, commutator kernels against their noise-current construction,
/// the Green identity, normalization and beta' against quadrature, curl
/// consistency of the field bracket, and the thick-film limit.
std::vector<CheckResult> run_verification(std::span<const Parity> parities,
                                          const SlabGeometry& geom, const DielectricSpec& dielectric,
                                          const MetalModel& metal, double omega,
                                          const VerifyOptions& options = {});

}  // namespace spp
