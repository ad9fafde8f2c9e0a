#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "spp/error.hpp"
#include "spp/media.hpp"

namespace spp {

/// Slab mode family. Antisymmetric takes the upper sign of the slab relations
/// (odd vector potential), Symmetric the lower sign (even).
enum class Parity { Antisymmetric, Symmetric };

inline constexpr Parity kBothParities[] = {Parity::Symmetric, Parity::Antisymmetric};

/// +1 for the upper sign (Antisymmetric), -1 for the lower sign (Symmetric).
constexpr int upper_sign(Parity p) noexcept { return p == Parity::Antisymmetric ? 1 : -1; }

const char* to_string(Parity p) noexcept;

/// Metal film of thickness d occupying 0 <= z <= d.
struct SlabGeometry {
  double d = 60e-9;  // m
};

/// Films thinner than this make A = (1 -/+ e^{-nu_m d})^{-1} singular.
inline constexpr double kMinThickness = 1e-10;

void validate(const SlabGeometry& geom);

struct DecayConstants {
  Complex nu0;  // cladding, 1/m
  Complex num;  // metal, 1/m
};

/// One converged root of the slab dispersion relation together with the
/// media and geometry it was solved for.
struct ModeSolution {
  Parity parity = Parity::Symmetric;
  double omega = 0.0;
  Complex k_spp;        // rad/m
  Complex nu0;          // 1/m
  Complex num;          // 1/m
  Complex amplitude_A;  // (1 -/+ e^{-nu_m d})^{-1}
  double residual = 0.0;  // |g(k_spp)| / (1 + |r|) for the pole-free scaled relation g
  int iterations = 0;
  MediumSet media;
  SlabGeometry geom;
};

struct SolveOptions {
  double tolerance = 1e-12;  // relative step size |dk|/|k| at convergence
  int max_iterations = 100;
};

enum class Regime { Amplified, Attenuated, Neutral };

const char* to_string(Regime r) noexcept;

/// Principal roots of k^2 - eps omega^2/c^2 with Re >= 0 (Im >= 0 on ties).
DecayConstants decay_constants(Complex k, const MediumSet& media);

/// f(k) = e^{nu_m d} +/- (r - 1)/(r + 1), r = eps_m nu0 / (eps_d nu_m), upper
/// sign for Antisymmetric. Throws DispersionPole where r = -1.
Complex dispersion_residual(Complex k, Parity parity, const SlabGeometry& geom,
                            const MediumSet& media);

/// Single-interface SPP wavenumber k0 sqrt(eps_m eps_d / (eps_m + eps_d)),
/// principal branch with Re k > 0.
Complex single_interface_root(const MediumSet& media);

ModeSolution solve_dispersion(Parity parity, const SlabGeometry& geom, const MediumSet& media,
                              std::optional<Complex> guess = std::nullopt,
                              const SolveOptions& options = {});

/// Sign of Im k_spp: negative grows along +x, positive decays.
Regime classify_mode(const ModeSolution& sol) noexcept;
Regime classify_wavenumber(Complex k) noexcept;

struct SweepRow {
  double omega = 0.0;
  double kappa = 0.0;  // dielectric n_imag for this row
  Parity parity = Parity::Symmetric;
  std::optional<ModeSolution> solution;
  std::optional<ErrorCode> error;
  std::string message;
};

/// Frequency sweep with continuation per parity. Rows are ordered by parity
/// (in the order given) and then by the grid.
std::vector<SweepRow> dispersion_sweep(std::span<const Parity> parities, const SlabGeometry& geom,
                                       const MetalModel& metal, const DielectricSpec& dielectric,
                                       std::span<const double> omega_grid,
                                       const SolveOptions& options = {});

struct GainCrossing {
  double kappa = 0.0;
  double im_k = 0.0;
};

struct GainSweepResult {
  std::vector<SweepRow> rows;  // ordered like dispersion_sweep
  std::optional<GainCrossing> crossing;
};

/// Sweep of the dielectric gain/loss index n_imag at fixed omega. When both
/// parities are present, also locates kappa* where Im k_sym = Im k_anti.
GainSweepResult gain_sweep(std::span<const Parity> parities, const SlabGeometry& geom,
                           const MetalModel& metal, double n_real,
                           std::span<const double> kappa_grid, double omega,
                           const SolveOptions& options = {});

}  // namespace spp
