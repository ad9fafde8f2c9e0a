#pragma once

#include <variant>

#include "spp/constants.hpp"

namespace spp {

/// Cladding dielectric given by its complex refractive index n_real + i n_imag.
/// Under the e^{-i omega t} convention a negative n_imag is optical gain.
struct DielectricSpec {
  double n_real = 1.0;
  double n_imag = 0.0;
};

/// Free-electron metal, eps = 1 - omega_p^2 / (omega^2 + i gamma omega).
struct DrudeMetalSpec {
  double omega_p = 14.02e15;  // rad/s
  double gamma = 6.25e13;     // rad/s
};

/// Either a Drude model or a fixed complex permittivity (for tabulated data
/// evaluated outside this library).
using MetalModel = std::variant<DrudeMetalSpec, Complex>;

/// Permittivities of the dielectric claddings (both sides share eps_d) and of
/// the metal film, at one angular frequency.
struct MediumSet {
  Complex eps_d;
  Complex eps_m;
  double omega = 0.0;  // rad/s

  /// Vacuum wavenumber omega / c.
  double k0() const noexcept { return omega / constants::c; }
};

enum class MediumClass { Gain, Loss, Neutral };

const char* to_string(MediumClass cls) noexcept;

void validate(const DielectricSpec& spec);
void validate(const DrudeMetalSpec& spec);
void validate(const MediumSet& media);

Complex eps_dielectric(const DielectricSpec& spec);
Complex eps_metal_drude(const DrudeMetalSpec& spec, double omega);
Complex eps_metal(const MetalModel& model, double omega);

MediumClass classify_medium(Complex eps) noexcept;

/// Validated MediumSet for a dielectric/metal pair at omega.
MediumSet make_media(const DielectricSpec& dielectric, const MetalModel& metal, double omega);

}  // namespace spp
