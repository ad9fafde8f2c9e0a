#include "spp/media.hpp"

#include <cmath>
#include <string>

#include "spp/error.hpp"

namespace spp {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NonConvergence: return "NonConvergence";
    case ErrorCode::BranchViolation: return "BranchViolation";
    case ErrorCode::DispersionPole: return "DispersionPole";
    case ErrorCode::DegenerateResidue: return "DegenerateResidue";
    case ErrorCode::NeutralModeSingularity: return "NeutralModeSingularity";
    case ErrorCode::QuadratureFailure: return "QuadratureFailure";
  }
  return "Unknown";
}

const char* to_string(MediumClass cls) noexcept {
  switch (cls) {
    case MediumClass::Gain: return "Gain";
    case MediumClass::Loss: return "Loss";
    case MediumClass::Neutral: return "Neutral";
  }
  return "Unknown";
}

namespace {

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

void validate(const DielectricSpec& spec) {
  if (!(spec.n_real > 0.0) || !std::isfinite(spec.n_real) || !std::isfinite(spec.n_imag))
    throw Error(ErrorCode::InvalidArgument,
                "dielectric needs finite n_real > 0, got n_real=" + std::to_string(spec.n_real));
}

void validate(const DrudeMetalSpec& spec) {
  if (!(spec.omega_p > 0.0) || !std::isfinite(spec.omega_p))
    throw Error(ErrorCode::InvalidArgument, "Drude omega_p must be finite and > 0");
  if (!(spec.gamma >= 0.0) || !std::isfinite(spec.gamma))
    throw Error(ErrorCode::InvalidArgument, "Drude gamma must be finite and >= 0");
}

void validate(const MediumSet& media) {
  if (!finite(media.eps_d) || media.eps_d == Complex{})
    throw Error(ErrorCode::InvalidArgument, "eps_d must be finite and nonzero");
  if (!finite(media.eps_m) || media.eps_m == Complex{})
    throw Error(ErrorCode::InvalidArgument, "eps_m must be finite and nonzero");
  if (!(media.omega > 0.0) || !std::isfinite(media.omega))
    throw Error(ErrorCode::InvalidArgument, "omega must be finite and > 0");
}

Complex eps_dielectric(const DielectricSpec& spec) {
  validate(spec);
  const double re = spec.n_real * spec.n_real - spec.n_imag * spec.n_imag;
  const double im = 2.0 * spec.n_real * spec.n_imag;
  return {re, im};
}

Complex eps_metal_drude(const DrudeMetalSpec& spec, double omega) {
  validate(spec);
  if (!(omega > 0.0) || !std::isfinite(omega))
    throw Error(ErrorCode::InvalidArgument, "Drude permittivity needs omega > 0");
  const Complex denom{omega * omega, spec.gamma * omega};
  return 1.0 - spec.omega_p * spec.omega_p / denom;
}

Complex eps_metal(const MetalModel& model, double omega) {
  if (const auto* drude = std::get_if<DrudeMetalSpec>(&model))
    return eps_metal_drude(*drude, omega);
  return std::get<Complex>(model);
}

MediumClass classify_medium(Complex eps) noexcept {
  if (eps.imag() < 0.0) return MediumClass::Gain;
  if (eps.imag() > 0.0) return MediumClass::Loss;
  return MediumClass::Neutral;
}

MediumSet make_media(const DielectricSpec& dielectric, const MetalModel& metal, double omega) {
  MediumSet media{eps_dielectric(dielectric), eps_metal(metal, omega), omega};
  validate(media);
  return media;
}

}  // namespace spp
