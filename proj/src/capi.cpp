#include "spp/spp.h"

#include <exception>
#include <new>
#include <string>
#include <vector>

#include "spp/verification.hpp"

struct spp_media {
  spp::MediumSet media;
};

struct spp_mode {
  spp::ModeSolution sol;
};

struct spp_sweep {
  std::vector<spp::SweepRow> rows;
  std::optional<spp::GainCrossing> crossing;
};

struct spp_report {
  std::vector<spp::CheckResult> checks;
};

namespace {

thread_local std::string last_error;

spp_status status_of(spp::ErrorCode code) {
  switch (code) {
    case spp::ErrorCode::InvalidArgument: return SPP_INVALID_ARGUMENT;
    case spp::ErrorCode::NonConvergence: return SPP_NON_CONVERGENCE;
    case spp::ErrorCode::BranchViolation: return SPP_BRANCH_VIOLATION;
    case spp::ErrorCode::DispersionPole: return SPP_DISPERSION_POLE;
    case spp::ErrorCode::DegenerateResidue: return SPP_DEGENERATE_RESIDUE;
    case spp::ErrorCode::NeutralModeSingularity: return SPP_NEUTRAL_MODE_SINGULARITY;
    case spp::ErrorCode::QuadratureFailure: return SPP_QUADRATURE_FAILURE;
  }
  return SPP_INTERNAL_ERROR;
}

// Runs body, mapping every exception onto a status and the thread's message.
template <class F>
spp_status guarded(F&& body) {
  try {
    last_error.clear();
    body();
    return SPP_OK;
  } catch (const spp::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return SPP_INTERNAL_ERROR;
  } catch (const std::exception& e) {
    last_error = e.what();
    return SPP_INTERNAL_ERROR;
  } catch (...) {
    last_error = "unknown exception";
    return SPP_INTERNAL_ERROR;
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw spp::Error(spp::ErrorCode::InvalidArgument, what);
}

spp::Complex to_cpp(spp_complex c) { return {c.re, c.im}; }
spp_complex to_c(spp::Complex c) { return {c.real(), c.imag()}; }

spp::Parity to_cpp(spp_parity p) {
  require(p == SPP_ANTISYMMETRIC || p == SPP_SYMMETRIC, "unknown parity");
  return p == SPP_SYMMETRIC ? spp::Parity::Symmetric : spp::Parity::Antisymmetric;
}

spp_parity to_c(spp::Parity p) {
  return p == spp::Parity::Symmetric ? SPP_SYMMETRIC : SPP_ANTISYMMETRIC;
}

spp_regime to_c(spp::Regime r) {
  switch (r) {
    case spp::Regime::Amplified: return SPP_AMPLIFIED;
    case spp::Regime::Attenuated: return SPP_ATTENUATED;
    case spp::Regime::Neutral: return SPP_NEUTRAL;
  }
  return SPP_NEUTRAL;
}

spp::MetalModel to_cpp(const spp_metal& m) {
  if (m.kind == SPP_METAL_DRUDE) return spp::DrudeMetalSpec{m.omega_p, m.gamma};
  require(m.kind == SPP_METAL_DIRECT, "unknown metal kind");
  return to_cpp(m.eps);
}

spp::DielectricSpec to_cpp(const spp_dielectric& d) { return {d.n_real, d.n_imag}; }

spp::SolveOptions to_cpp(const spp_solve_options* o) {
  if (!o) return {};
  return {o->tolerance, o->max_iterations};
}

std::vector<spp::Parity> parity_list(const spp_parity* parities, size_t n) {
  require(parities != nullptr && n > 0, "at least one parity is required");
  std::vector<spp::Parity> out;
  for (size_t i = 0; i < n; ++i) out.push_back(to_cpp(parities[i]));
  return out;
}

spp::SppState to_cpp(const spp_state& s) { return {s.alpha_mag, s.theta, s.xi_mag, s.theta_xi}; }

spp::SqueezeForm squeeze(int textbook) {
  return textbook ? spp::SqueezeForm::Textbook : spp::SqueezeForm::AsPrinted;
}

}  // namespace

extern "C" {

spp_metal spp_default_metal(void) {
  const spp::DrudeMetalSpec drude;
  return {SPP_METAL_DRUDE, drude.omega_p, drude.gamma, {0.0, 0.0}};
}

spp_solve_options spp_default_solve_options(void) {
  const spp::SolveOptions o;
  return {o.tolerance, o.max_iterations};
}

const char* spp_status_string(spp_status status) {
  switch (status) {
    case SPP_OK: return "OK";
    case SPP_INVALID_ARGUMENT: return "InvalidArgument";
    case SPP_NON_CONVERGENCE: return "NonConvergence";
    case SPP_BRANCH_VIOLATION: return "BranchViolation";
    case SPP_DISPERSION_POLE: return "DispersionPole";
    case SPP_DEGENERATE_RESIDUE: return "DegenerateResidue";
    case SPP_NEUTRAL_MODE_SINGULARITY: return "NeutralModeSingularity";
    case SPP_QUADRATURE_FAILURE: return "QuadratureFailure";
    case SPP_INTERNAL_ERROR: return "InternalError";
  }
  return "Unknown";
}

const char* spp_last_error_message(void) { return last_error.c_str(); }

spp_status spp_eps_dielectric(const spp_dielectric* dielectric, spp_complex* eps) {
  return guarded([&] {
    require(dielectric && eps, "null argument");
    *eps = to_c(spp::eps_dielectric(to_cpp(*dielectric)));
  });
}

spp_status spp_eps_metal(const spp_metal* metal, double omega, spp_complex* eps) {
  return guarded([&] {
    require(metal && eps, "null argument");
    *eps = to_c(spp::eps_metal(to_cpp(*metal), omega));
  });
}

spp_medium_class spp_classify_medium(spp_complex eps) {
  switch (spp::classify_medium(to_cpp(eps))) {
    case spp::MediumClass::Gain: return SPP_GAIN;
    case spp::MediumClass::Loss: return SPP_LOSS;
    case spp::MediumClass::Neutral: return SPP_LOSSLESS;
  }
  return SPP_LOSSLESS;
}

spp_status spp_media_create(const spp_dielectric* dielectric, const spp_metal* metal,
                            double omega, spp_media** out) {
  return guarded([&] {
    if (out) *out = nullptr;
    require(dielectric && metal && out, "null argument");
    *out = new spp_media{spp::make_media(to_cpp(*dielectric), to_cpp(*metal), omega)};
  });
}

void spp_media_destroy(spp_media* media) { delete media; }

spp_status spp_media_get(const spp_media* media, spp_complex* eps_d, spp_complex* eps_m,
                         double* omega) {
  return guarded([&] {
    require(media != nullptr, "null media");
    if (eps_d) *eps_d = to_c(media->media.eps_d);
    if (eps_m) *eps_m = to_c(media->media.eps_m);
    if (omega) *omega = media->media.omega;
  });
}

spp_status spp_single_interface_root(const spp_media* media, spp_complex* k) {
  return guarded([&] {
    require(media && k, "null argument");
    *k = to_c(spp::single_interface_root(media->media));
  });
}

spp_status spp_mode_solve(const spp_media* media, spp_parity parity, double d,
                          const spp_complex* guess, const spp_solve_options* options,
                          spp_mode** out) {
  return guarded([&] {
    if (out) *out = nullptr;
    require(media && out, "null argument");
    std::optional<spp::Complex> seed;
    if (guess) seed = to_cpp(*guess);
    auto sol = spp::solve_dispersion(to_cpp(parity), spp::SlabGeometry{d}, media->media, seed,
                                     to_cpp(options));
    *out = new spp_mode{std::move(sol)};
  });
}

void spp_mode_destroy(spp_mode* mode) { delete mode; }

spp_status spp_mode_get_info(const spp_mode* mode, spp_mode_info* info) {
  return guarded([&] {
    require(mode && info, "null argument");
    const auto& s = mode->sol;
    info->parity = to_c(s.parity);
    info->omega = s.omega;
    info->d = s.geom.d;
    info->k_spp = to_c(s.k_spp);
    info->nu0 = to_c(s.nu0);
    info->num = to_c(s.num);
    info->amplitude_A = to_c(s.amplitude_A);
    info->residual = s.residual;
    info->iterations = s.iterations;
    info->regime = to_c(spp::classify_mode(s));
    info->eps_d = to_c(s.media.eps_d);
    info->eps_m = to_c(s.media.eps_m);
  });
}

spp_status spp_mode_profile(const spp_mode* mode, double x, double z, spp_complex out[2]) {
  return guarded([&] {
    require(mode && out, "null argument");
    const auto v = spp::mode_profile(mode->sol, x, z);
    out[0] = to_c(v[0]);
    out[1] = to_c(v[1]);
  });
}

spp_status spp_mode_normalization(const spp_mode* mode, int printed_form, spp_complex* n_prime,
                                  spp_complex* lambda_n) {
  return guarded([&] {
    require(mode != nullptr, "null mode");
    const auto n = spp::normalization(mode->sol, printed_form ? spp::NormalizationForm::AsPrinted
                                                              : spp::NormalizationForm::Integral);
    if (n_prime) *n_prime = to_c(n.N_prime);
    if (lambda_n) *lambda_n = to_c(n.lambda_n);
  });
}

spp_status spp_mode_green_coefficient(const spp_mode* mode, spp_complex* D) {
  return guarded([&] {
    require(mode && D, "null argument");
    *D = to_c(spp::green_coefficient(mode->sol).D);
  });
}

spp_status spp_mode_green_tensor(const spp_mode* mode, double x, double z, double x_prime,
                                 double z_prime, spp_complex out[4]) {
  return guarded([&] {
    require(mode && out, "null argument");
    const auto g = spp::green_tensor(mode->sol, x, z, x_prime, z_prime);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) out[2 * i + j] = to_c(g[i][j]);
  });
}

spp_status spp_mode_quant_coefficients(const spp_mode* mode, int printed_gamma_labels,
                                       spp_quant* out) {
  return guarded([&] {
    require(mode && out, "null argument");
    const auto q = spp::quant_coefficients(
        mode->sol, printed_gamma_labels ? spp::GammaLabels::AsPrinted : spp::GammaLabels::Corrected);
    *out = {q.alpha_d, q.alpha_m, q.beta_prime, q.gamma_prime, q.ccr_ratio, q.vacuous ? 1 : 0};
  });
}

spp_status spp_mode_green_identity(const spp_mode* mode, double* deviation, int* vacuous) {
  return guarded([&] {
    require(mode != nullptr, "null mode");
    const auto g = spp::green_identity_check(mode->sol);
    if (deviation) *deviation = g.deviation;
    if (vacuous) *vacuous = g.vacuous ? 1 : 0;
  });
}

spp_status spp_mode_commutator(const spp_mode* mode, spp_commutator_kind kind, double x,
                               double x_prime, int from_noise, spp_complex* out) {
  return guarded([&] {
    require(mode && out, "null argument");
    require(kind == SPP_SAME_DIRECTION || kind == SPP_CROSS_DIRECTION, "unknown commutator kind");
    const auto k = kind == SPP_SAME_DIRECTION ? spp::CommutatorKind::SameDirection
                                              : spp::CommutatorKind::CrossDirection;
    *out = to_c(from_noise ? spp::commutator_from_noise(k, x, x_prime, mode->sol)
                           : spp::commutator(k, x, x_prime, mode->sol));
  });
}

spp_status spp_ladder_mean(const spp_state* state, int textbook_squeeze, spp_complex* out) {
  return guarded([&] {
    require(state && out, "null argument");
    *out = to_c(spp::ladder_mean(to_cpp(*state), squeeze(textbook_squeeze)));
  });
}

spp_status spp_mode_h_bracket(const spp_mode* mode, double z, spp_complex* out) {
  return guarded([&] {
    require(mode && out, "null argument");
    *out = to_c(spp::h_field_bracket(mode->sol, z));
  });
}

spp_status spp_mode_h_prefactor(const spp_mode* mode, spp_complex* out) {
  return guarded([&] {
    require(mode && out, "null argument");
    *out = to_c(spp::h_field_prefactor(mode->sol));
  });
}

spp_status spp_mode_h_field(const spp_mode* mode, const spp_state* a, const spp_state* b,
                            int textbook_squeeze, const double* x, const double* z, size_t n,
                            spp_complex* out) {
  return guarded([&] {
    require(mode && a, "null argument");
    require(n == 0 || (x && z && out), "null sample arrays");
    std::vector<spp::GridPoint> grid(n);
    for (size_t i = 0; i < n; ++i) grid[i] = {x[i], z[i]};
    const auto form = squeeze(textbook_squeeze);
    const auto samples = b ? spp::compare_states(mode->sol, to_cpp(*a), to_cpp(*b), grid, form)
                           : spp::h_field_mean(mode->sol, to_cpp(*a), grid, form);
    for (size_t i = 0; i < n; ++i) out[i] = to_c(samples.values[i]);
  });
}

namespace {

spp_sweep* wrap(std::vector<spp::SweepRow> rows, std::optional<spp::GainCrossing> crossing) {
  return new spp_sweep{std::move(rows), crossing};
}

}  // namespace

spp_status spp_dispersion_sweep(const spp_dielectric* dielectric, const spp_metal* metal, double d,
                                const spp_parity* parities, size_t n_parities, const double* omega,
                                size_t n_omega, const spp_solve_options* options,
                                spp_sweep** out) {
  return guarded([&] {
    if (out) *out = nullptr;
    require(dielectric && metal && out, "null argument");
    require(omega && n_omega > 0, "omega grid is empty");
    const auto ps = parity_list(parities, n_parities);
    auto rows = spp::dispersion_sweep(ps, spp::SlabGeometry{d}, to_cpp(*metal), to_cpp(*dielectric),
                                      std::span<const double>(omega, n_omega), to_cpp(options));
    *out = wrap(std::move(rows), std::nullopt);
  });
}

spp_status spp_gain_sweep(const spp_metal* metal, double n_real, double d,
                          const spp_parity* parities, size_t n_parities, const double* kappa,
                          size_t n_kappa, double omega, const spp_solve_options* options,
                          spp_sweep** out) {
  return guarded([&] {
    if (out) *out = nullptr;
    require(metal && out, "null argument");
    require(kappa && n_kappa > 0, "kappa grid is empty");
    const auto ps = parity_list(parities, n_parities);
    auto result = spp::gain_sweep(ps, spp::SlabGeometry{d}, to_cpp(*metal), n_real,
                                  std::span<const double>(kappa, n_kappa), omega, to_cpp(options));
    *out = wrap(std::move(result.rows), result.crossing);
  });
}

size_t spp_sweep_size(const spp_sweep* sweep) { return sweep ? sweep->rows.size() : 0; }

spp_status spp_sweep_row_at(const spp_sweep* sweep, size_t i, spp_sweep_row* row) {
  return guarded([&] {
    require(sweep && row, "null argument");
    require(i < sweep->rows.size(), "row index out of range");
    const auto& r = sweep->rows[i];
    *row = {};
    row->omega = r.omega;
    row->kappa = r.kappa;
    row->parity = to_c(r.parity);
    row->status = r.error ? status_of(*r.error) : SPP_OK;
    if (r.solution) {
      row->k_spp = to_c(r.solution->k_spp);
      row->nu0 = to_c(r.solution->nu0);
      row->num = to_c(r.solution->num);
      row->residual = r.solution->residual;
      row->iterations = r.solution->iterations;
      row->regime = to_c(spp::classify_mode(*r.solution));
    } else {
      row->regime = SPP_NEUTRAL;
    }
  });
}

const char* spp_sweep_row_message(const spp_sweep* sweep, size_t i) {
  if (!sweep || i >= sweep->rows.size()) return "";
  return sweep->rows[i].message.c_str();
}

int spp_sweep_crossing(const spp_sweep* sweep, double* kappa, double* im_k) {
  if (!sweep || !sweep->crossing) return 0;
  if (kappa) *kappa = sweep->crossing->kappa;
  if (im_k) *im_k = sweep->crossing->im_k;
  return 1;
}

void spp_sweep_destroy(spp_sweep* sweep) { delete sweep; }

spp_verify_options spp_default_verify_options(void) {
  const spp::VerifyOptions o;
  return {0, o.commutator_pairs, o.seed, o.curl_depths, spp_default_solve_options()};
}

spp_status spp_verify(const spp_dielectric* dielectric, const spp_metal* metal, double d,
                      double omega, const spp_parity* parities, size_t n_parities,
                      const spp_verify_options* options, spp_report** out) {
  return guarded([&] {
    if (out) *out = nullptr;
    require(dielectric && metal && out, "null argument");
    spp::VerifyOptions o;
    if (options) {
      o.gamma_labels =
          options->printed_gamma_labels ? spp::GammaLabels::AsPrinted : spp::GammaLabels::Corrected;
      o.commutator_pairs = options->commutator_pairs;
      o.seed = options->seed;
      o.curl_depths = options->curl_depths;
      o.solve = to_cpp(&options->solve);
    }
    const auto ps = parity_list(parities, n_parities);
    auto checks =
        spp::run_verification(ps, spp::SlabGeometry{d}, to_cpp(*dielectric), to_cpp(*metal), omega, o);
    *out = new spp_report{std::move(checks)};
  });
}

size_t spp_report_size(const spp_report* report) { return report ? report->checks.size() : 0; }

spp_status spp_report_check(const spp_report* report, size_t i, spp_check* out) {
  return guarded([&] {
    require(report && out, "null argument");
    require(i < report->checks.size(), "check index out of range");
    const auto& c = report->checks[i];
    *out = {c.name.c_str(), to_c(c.parity), c.omega,          c.value,
            c.tolerance,    c.pass ? 1 : 0, c.note.c_str()};
  });
}

void spp_report_destroy(spp_report* report) { delete report; }

}  // extern "C"
