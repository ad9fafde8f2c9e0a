/* C interface to the slab SPP library. All handles are opaque; every
 * function returning spp_status leaves a message retrievable with
 * spp_last_error_message() on the calling thread when it fails. */
#ifndef SPP_SPP_H
#define SPP_SPP_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  ifdef SPP_BUILDING_LIBRARY
#    define SPP_API __declspec(dllexport)
#  else
#    define SPP_API __declspec(dllimport)
#  endif
#else
#  define SPP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum spp_status {
  SPP_OK = 0,
  SPP_INVALID_ARGUMENT = 1,
  SPP_NON_CONVERGENCE = 2,
  SPP_BRANCH_VIOLATION = 3,
  SPP_DISPERSION_POLE = 4,
  SPP_DEGENERATE_RESIDUE = 5,
  SPP_NEUTRAL_MODE_SINGULARITY = 6,
  SPP_QUADRATURE_FAILURE = 7,
  SPP_INTERNAL_ERROR = 8
} spp_status;

typedef struct spp_complex {
  double re;
  double im;
} spp_complex;

typedef enum spp_parity { SPP_ANTISYMMETRIC = 0, SPP_SYMMETRIC = 1 } spp_parity;

typedef enum spp_regime { SPP_AMPLIFIED = 0, SPP_ATTENUATED = 1, SPP_NEUTRAL = 2 } spp_regime;

typedef enum spp_medium_class { SPP_GAIN = 0, SPP_LOSS = 1, SPP_LOSSLESS = 2 } spp_medium_class;

typedef enum spp_metal_kind { SPP_METAL_DRUDE = 0, SPP_METAL_DIRECT = 1 } spp_metal_kind;

typedef enum spp_commutator_kind {
  SPP_SAME_DIRECTION = 0,
  SPP_CROSS_DIRECTION = 1
} spp_commutator_kind;

/* Drude (omega_p, gamma in rad/s) or a fixed permittivity eps. */
typedef struct spp_metal {
  spp_metal_kind kind;
  double omega_p;
  double gamma;
  spp_complex eps;
} spp_metal;

typedef struct spp_dielectric {
  double n_real;
  double n_imag; /* < 0 is gain */
} spp_dielectric;

typedef struct spp_solve_options {
  double tolerance;
  int max_iterations;
} spp_solve_options;

/* Defaults: Drude metal with the library's constants; solver tolerance 1e-12. */
SPP_API spp_metal spp_default_metal(void);
SPP_API spp_solve_options spp_default_solve_options(void);

SPP_API const char* spp_status_string(spp_status status);
SPP_API const char* spp_last_error_message(void);

/* ---- media ---- */

SPP_API spp_status spp_eps_dielectric(const spp_dielectric* dielectric, spp_complex* eps);
SPP_API spp_status spp_eps_metal(const spp_metal* metal, double omega, spp_complex* eps);
SPP_API spp_medium_class spp_classify_medium(spp_complex eps);

typedef struct spp_media spp_media;

SPP_API spp_status spp_media_create(const spp_dielectric* dielectric, const spp_metal* metal,
                                    double omega, spp_media** out);
SPP_API void spp_media_destroy(spp_media* media);
SPP_API spp_status spp_media_get(const spp_media* media, spp_complex* eps_d, spp_complex* eps_m,
                                 double* omega);
SPP_API spp_status spp_single_interface_root(const spp_media* media, spp_complex* k);

/* ---- modes ---- */

typedef struct spp_mode spp_mode;

typedef struct spp_mode_info {
  spp_parity parity;
  double omega;
  double d;
  spp_complex k_spp;
  spp_complex nu0;
  spp_complex num;
  spp_complex amplitude_A;
  double residual;
  int iterations;
  spp_regime regime;
  spp_complex eps_d;
  spp_complex eps_m;
} spp_mode_info;

/* guess and options may be NULL. */
SPP_API spp_status spp_mode_solve(const spp_media* media, spp_parity parity, double d,
                                  const spp_complex* guess, const spp_solve_options* options,
                                  spp_mode** out);
SPP_API void spp_mode_destroy(spp_mode* mode);
SPP_API spp_status spp_mode_get_info(const spp_mode* mode, spp_mode_info* info);

/* (x, z) components of the vector-potential mode at (x, z). */
SPP_API spp_status spp_mode_profile(const spp_mode* mode, double x, double z, spp_complex out[2]);

/* printed_form != 0 selects the alternative closed form instead of the integral. */
SPP_API spp_status spp_mode_normalization(const spp_mode* mode, int printed_form,
                                          spp_complex* n_prime, spp_complex* lambda_n);
SPP_API spp_status spp_mode_green_coefficient(const spp_mode* mode, spp_complex* D);
/* Row-major 2x2 over (x, z). */
SPP_API spp_status spp_mode_green_tensor(const spp_mode* mode, double x, double z, double x_prime,
                                         double z_prime, spp_complex out[4]);

/* ---- quantization ---- */

typedef struct spp_quant {
  double alpha_d;
  double alpha_m;
  double beta_prime;
  double gamma_prime;
  double ccr_ratio;
  int vacuous;
} spp_quant;

SPP_API spp_status spp_mode_quant_coefficients(const spp_mode* mode, int printed_gamma_labels,
                                               spp_quant* out);
SPP_API spp_status spp_mode_green_identity(const spp_mode* mode, double* deviation, int* vacuous);
/* from_noise != 0 builds the kernel by quadrature from the noise currents. */
SPP_API spp_status spp_mode_commutator(const spp_mode* mode, spp_commutator_kind kind, double x,
                                       double x_prime, int from_noise, spp_complex* out);

/* ---- fields ---- */

typedef struct spp_state {
  double alpha_mag;
  double theta;
  double xi_mag;
  double theta_xi;
} spp_state;

/* textbook_squeeze != 0 selects mu alpha - nu alpha*. */
SPP_API spp_status spp_ladder_mean(const spp_state* state, int textbook_squeeze, spp_complex* out);
SPP_API spp_status spp_mode_h_bracket(const spp_mode* mode, double z, spp_complex* out);
SPP_API spp_status spp_mode_h_prefactor(const spp_mode* mode, spp_complex* out);
/* H mean at n points (x[i], z[i]). With b != NULL the difference <H>_a - <H>_b. */
SPP_API spp_status spp_mode_h_field(const spp_mode* mode, const spp_state* a, const spp_state* b,
                                    int textbook_squeeze, const double* x, const double* z,
                                    size_t n, spp_complex* out);

/* ---- sweeps ---- */

typedef struct spp_sweep spp_sweep;

typedef struct spp_sweep_row {
  double omega;
  double kappa;
  spp_parity parity;
  spp_status status;
  spp_complex k_spp;
  spp_complex nu0;
  spp_complex num;
  double residual;
  int iterations;
  spp_regime regime;
} spp_sweep_row;

SPP_API spp_status spp_dispersion_sweep(const spp_dielectric* dielectric, const spp_metal* metal,
                                        double d, const spp_parity* parities, size_t n_parities,
                                        const double* omega, size_t n_omega,
                                        const spp_solve_options* options, spp_sweep** out);
SPP_API spp_status spp_gain_sweep(const spp_metal* metal, double n_real, double d,
                                  const spp_parity* parities, size_t n_parities,
                                  const double* kappa, size_t n_kappa, double omega,
                                  const spp_solve_options* options, spp_sweep** out);
SPP_API size_t spp_sweep_size(const spp_sweep* sweep);
SPP_API spp_status spp_sweep_row_at(const spp_sweep* sweep, size_t i, spp_sweep_row* row);
/* Diagnostic for a failed row; empty for converged rows. Owned by the sweep. */
SPP_API const char* spp_sweep_row_message(const spp_sweep* sweep, size_t i);
/* 1 and fills kappa/im_k when a parity crossing was located, else 0. */
SPP_API int spp_sweep_crossing(const spp_sweep* sweep, double* kappa, double* im_k);
SPP_API void spp_sweep_destroy(spp_sweep* sweep);

/* ---- verification ---- */

typedef struct spp_report spp_report;

typedef struct spp_verify_options {
  int printed_gamma_labels;
  size_t commutator_pairs;
  uint64_t seed;
  size_t curl_depths;
  spp_solve_options solve;
} spp_verify_options;

typedef struct spp_check {
  const char* name; /* owned by the report */
  spp_parity parity;
  double omega;
  double value;
  double tolerance;
  int pass;
  const char* note; /* owned by the report */
} spp_check;

SPP_API spp_verify_options spp_default_verify_options(void);
SPP_API spp_status spp_verify(const spp_dielectric* dielectric, const spp_metal* metal, double d,
                              double omega, const spp_parity* parities, size_t n_parities,
                              const spp_verify_options* options, spp_report** out);
SPP_API size_t spp_report_size(const spp_report* report);
SPP_API spp_status spp_report_check(const spp_report* report, size_t i, spp_check* out);
SPP_API void spp_report_destroy(spp_report* report);

#ifdef __cplusplus
}
#endif

#endif
