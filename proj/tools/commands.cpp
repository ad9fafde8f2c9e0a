#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "output.hpp"
#include "spp/spp.h"

namespace sppcli {

namespace {

struct MediaDeleter {
  void operator()(spp_media* p) const { spp_media_destroy(p); }
};
struct ModeDeleter {
  void operator()(spp_mode* p) const { spp_mode_destroy(p); }
};
struct SweepDeleter {
  void operator()(spp_sweep* p) const { spp_sweep_destroy(p); }
};
struct ReportDeleter {
  void operator()(spp_report* p) const { spp_report_destroy(p); }
};
using MediaPtr = std::unique_ptr<spp_media, MediaDeleter>;
using ModePtr = std::unique_ptr<spp_mode, ModeDeleter>;
using SweepPtr = std::unique_ptr<spp_sweep, SweepDeleter>;
using ReportPtr = std::unique_ptr<spp_report, ReportDeleter>;

// Invalid arguments are the caller's fault (usage); anything else is a run failure.
void check(spp_status s, const std::string& what) {
  if (s == SPP_OK) return;
  const std::string msg = what + ": " + spp_status_string(s) + ": " + spp_last_error_message();
  if (s == SPP_INVALID_ARGUMENT) throw ConfigError(msg);
  throw std::runtime_error(msg);
}

const char* parity_name(spp_parity p) {
  return p == SPP_SYMMETRIC ? "symmetric" : "antisymmetric";
}

const char* regime_name(spp_regime r) {
  switch (r) {
    case SPP_AMPLIFIED: return "amplified";
    case SPP_ATTENUATED: return "attenuated";
    case SPP_NEUTRAL: return "neutral";
  }
  return "unknown";
}

std::vector<spp_parity> parities(const Config& cfg, const std::string& section) {
  std::vector<spp_parity> out;
  for (const auto& w : cfg.words(section, "parities")) {
    spp_parity p;
    if (w == "symmetric") p = SPP_SYMMETRIC;
    else if (w == "antisymmetric") p = SPP_ANTISYMMETRIC;
    else throw ConfigError("[" + section + "] parities: unknown parity '" + w + "'");
    if (std::find(out.begin(), out.end(), p) != out.end())
      throw ConfigError("[" + section + "] parities: '" + w + "' listed twice");
    out.push_back(p);
  }
  if (out.empty()) throw ConfigError("[" + section + "] parities: empty list");
  return out;
}

spp_metal metal(const Config& cfg) {
  spp_metal m = spp_default_metal();
  const std::string& model = cfg.raw("metal", "model");
  if (model == "drude") {
    m.kind = SPP_METAL_DRUDE;
    m.omega_p = cfg.number("metal", "omega_p");
    m.gamma = cfg.number("metal", "gamma");
  } else if (model == "direct") {
    const auto re = cfg.optional_number("metal", "eps_re");
    const auto im = cfg.optional_number("metal", "eps_im");
    if (!re || !im) throw ConfigError("[metal] model = direct needs eps_re and eps_im");
    m.kind = SPP_METAL_DIRECT;
    m.eps = {*re, *im};
  } else {
    throw ConfigError("[metal] model: expected drude or direct, got '" + model + "'");
  }
  return m;
}

spp_dielectric dielectric(const Config& cfg) {
  return {cfg.number("dielectric", "n_real"), cfg.number("dielectric", "n_imag")};
}

spp_solve_options solve_options(const Config& cfg) {
  spp_solve_options o = spp_default_solve_options();
  o.tolerance = cfg.number("solver", "tolerance");
  const auto iters = cfg.integer("solver", "max_iterations");
  if (iters < 1 || iters > 100000) throw ConfigError("[solver] max_iterations out of range");
  o.max_iterations = static_cast<int>(iters);
  return o;
}

std::vector<double> linspace(double a, double b, std::size_t n) {
  if (n == 1) return {a};
  std::vector<double> v(n);
  const double last = static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i)
    v[i] = a * (static_cast<double>(n - 1 - i) / last) + b * (static_cast<double>(i) / last);
  return v;
}

// An explicit list overrides the evenly spaced range; the range may run downwards
// and a reversed range yields bit-identical points in reverse order.
std::vector<double> grid(const Config& cfg, const std::string& section, const std::string& list,
                         const std::string& prefix) {
  const std::string lo = prefix + "_min", hi = prefix + "_max", count = prefix + "_count";
  if (cfg.was_set(section, list)) {
    auto v = cfg.numbers(section, list);
    if (v.empty()) throw ConfigError("[" + section + "] " + list + ": empty grid");
    return v;
  }
  const auto n = cfg.integer(section, count);
  if (n < 1) throw ConfigError("[" + section + "] " + count + ": empty grid");
  if (n > 10'000'000) throw ConfigError("[" + section + "] " + count + ": too many points");
  const double a = cfg.number(section, lo), b = cfg.number(section, hi);
  return linspace(a, b, static_cast<std::size_t>(n));
}

std::string complex_text(spp_complex c) { return num(c.re) + " " + num(c.im) + "i"; }

void media_header(Document& doc, const Config& cfg, const spp_metal& m, double d,
                  const spp_solve_options& o) {
  if (m.kind == SPP_METAL_DRUDE)
    doc.comment("metal: drude omega_p=" + num(m.omega_p) + " gamma=" + num(m.gamma));
  else
    doc.comment("metal: direct eps=" + complex_text(m.eps));
  doc.comment("dielectric: n_real=" + num(cfg.number("dielectric", "n_real")) +
              " n_imag=" + num(cfg.number("dielectric", "n_imag")));
  doc.comment("d_m: " + num(d));
  doc.comment("solver: tolerance=" + num(o.tolerance) +
              " max_iterations=" + std::to_string(o.max_iterations));
  doc.comment("convention: exp(-i omega t); Im k < 0 is amplified; nu = sqrt(k^2 - eps k0^2) with Re nu >= 0");
}

const char* kSweepColumns =
    "parity,omega_rad_s,kappa,re_k,im_k,re_nu0,im_nu0,re_num,im_num,residual,iterations,regime,status";

// Returns the number of failed rows.
std::size_t write_rows(Document& doc, const spp_sweep* sweep, std::ostream& log) {
  std::size_t failed = 0;
  auto& out = doc.body();
  out << kSweepColumns << '\n';
  for (std::size_t i = 0; i < spp_sweep_size(sweep); ++i) {
    spp_sweep_row r;
    check(spp_sweep_row_at(sweep, i, &r), "sweep row");
    out << parity_name(r.parity) << ',' << num(r.omega) << ',' << num(r.kappa) << ',';
    if (r.status == SPP_OK) {
      out << num(r.k_spp.re) << ',' << num(r.k_spp.im) << ',' << num(r.nu0.re) << ','
          << num(r.nu0.im) << ',' << num(r.num.re) << ',' << num(r.num.im) << ','
          << num(r.residual) << ',' << r.iterations << ',' << regime_name(r.regime) << ",ok\n";
    } else {
      ++failed;
      out << ",,,,,,,,," << spp_status_string(r.status) << '\n';
      log << "row " << i << " (" << parity_name(r.parity) << ", omega=" << num(r.omega)
          << ", kappa=" << num(r.kappa) << "): " << spp_status_string(r.status) << ": "
          << spp_sweep_row_message(sweep, i) << '\n';
    }
  }
  return failed;
}

}  // namespace

int run_dispersion(const Config& cfg, const Flags&, std::ostream& log) {
  const auto ps = parities(cfg, "dispersion");
  const auto omega = grid(cfg, "dispersion", "omega", "omega");
  for (std::size_t i = 1; i < omega.size(); ++i)
    if (!(omega[i] > omega[i - 1]))
      throw ConfigError("[dispersion] omega grid must be strictly increasing");
  const auto m = metal(cfg);
  const auto diel = dielectric(cfg);
  const double d = cfg.number("geometry", "d");
  const auto o = solve_options(cfg);

  spp_sweep* raw = nullptr;
  check(spp_dispersion_sweep(&diel, &m, d, ps.data(), ps.size(), omega.data(), omega.size(), &o, &raw),
        "dispersion sweep");
  const SweepPtr sweep(raw);

  Document doc;
  doc.comment("spp dispersion");
  media_header(doc, cfg, m, d, o);
  doc.comment("continuation: increasing omega, each root seeds the next");
  const std::size_t failed = write_rows(doc, sweep.get(), log);
  doc.commit(cfg.raw("dispersion", "out"));
  return failed == 0 ? kExitOk : kExitFailure;
}

int run_gain_sweep(const Config& cfg, const Flags&, std::ostream& log) {
  const auto ps = parities(cfg, "gain_sweep");
  const auto kappa = grid(cfg, "gain_sweep", "kappa", "kappa");
  const auto m = metal(cfg);
  const auto n_real = cfg.optional_number("gain_sweep", "n_real").value_or(cfg.number("dielectric", "n_real"));
  const double omega = cfg.number("gain_sweep", "omega");
  const double d = cfg.number("geometry", "d");
  const auto o = solve_options(cfg);

  spp_sweep* raw = nullptr;
  check(spp_gain_sweep(&m, n_real, d, ps.data(), ps.size(), kappa.data(), kappa.size(), omega, &o, &raw),
        "gain sweep");
  const SweepPtr sweep(raw);

  Document doc;
  doc.comment("spp gain-sweep");
  if (m.kind == SPP_METAL_DRUDE)
    doc.comment("metal: drude omega_p=" + num(m.omega_p) + " gamma=" + num(m.gamma));
  else
    doc.comment("metal: direct eps=" + complex_text(m.eps));
  doc.comment("dielectric: n_real=" + num(n_real) + " n_imag=kappa");
  doc.comment("omega_rad_s: " + num(omega));
  doc.comment("d_m: " + num(d));
  doc.comment("solver: tolerance=" + num(o.tolerance) +
              " max_iterations=" + std::to_string(o.max_iterations));
  doc.comment("convention: exp(-i omega t); Im k < 0 is amplified; nu = sqrt(k^2 - eps k0^2) with Re nu >= 0");
  const bool up = std::is_sorted(kappa.begin(), kappa.end());
  const bool down = std::is_sorted(kappa.rbegin(), kappa.rend());
  doc.comment(std::string("continuation: grid order (") +
              (up ? "ascending" : down ? "descending" : "unordered") + " kappa), each root seeds the next");
  double kc = 0.0, imc = 0.0;
  if (spp_sweep_crossing(sweep.get(), &kc, &imc))
    doc.comment("crossing: kappa=" + num(kc) + " im_k=" + num(imc));
  else
    doc.comment("crossing: none");
  const std::size_t failed = write_rows(doc, sweep.get(), log);
  doc.commit(cfg.raw("gain_sweep", "out"));
  return failed == 0 ? kExitOk : kExitFailure;
}

namespace {

// Squeeze parameters have no sensible default, so a squeezed state must name them.
spp_state state(const Config& cfg, const std::string& section, bool require_squeeze) {
  const auto xi = cfg.optional_number(section, "xi_mag");
  const auto theta_xi = cfg.optional_number(section, "theta_xi");
  if (require_squeeze && (!xi || !theta_xi))
    throw ConfigError("[" + section + "] needs explicit xi_mag and theta_xi");
  if (xi && *xi != 0.0 && !theta_xi)
    throw ConfigError("[" + section + "] theta_xi is required when xi_mag != 0");
  return {cfg.number(section, "alpha_mag"), cfg.number(section, "theta"), xi.value_or(0.0),
          theta_xi.value_or(0.0)};
}

std::string state_text(const spp_state& s) {
  return "alpha_mag=" + num(s.alpha_mag) + " theta=" + num(s.theta) + " xi_mag=" + num(s.xi_mag) +
         " theta_xi=" + num(s.theta_xi);
}

}  // namespace

int run_field(const Config& cfg, const Flags& flags, std::ostream& log) {
  const auto ps = parities(cfg, "field");
  const auto m = metal(cfg);
  const auto diel = dielectric(cfg);
  const double d = cfg.number("geometry", "d");
  const double omega = cfg.number("field", "omega");
  const auto o = solve_options(cfg);
  const int textbook = flags.textbook_squeeze ? 1 : 0;

  const spp_state a = state(cfg, "field", false);
  const spp_state b = flags.compare ? state(cfg, "compare", true) : spp_state{};
  spp_complex mean_a{}, mean_b{};
  check(spp_ladder_mean(&a, textbook, &mean_a), "[field] state");
  if (flags.compare) check(spp_ladder_mean(&b, textbook, &mean_b), "[compare] state");

  const auto count = cfg.integer("field", "x_count");
  if (count < 1) throw ConfigError("[field] x_count: empty grid");
  if (count > 10'000'000) throw ConfigError("[field] x_count: too many points");
  auto depths = cfg.numbers("field", "z");
  if (cfg.was_set("field", "z") && depths.empty()) throw ConfigError("[field] z: empty list");
  if (depths.empty()) depths = {0.0, d};
  const double x_min = cfg.number("field", "x_min");
  const auto x_max_fixed = cfg.optional_number("field", "x_max");

  spp_media* raw_media = nullptr;
  check(spp_media_create(&diel, &m, omega, &raw_media), "media");
  const MediaPtr media(raw_media);

  Document doc;
  doc.comment("spp field");
  media_header(doc, cfg, m, d, o);
  doc.comment("omega_rad_s: " + num(omega));
  doc.comment(std::string("quantity: ") + (flags.compare ? "<H>_a - <H>_b" : "<H>_a") +
              ", y-component of the magnetic field mean; rates and ratios are meaningful, the overall scale is not");
  doc.comment("state a: " + state_text(a) + " <a>=" + complex_text(mean_a));
  if (flags.compare) doc.comment("state b: " + state_text(b) + " <a>=" + complex_text(mean_b));
  doc.comment(std::string("squeeze form: ") + (flags.textbook_squeeze ? "mu alpha - nu alpha*" : "mu alpha - nu alpha"));
  doc.comment("prefactor: principal square root of beta'/(2 Im k); the mode is undefined when Im k = 0");

  std::ostringstream rows;
  rows << "parity,x_m,z_m,re_H,im_H,abs_H,status\n";
  std::size_t failed = 0;
  for (spp_parity p : ps) {
    spp_mode* raw_mode = nullptr;
    const spp_status solved = spp_mode_solve(media.get(), p, d, nullptr, &o, &raw_mode);
    if (solved == SPP_INVALID_ARGUMENT) check(solved, "mode");
    if (solved != SPP_OK) {
      ++failed;
      rows << parity_name(p) << ",,,,,," << spp_status_string(solved) << '\n';
      log << parity_name(p) << ": " << spp_status_string(solved) << ": " << spp_last_error_message() << '\n';
      doc.comment(std::string("mode ") + parity_name(p) + ": " + spp_status_string(solved));
      continue;
    }
    const ModePtr mode(raw_mode);
    spp_mode_info info;
    check(spp_mode_get_info(mode.get(), &info), "mode info");
    std::string line = std::string("mode ") + parity_name(p) + ": k=" + complex_text(info.k_spp) +
                       " regime=" + regime_name(info.regime);
    spp_complex pref{};
    const spp_status pref_status = spp_mode_h_prefactor(mode.get(), &pref);
    if (pref_status == SPP_OK) line += " prefactor=" + complex_text(pref);
    doc.comment(line);

    const double x_max = x_max_fixed.value_or(x_min + 5.0 / std::max(std::abs(info.k_spp.im), 1e-300));
    const auto line_x = linspace(x_min, x_max, static_cast<std::size_t>(count));
    std::vector<double> xs, zs;
    for (double z : depths) {
      xs.insert(xs.end(), line_x.begin(), line_x.end());
      zs.insert(zs.end(), line_x.size(), z);
    }
    std::vector<spp_complex> h(xs.size());
    const spp_status s = spp_mode_h_field(mode.get(), &a, flags.compare ? &b : nullptr, textbook,
                                          xs.data(), zs.data(), xs.size(), h.data());
    if (s == SPP_INVALID_ARGUMENT) check(s, "field");
    if (s != SPP_OK) {
      ++failed;
      rows << parity_name(p) << ",,,,,," << spp_status_string(s) << '\n';
      log << parity_name(p) << ": " << spp_status_string(s) << ": " << spp_last_error_message() << '\n';
      continue;
    }
    for (std::size_t i = 0; i < xs.size(); ++i)
      rows << parity_name(p) << ',' << num(xs[i]) << ',' << num(zs[i]) << ',' << num(h[i].re) << ','
           << num(h[i].im) << ',' << num(std::hypot(h[i].re, h[i].im)) << ",ok\n";
  }
  doc.body() << rows.str();
  doc.commit(cfg.raw("field", "out"));
  return failed == 0 ? kExitOk : kExitFailure;
}

int run_verify(const Config& cfg, const Flags& flags, std::ostream& log) {
  const auto ps = parities(cfg, "verify");
  const auto m = metal(cfg);
  const auto diel = dielectric(cfg);
  const double d = cfg.number("geometry", "d");
  const double omega = cfg.number("verify", "omega");
  spp_verify_options vo = spp_default_verify_options();
  vo.printed_gamma_labels = flags.printed_gamma_labels ? 1 : 0;
  const auto pairs = cfg.integer("verify", "commutator_pairs");
  const auto depths = cfg.integer("verify", "curl_depths");
  const auto seed = cfg.integer("verify", "seed");
  if (pairs < 1 || depths < 1 || seed < 0) throw ConfigError("[verify] counts must be >= 1 and seed >= 0");
  vo.commutator_pairs = static_cast<std::size_t>(pairs);
  vo.curl_depths = static_cast<std::size_t>(depths);
  vo.seed = static_cast<std::uint64_t>(seed);
  vo.solve = solve_options(cfg);

  spp_report* raw = nullptr;
  check(spp_verify(&diel, &m, d, omega, ps.data(), ps.size(), &vo, &raw), "verify");
  const ReportPtr report(raw);

  Document doc;
  doc.comment("spp verify");
  media_header(doc, cfg, m, d, vo.solve);
  doc.comment("omega_rad_s: " + num(omega));
  doc.comment(std::string("gamma' labels: ") + (flags.printed_gamma_labels ? "swapped" : "corrected"));
  auto& out = doc.body();
  out << "check,parity,omega_rad_s,value,tolerance,result,note\n";
  std::size_t failed = 0;
  const std::size_t n = spp_report_size(report.get());
  for (std::size_t i = 0; i < n; ++i) {
    spp_check c;
    check(spp_report_check(report.get(), i, &c), "report");
    if (!c.pass) ++failed;
    out << c.name << ',' << parity_name(c.parity) << ',' << num(c.omega) << ',' << num(c.value) << ','
        << num(c.tolerance) << ',' << (c.pass ? "PASS" : "FAIL") << ',' << c.note << '\n';
    if (!c.pass)
      log << "FAIL " << c.name << " (" << parity_name(c.parity) << "): " << num(c.value) << " > "
          << num(c.tolerance) << '\n';
  }
  doc.comment("summary: " + std::to_string(n - failed) + "/" + std::to_string(n) + " passed");
  doc.commit(cfg.raw("verify", "out"));
  log << "verify: " << n - failed << "/" << n << " checks passed\n";
  return failed == 0 ? kExitOk : kExitFailure;
}

}  // namespace sppcli
