#include "spp/dispersion.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace spp {

const char* to_string(Parity p) noexcept {
  return p == Parity::Antisymmetric ? "antisymmetric" : "symmetric";
}

const char* to_string(Regime r) noexcept {
  switch (r) {
    case Regime::Amplified: return "Amplified";
    case Regime::Attenuated: return "Attenuated";
    case Regime::Neutral: return "Neutral";
  }
  return "Unknown";
}

void validate(const SlabGeometry& geom) {
  if (!std::isfinite(geom.d) || geom.d < kMinThickness) {
    std::ostringstream os;
    os << "slab thickness must be >= " << kMinThickness << " m, got " << geom.d;
    throw Error(ErrorCode::InvalidArgument, os.str());
  }
}

namespace {

Complex bound_root(Complex z) {
  Complex v = std::sqrt(z);
  if (v.real() < 0.0 || (v.real() == 0.0 && v.imag() < 0.0)) v = -v;
  return v;
}

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

// Pole-free form of the dispersion relation, obtained by multiplying f(k) by
// (r + 1) e^{-nu_m d}: g(k) = (r + 1) + s (r - 1) e^{-nu_m d}.
struct ScaledRelation {
  const MediumSet& media;
  double d;
  int s;

  struct Eval {
    Complex g;
    Complex dg;
    Complex r;
  };

  Eval operator()(Complex k) const {
    const double k0 = media.k0();
    const Complex nu0 = bound_root(k * k - media.eps_d * k0 * k0);
    const Complex num = bound_root(k * k - media.eps_m * k0 * k0);
    const Complex ratio = media.eps_m / media.eps_d;
    const Complex r = ratio * nu0 / num;
    const Complex e = std::exp(-num * d);

    const Complex dnu0 = k / nu0;
    const Complex dnum = k / num;
    const Complex dr = ratio * (dnu0 * num - nu0 * dnum) / (num * num);
    const Complex de = -d * dnum * e;

    const double sign = s;
    return {(r + 1.0) + sign * (r - 1.0) * e, dr + sign * (dr * e + (r - 1.0) * de), r};
  }
};

struct RootAttempt {
  Complex k;
  int iterations = 0;
  bool converged = false;
};

RootAttempt muller(const ScaledRelation& rel, Complex k, const SolveOptions& opt) {
  Complex x0 = k * Complex(1.0 - 1e-4, 0.0);
  Complex x1 = k * Complex(1.0 + 1e-4, 0.0);
  Complex x2 = k;
  Complex f0 = rel(x0).g, f1 = rel(x1).g, f2 = rel(x2).g;
  RootAttempt out{k};
  for (int it = 1; it <= opt.max_iterations; ++it) {
    out.iterations = it;
    const Complex h1 = x1 - x0, h2 = x2 - x1;
    const Complex d1 = (f1 - f0) / h1, d2 = (f2 - f1) / h2;
    const Complex a = (d2 - d1) / (h2 + h1);
    const Complex b = a * h2 + d2;
    const Complex disc = std::sqrt(b * b - 4.0 * f2 * a);
    const Complex den = std::abs(b + disc) > std::abs(b - disc) ? b + disc : b - disc;
    if (den == Complex{} || !finite(den)) break;
    const Complex step = -2.0 * f2 / den;
    x0 = x1;
    f0 = f1;
    x1 = x2;
    f1 = f2;
    x2 = x2 + step;
    f2 = rel(x2).g;
    if (!finite(x2) || !finite(f2)) break;
    if (std::abs(step) <= opt.tolerance * std::abs(x2)) {
      out.k = x2;
      out.converged = true;
      return out;
    }
  }
  out.k = x2;
  return out;
}

// Damped Newton with analytic derivative; hands over to Muller when the
// step cannot reduce |g|.
RootAttempt newton(const ScaledRelation& rel, Complex k, const SolveOptions& opt) {
  RootAttempt out{k};
  auto cur = rel(k);
  for (int it = 1; it <= opt.max_iterations; ++it) {
    out.iterations = it;
    if (cur.dg == Complex{} || !finite(cur.dg)) break;
    Complex step = -cur.g / cur.dg;
    Complex trial = k + step;
    auto next = rel(trial);
    int halvings = 0;
    while ((!finite(next.g) || std::abs(next.g) > std::abs(cur.g)) && halvings < 30) {
      step *= 0.5;
      trial = k + step;
      next = rel(trial);
      ++halvings;
    }
    const bool small = std::abs(step) <= opt.tolerance * std::abs(trial);
    if (halvings == 30 && !small) {
      auto m = muller(rel, k, opt);
      m.iterations += it;
      return m;
    }
    k = trial;
    cur = next;
    if (small) {
      // One polishing step; quadratic convergence puts this at roundoff.
      if (cur.dg != Complex{} && finite(cur.dg)) {
        const Complex polished = k - cur.g / cur.dg;
        if (finite(polished) && std::abs(rel(polished).g) <= std::abs(cur.g)) k = polished;
      }
      out.k = k;
      out.converged = true;
      return out;
    }
  }
  out.k = k;
  return out;
}

ModeSolution finish(Parity parity, const SlabGeometry& geom, const MediumSet& media, Complex k,
                    int iterations) {
  if (k.real() < 0.0) k = -k;  // relation depends on k only through k^2
  const ScaledRelation rel{media, geom.d, upper_sign(parity)};
  const auto ev = rel(k);
  const auto nus = decay_constants(k, media);
  ModeSolution sol;
  sol.parity = parity;
  sol.omega = media.omega;
  sol.k_spp = k;
  sol.nu0 = nus.nu0;
  sol.num = nus.num;
  sol.amplitude_A = 1.0 / (1.0 - double(upper_sign(parity)) * std::exp(-nus.num * geom.d));
  sol.residual = std::abs(ev.g) / (1.0 + std::abs(ev.r));
  sol.iterations = iterations;
  sol.media = media;
  sol.geom = geom;
  return sol;
}

}  // namespace

DecayConstants decay_constants(Complex k, const MediumSet& media) {
  const double k0 = media.k0();
  return {bound_root(k * k - media.eps_d * k0 * k0), bound_root(k * k - media.eps_m * k0 * k0)};
}

Complex dispersion_residual(Complex k, Parity parity, const SlabGeometry& geom,
                            const MediumSet& media) {
  validate(geom);
  validate(media);
  const auto [nu0, num] = decay_constants(k, media);
  const Complex r = media.eps_m * nu0 / (media.eps_d * num);
  if (r + 1.0 == Complex{})
    throw Error(ErrorCode::DispersionPole, "dispersion relation has a pole at eps_m nu0 = -eps_d nu_m");
  const Complex f = std::exp(num * geom.d) + double(upper_sign(parity)) * (r - 1.0) / (r + 1.0);
  if (!finite(f))
    throw Error(ErrorCode::DispersionPole, "dispersion residual is not finite at this wavenumber");
  return f;
}

Complex single_interface_root(const MediumSet& media) {
  validate(media);
  const Complex sum = media.eps_m + media.eps_d;
  if (sum == Complex{})
    throw Error(ErrorCode::DispersionPole, "eps_m + eps_d = 0: single-interface root diverges");
  Complex k = media.k0() * std::sqrt(media.eps_m * media.eps_d / sum);
  if (k.real() < 0.0) k = -k;
  return k;
}

ModeSolution solve_dispersion(Parity parity, const SlabGeometry& geom, const MediumSet& media,
                              std::optional<Complex> guess, const SolveOptions& options) {
  validate(geom);
  validate(media);
  if (!(options.tolerance > 0.0) || options.max_iterations < 1)
    throw Error(ErrorCode::InvalidArgument, "solver tolerance must be > 0 and max_iterations >= 1");

  std::vector<Complex> seeds;
  if (guess) {
    if (!finite(*guess) || *guess == Complex{})
      throw Error(ErrorCode::InvalidArgument, "initial guess must be finite and nonzero");
    seeds.push_back(*guess);
  }
  seeds.push_back(single_interface_root(media));
  if (parity == Parity::Antisymmetric)
    seeds.push_back(1.05 * media.k0() * bound_root(media.eps_d));

  const ScaledRelation rel{media, geom.d, upper_sign(parity)};
  std::optional<ModeSolution> branch_failure;
  int total_iterations = 0;
  for (Complex seed : seeds) {
    const auto attempt = newton(rel, seed, options);
    total_iterations += attempt.iterations;
    if (!attempt.converged || !finite(attempt.k)) continue;
    auto sol = finish(parity, geom, media, attempt.k, total_iterations);
    if (!(sol.residual <= 1e-10)) continue;
    if (!(sol.nu0.real() > 0.0) || !(sol.num.real() > 0.0)) {
      if (!branch_failure) branch_failure = sol;
      continue;
    }
    return sol;
  }
  if (branch_failure) {
    std::ostringstream os;
    os << "root k=" << branch_failure->k_spp << " is not a bound mode (nu0=" << branch_failure->nu0
       << ", nu_m=" << branch_failure->num << ")";
    throw Error(ErrorCode::BranchViolation, os.str());
  }
  std::ostringstream os;
  os << to_string(parity) << " dispersion root did not converge at omega=" << media.omega << " after "
     << total_iterations << " iterations";
  throw Error(ErrorCode::NonConvergence, os.str());
}

Regime classify_wavenumber(Complex k) noexcept {
  if (k.imag() < 0.0) return Regime::Amplified;
  if (k.imag() > 0.0) return Regime::Attenuated;
  return Regime::Neutral;
}

Regime classify_mode(const ModeSolution& sol) noexcept { return classify_wavenumber(sol.k_spp); }

namespace {

// Continuation along a one-parameter family. `media_at(i)` builds the media
// for grid point i, `scale(i)` is the grid coordinate used to extrapolate.
template <class MediaAt>
void continue_along(Parity parity, const SlabGeometry& geom, std::span<const double> grid,
                    MediaAt media_at, const SolveOptions& options, std::vector<SweepRow>& rows,
                    bool grid_is_kappa) {
  std::vector<std::pair<double, Complex>> history;  // (grid value, root)
  for (std::size_t i = 0; i < grid.size(); ++i) {
    SweepRow row;
    row.parity = parity;
    MediumSet media;
    try {
      media = media_at(i);
    } catch (const Error& e) {
      row.omega = grid_is_kappa ? 0.0 : grid[i];
      row.error = e.code();
      row.message = e.what();
      rows.push_back(std::move(row));
      continue;
    }
    row.omega = media.omega;
    if (grid_is_kappa) row.kappa = grid[i];

    std::optional<Complex> seed;
    std::optional<Complex> predicted;
    double trend = 0.0;
    if (!history.empty()) {
      const auto& [g1, k1] = history.back();
      seed = grid_is_kappa ? k1 : k1 * (grid[i] / g1);
      if (history.size() >= 2) {
        const auto& [g2, k2] = history[history.size() - 2];
        const double ratio = g1 != g2 ? (grid[i] - g1) / (g1 - g2) : 0.0;
        predicted = k1 + (k1 - k2) * ratio;
        seed = predicted;
        trend = std::abs(k1 - k2) * std::abs(ratio);
      }
    }

    auto attempt = [&](std::optional<Complex> s) -> std::optional<ModeSolution> {
      try {
        return solve_dispersion(parity, geom, media, s, options);
      } catch (const Error& e) {
        row.error = e.code();
        row.message = e.what();
        return std::nullopt;
      }
    };

    auto sol = attempt(seed);
    // Branch-hop guard: a jump far beyond the local trend is re-seeded from
    // the single-interface root and the candidate closer to the
    // extrapolation is kept.
    if (sol && predicted) {
      const Complex last = history.back().second;
      const double floor = 1e-6 * std::abs(last);
      if (std::abs(sol->k_spp - last) > 10.0 * std::max(trend, floor)) {
        auto fresh = attempt(std::nullopt);
        if (fresh && std::abs(fresh->k_spp - *predicted) < std::abs(sol->k_spp - *predicted))
          sol = fresh;
      }
    }
    if (sol) {
      row.error.reset();
      row.message.clear();
      history.emplace_back(grid[i], sol->k_spp);
      row.solution = std::move(sol);
    }
    rows.push_back(std::move(row));
  }
}

void require_grid(std::span<const double> grid, const char* what) {
  if (grid.empty()) throw Error(ErrorCode::InvalidArgument, std::string(what) + " grid is empty");
  for (double v : grid)
    if (!std::isfinite(v)) throw Error(ErrorCode::InvalidArgument, std::string(what) + " grid has non-finite entries");
}

}  // namespace

std::vector<SweepRow> dispersion_sweep(std::span<const Parity> parities, const SlabGeometry& geom,
                                       const MetalModel& metal, const DielectricSpec& dielectric,
                                       std::span<const double> omega_grid,
                                       const SolveOptions& options) {
  validate(geom);
  validate(dielectric);
  require_grid(omega_grid, "omega");
  for (std::size_t i = 0; i < omega_grid.size(); ++i) {
    if (!(omega_grid[i] > 0.0)) throw Error(ErrorCode::InvalidArgument, "omega grid must be > 0");
    if (i > 0 && !(omega_grid[i] > omega_grid[i - 1]))
      throw Error(ErrorCode::InvalidArgument, "omega grid must be strictly increasing");
  }
  std::vector<SweepRow> rows;
  rows.reserve(parities.size() * omega_grid.size());
  for (Parity p : parities) {
    continue_along(
        p, geom, omega_grid,
        [&](std::size_t i) { return make_media(dielectric, metal, omega_grid[i]); }, options, rows,
        false);
    for (std::size_t i = rows.size() - omega_grid.size(); i < rows.size(); ++i)
      rows[i].kappa = dielectric.n_imag;
  }
  return rows;
}

namespace {

std::optional<double> im_difference(const SweepRow& sym, const SweepRow& anti) {
  if (!sym.solution || !anti.solution) return std::nullopt;
  return sym.solution->k_spp.imag() - anti.solution->k_spp.imag();
}

}  // namespace

GainSweepResult gain_sweep(std::span<const Parity> parities, const SlabGeometry& geom,
                           const MetalModel& metal, double n_real,
                           std::span<const double> kappa_grid, double omega,
                           const SolveOptions& options) {
  validate(geom);
  validate(DielectricSpec{n_real, 0.0});
  require_grid(kappa_grid, "kappa");
  if (!(omega > 0.0)) throw Error(ErrorCode::InvalidArgument, "gain sweep needs omega > 0");

  GainSweepResult result;
  const std::size_t n = kappa_grid.size();
  result.rows.reserve(parities.size() * n);
  for (Parity p : parities)
    continue_along(
        p, geom, kappa_grid,
        [&](std::size_t i) { return make_media(DielectricSpec{n_real, kappa_grid[i]}, metal, omega); },
        options, result.rows, true);

  const auto find = [&](Parity want) -> const SweepRow* {
    for (std::size_t j = 0; j < parities.size(); ++j)
      if (parities[j] == want) return &result.rows[j * n];
    return nullptr;
  };
  const SweepRow* sym = find(Parity::Symmetric);
  const SweepRow* anti = find(Parity::Antisymmetric);
  if (!sym || !anti) return result;

  // Scan in ascending kappa so the reported crossing does not depend on the
  // direction of the grid.
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return kappa_grid[a] < kappa_grid[b]; });

  for (std::size_t j = 0; j + 1 < n; ++j) {
    const std::size_t a = order[j], b = order[j + 1];
    const auto da = im_difference(sym[a], anti[a]);
    const auto db = im_difference(sym[b], anti[b]);
    if (!da || !db) continue;
    if (*da == 0.0) {
      result.crossing = GainCrossing{kappa_grid[a], sym[a].solution->k_spp.imag()};
      return result;
    }
    if ((*da < 0.0) == (*db < 0.0) && *db != 0.0) continue;

    try {
      double lo = kappa_grid[a], hi = kappa_grid[b];
      Complex sym_lo = sym[a].solution->k_spp, anti_lo = anti[a].solution->k_spp;
      Complex sym_hi = sym[b].solution->k_spp, anti_hi = anti[b].solution->k_spp;
      double dlo = *da;
      double common = 0.5 * (sym_hi.imag() + anti_hi.imag());
      for (int it = 0; it < 200 && hi - lo > 1e-15 * std::max(1.0, std::abs(lo)); ++it) {
        const double mid = 0.5 * (lo + hi);
        const auto media = make_media(DielectricSpec{n_real, mid}, metal, omega);
        const auto s = solve_dispersion(Parity::Symmetric, geom, media, 0.5 * (sym_lo + sym_hi), options);
        const auto t = solve_dispersion(Parity::Antisymmetric, geom, media, 0.5 * (anti_lo + anti_hi), options);
        const double dmid = s.k_spp.imag() - t.k_spp.imag();
        common = 0.5 * (s.k_spp.imag() + t.k_spp.imag());
        if (dmid == 0.0) {
          lo = hi = mid;
          break;
        }
        if ((dmid < 0.0) == (dlo < 0.0)) {
          lo = mid;
          dlo = dmid;
          sym_lo = s.k_spp;
          anti_lo = t.k_spp;
        } else {
          hi = mid;
          sym_hi = s.k_spp;
          anti_hi = t.k_spp;
        }
      }
      result.crossing = GainCrossing{0.5 * (lo + hi), common};
    } catch (const Error&) {
      // Bracket could not be refined; report no crossing rather than a guess.
    }
    return result;
  }
  return result;
}

}  // namespace spp
