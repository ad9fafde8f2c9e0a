#include <algorithm>
#include <vector>

#include "doctest.h"
#include "support.hpp"

using namespace spp;
using spp::test::media;
using spp::test::mode;
using spp::test::rel;

namespace {

struct RootCase {
  double n_real;
  double n_imag;
  Complex single;
  Complex anti;
  Complex sym;
};

// mpmath, 40 digits, tests/oracles/compute_oracles.py
const RootCase kRoots[] = {
    {1.9726, -0.081, {45262241.833472065, -3491245.8851711949},
     {43811981.445379457, -3433537.5006073104}, {46712075.560116583, -3520106.2329058808}},
    {0.9726, -0.08, {16630476.591981877, -1548147.6364124315},
     {16405157.826380761, -1501828.3562253642}, {16912155.14176136, -1601708.249993186}},
    {0.9726, 0.0, {16653249.020762579, 17641.753209236846},
     {16425785.102482336, 10292.525895303302}, {16936692.696415772, 27836.265266144053}},
};

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an spp::Error");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("decay constants take the principal root") {
  MediumSet m{Complex(3.89115, 0.0), Complex(-7.5, 0.1), 4.8e15};
  const auto nu = decay_constants(Complex(3.52e7, 0.0), m);
  CHECK(rel(nu.nu0, Complex(15541103.680329663, 0.0)) < 1e-14);
  CHECK(nu.num.real() > 0.0);
  for (Complex k : {Complex(1e6, 0.0), Complex(1e7, -3e6), Complex(2e7, 5e6)}) {
    const auto v = decay_constants(k, m);
    CHECK(v.nu0.real() >= 0.0);
    CHECK(v.num.real() >= 0.0);
  }
}

TEST_CASE("single-interface and slab roots match the reference") {
  for (const auto& c : kRoots) {
    CAPTURE(c.n_real);
    CAPTURE(c.n_imag);
    CHECK(rel(single_interface_root(media(c.n_real, c.n_imag)), c.single) < 1e-13);
    const auto anti = mode(Parity::Antisymmetric, c.n_real, c.n_imag);
    const auto sym = mode(Parity::Symmetric, c.n_real, c.n_imag);
    CHECK(rel(anti.k_spp, c.anti) < 1e-12);
    CHECK(rel(sym.k_spp, c.sym) < 1e-12);
    // Symmetric lies below and antisymmetric above the single-interface branch.
    CHECK(sym.k_spp.real() > c.single.real());
    CHECK(anti.k_spp.real() < c.single.real());
  }
}

TEST_CASE("converged roots satisfy the unscaled relation and the branch invariant") {
  for (const auto& c : kRoots)
    for (Parity p : kBothParities) {
      const auto sol = mode(p, c.n_real, c.n_imag);
      const Complex f = dispersion_residual(sol.k_spp, p, sol.geom, sol.media);
      CHECK(std::abs(f) <= 1e-10 * std::abs(std::exp(sol.num * sol.geom.d)));
      CHECK(sol.nu0.real() > 0.0);
      CHECK(sol.num.real() > 0.0);
      CHECK(sol.residual <= 1e-10);
      CHECK(sol.amplitude_A == Complex(1.0, 0.0) / (1.0 - double(upper_sign(p)) * std::exp(-sol.num * sol.geom.d)));
    }
}

TEST_CASE("regime follows the sign of Im k") {
  CHECK(classify_mode(mode(Parity::Symmetric, 0.9726, -0.08)) == Regime::Amplified);
  CHECK(classify_mode(mode(Parity::Symmetric, 0.9726, 0.0)) == Regime::Attenuated);
  CHECK(classify_wavenumber(Complex(1e7, 0.0)) == Regime::Neutral);
}

TEST_CASE("conjugate media give the conjugate root") {
  // Flip the sign of every imaginary part: a direct metal with conj(eps_m).
  const Complex eps_m = eps_metal_drude(DrudeMetalSpec{}, 4.8e15);
  for (Parity p : kBothParities) {
    const auto a = solve_dispersion(p, {}, make_media({1.9726, -0.081}, eps_m, 4.8e15));
    const auto b = solve_dispersion(p, {}, make_media({1.9726, 0.081}, std::conj(eps_m), 4.8e15));
    CHECK(rel(b.k_spp, std::conj(a.k_spp)) < 1e-12);
  }
}

TEST_CASE("thick films recover the single-interface mode") {
  const auto m = media(1.9726, -0.081);
  const Complex single = single_interface_root(m);
  const auto sym = solve_dispersion(Parity::Symmetric, SlabGeometry{2e-6}, m);
  const auto anti = solve_dispersion(Parity::Antisymmetric, SlabGeometry{2e-6}, m);
  CHECK(rel(anti.k_spp, sym.k_spp) < 1e-8);
  CHECK(rel(sym.k_spp, single) < 1e-9);
  CHECK(rel(anti.k_spp, single) < 1e-9);
}

TEST_CASE("guess is honoured and invalid input is rejected") {
  const auto m = media(1.9726, -0.081);
  const auto from_guess = solve_dispersion(Parity::Symmetric, {}, m, Complex(4.6e7, -3e6));
  CHECK(rel(from_guess.k_spp, kRoots[0].sym) < 1e-12);

  CHECK(code_of([&] { solve_dispersion(Parity::Symmetric, SlabGeometry{0.0}, m); }) ==
        ErrorCode::InvalidArgument);
  CHECK(code_of([&] { solve_dispersion(Parity::Symmetric, SlabGeometry{1e-11}, m); }) ==
        ErrorCode::InvalidArgument);
  CHECK(code_of([&] { solve_dispersion(Parity::Symmetric, {}, m, Complex(NAN, 0.0)); }) ==
        ErrorCode::InvalidArgument);
  CHECK(code_of([&] { solve_dispersion(Parity::Symmetric, {}, m, std::nullopt, {1e-12, 0}); }) ==
        ErrorCode::InvalidArgument);
}

TEST_CASE("dispersion_residual reports the interface pole") {
  // eps_d = 2, eps_m = -4: r = -1 exactly at k = 2 k0, the single-interface wavenumber.
  const MediumSet m{Complex(2.0, 0.0), Complex(-4.0, 0.0), 4.8e15};
  CHECK(code_of([&] { dispersion_residual(Complex(2.0 * m.k0(), 0.0), Parity::Symmetric, {}, m); }) ==
        ErrorCode::DispersionPole);
  const MediumSet balanced{Complex(2.0, 0.0), Complex(-2.0, 0.0), 4.8e15};
  CHECK(code_of([&] { single_interface_root(balanced); }) == ErrorCode::DispersionPole);
}

TEST_CASE("frequency sweep") {
  std::vector<double> grid;
  for (int i = 0; i <= 45; ++i) grid.push_back(1e15 + i * 1e14);
  const auto rows = dispersion_sweep(kBothParities, {}, DrudeMetalSpec{}, {1.9726, -0.081}, grid);
  REQUIRE(rows.size() == 2 * grid.size());

  SUBCASE("rows are ordered by parity then grid and all converge") {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      CHECK(rows[i].parity == kBothParities[i / grid.size()]);
      CHECK(rows[i].omega == grid[i % grid.size()]);
      CHECK(rows[i].kappa == -0.081);
      REQUIRE(rows[i].solution);
    }
  }

  SUBCASE("continuation stays on the branch a direct solve finds") {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto direct = solve_dispersion(rows[i].parity, {}, make_media({1.9726, -0.081}, DrudeMetalSpec{}, rows[i].omega));
      CHECK(rel(rows[i].solution->k_spp, direct.k_spp) < 1e-10);
      if (i % grid.size() < 2) continue;
      // No jumps: the second difference stays well below the step.
      const Complex a = rows[i - 2].solution->k_spp;
      const Complex b = rows[i - 1].solution->k_spp;
      const Complex c = rows[i].solution->k_spp;
      CHECK(std::abs(c - 2.0 * b + a) < 0.5 * std::abs(c - b));
    }
  }

  SUBCASE("single-point grid equals a direct solve") {
    const double w[] = {3e15};
    const auto one = dispersion_sweep(kBothParities, {}, DrudeMetalSpec{}, {1.9726, -0.081}, w);
    REQUIRE(one.size() == 2);
    for (const auto& r : one) {
      const auto direct = solve_dispersion(r.parity, {}, make_media({1.9726, -0.081}, DrudeMetalSpec{}, 3e15));
      CHECK(rel(r.solution->k_spp, direct.k_spp) < 1e-13);
    }
  }

  SUBCASE("antisymmetric branch has the higher frequency at fixed Re k") {
    // omega(Re k) by linear interpolation on each branch.
    const auto omega_at = [&](auto k_of, double re_k) {
      for (std::size_t i = 1; i < grid.size(); ++i) {
        const double a = k_of(i - 1), b = k_of(i);
        if ((a - re_k) * (b - re_k) <= 0.0) return grid[i - 1] + (re_k - a) / (b - a) * 1e14;
      }
      FAIL("Re k outside the grid");
      return 0.0;
    };
    const auto branch = [&](Parity p) {
      const std::size_t off = p == kBothParities[0] ? 0 : grid.size();
      return [&rows, off](std::size_t i) { return rows[off + i].solution->k_spp.real(); };
    };
    const auto single = [&](std::size_t i) {
      return single_interface_root(make_media({1.9726, -0.081}, DrudeMetalSpec{}, grid[i])).real();
    };
    for (double re_k : {1.5e7, 2.5e7, 4.0e7}) {
      CAPTURE(re_k);
      const double w_anti = omega_at(branch(Parity::Antisymmetric), re_k);
      const double w_single = omega_at(single, re_k);
      const double w_sym = omega_at(branch(Parity::Symmetric), re_k);
      CHECK(w_anti > w_single);
      CHECK(w_single > w_sym);
    }
  }

  SUBCASE("grid must be positive and strictly increasing") {
    const double bad[] = {2e15, 1e15};
    CHECK(code_of([&] { dispersion_sweep(kBothParities, {}, DrudeMetalSpec{}, {1.5, 0.0}, bad); }) ==
          ErrorCode::InvalidArgument);
    CHECK(code_of([&] {
            dispersion_sweep(kBothParities, {}, DrudeMetalSpec{}, {1.5, 0.0}, std::span<const double>{});
          }) == ErrorCode::InvalidArgument);
  }
}

TEST_CASE("lossless structure has real bound roots") {
  const DrudeMetalSpec collisionless{14.02e15, 0.0};
  std::vector<double> grid;
  for (int i = 0; i <= 20; ++i) grid.push_back(1e15 + i * 2e14);
  const auto rows = dispersion_sweep(kBothParities, {}, collisionless, {1.9726, 0.0}, grid);
  for (const auto& r : rows) {
    REQUIRE(r.solution);
    CHECK(std::abs(r.solution->k_spp.imag()) <= 1e-12 * std::abs(r.solution->k_spp));
    CHECK(classify_mode(*r.solution) != Regime::Amplified);
  }
}

TEST_CASE("gain sweep") {
  std::vector<double> kappa;
  for (int i = 0; i <= 20; ++i) kappa.push_back(-0.1 + 0.005 * i);

  SUBCASE("passive grid: every mode attenuated, no crossing") {
    const double zeros[] = {0.0, 0.0, 0.0};
    const auto r = gain_sweep(kBothParities, {}, DrudeMetalSpec{}, 0.9726, zeros, 4.8e15);
    CHECK_FALSE(r.crossing);
    for (const auto& row : r.rows) CHECK(classify_mode(*row.solution) == Regime::Attenuated);
  }

  SUBCASE("crossing equalizes the two imaginary parts") {
    for (double n : {1.9726, 0.9726}) {
      const auto r = gain_sweep(kBothParities, {}, DrudeMetalSpec{}, n, kappa, 4.8e15);
      REQUIRE(r.crossing);
      const auto m = make_media({n, r.crossing->kappa}, DrudeMetalSpec{}, 4.8e15);
      const double s = solve_dispersion(Parity::Symmetric, {}, m).k_spp.imag();
      const double a = solve_dispersion(Parity::Antisymmetric, {}, m).k_spp.imag();
      CHECK(std::abs(s - a) < 1e-6 * std::abs(s));
      CHECK(r.crossing->im_k == doctest::Approx(s).epsilon(1e-6));
    }
  }

  SUBCASE("symmetric mode responds more strongly to gain") {
    const auto r = gain_sweep(kBothParities, {}, DrudeMetalSpec{}, 0.9726, kappa, 4.8e15);
    const std::size_t n = kappa.size();
    // Endpoints, away from the crossing.
    for (std::size_t i : {std::size_t(0), n - 2}) {
      const double ds = r.rows[i + 1].solution->k_spp.imag() - r.rows[i].solution->k_spp.imag();
      const double da = r.rows[n + i + 1].solution->k_spp.imag() - r.rows[n + i].solution->k_spp.imag();
      CHECK(std::abs(ds) > std::abs(da));
    }
  }

  SUBCASE("reversed grid gives the same rows reversed and the same crossing") {
    const auto fwd = gain_sweep(kBothParities, {}, DrudeMetalSpec{}, 0.9726, kappa, 4.8e15);
    std::vector<double> back(kappa.rbegin(), kappa.rend());
    const auto rev = gain_sweep(kBothParities, {}, DrudeMetalSpec{}, 0.9726, back, 4.8e15);
    const std::size_t n = kappa.size();
    for (std::size_t p = 0; p < 2; ++p)
      for (std::size_t i = 0; i < n; ++i) {
        const auto& a = fwd.rows[p * n + i];
        const auto& b = rev.rows[p * n + (n - 1 - i)];
        CHECK(a.kappa == b.kappa);
        CHECK(rel(b.solution->k_spp, a.solution->k_spp) < 1e-12);
      }
    REQUIRE(fwd.crossing);
    REQUIRE(rev.crossing);
    CHECK(fwd.crossing->kappa == doctest::Approx(rev.crossing->kappa).epsilon(1e-10));
  }
}
