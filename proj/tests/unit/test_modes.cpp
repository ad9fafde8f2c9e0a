#include <random>

#include "doctest.h"
#include "spp/verification.hpp"
#include "support.hpp"

using namespace spp;
using spp::test::mode;
using spp::test::rel;

TEST_CASE("normalization closed form matches the reference integral") {
  const auto anti = mode(Parity::Antisymmetric, 0.9726, -0.08);
  const auto sym = mode(Parity::Symmetric, 0.9726, -0.08);
  CHECK(rel(normalization(anti).N_prime, {1.8114652443427005e-6, -3.2261146928329492e-7}) < 1e-11);
  CHECK(rel(normalization(sym).N_prime, {8.521180063253782e-7, -1.7163834514863172e-7}) < 1e-11);
}

TEST_CASE("normalization closed form matches quadrature over random media") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> n_real(0.9, 2.2), n_imag(-0.1, 0.1), omega(1.5e15, 5.5e15),
      d(20e-9, 120e-9);
  for (int i = 0; i < 25; ++i) {
    const auto m = make_media({n_real(rng), n_imag(rng)}, DrudeMetalSpec{}, omega(rng));
    for (Parity p : kBothParities) {
      const auto sol = solve_dispersion(p, SlabGeometry{d(rng)}, m);
      CHECK(rel(normalization(sol).N_prime, normalization_by_quadrature(sol)) < 1e-10);
    }
  }
}

TEST_CASE("alternative normalization form differs from the integral in the film terms") {
  const auto sol = mode(Parity::Symmetric, 1.9726, -0.081);
  const Complex printed = normalization(sol, NormalizationForm::AsPrinted).N_prime;
  CHECK(rel(printed, normalization_by_quadrature(sol)) > 1e-3);
}

TEST_CASE("lambda_n vanishes at a root") {
  for (Parity p : kBothParities) {
    const auto sol = mode(p, 1.9726, -0.081);
    const double k0 = sol.media.k0();
    CHECK(std::abs(normalization(sol).lambda_n) < 1e-12 * k0 * k0);
  }
}

TEST_CASE("residue coefficient") {
  const auto sol = mode(Parity::Antisymmetric, 0.9726, -0.08);
  const auto c = green_coefficient(sol);
  // nu_m dnu_m/dk + k = 2k on the principal branch.
  CHECK(rel(c.D, sol.media.eps_m / (-4.0 * c.N_prime * sol.k_spp)) < 1e-14);
  CHECK(rel(c.dnum_dk, sol.k_spp / sol.num) < 1e-15);
  CHECK_THROWS_AS(green_coefficient(sol, Complex{}), Error);
}

TEST_CASE("linearized denominator factorizes") {
  for (Parity p : kBothParities) {
    const auto sol = mode(p, 1.9726, -0.081);
    for (Complex dk : {Complex(1e3, 0.0), Complex(-2e4, 5e3), Complex(1e5, 1e5)}) {
      const auto lin = linearized_denominator(sol, sol.k_spp + dk);
      // The direct form cancels terms of size |k|^2 down to O(dk^2).
      const double terms = std::norm(sol.k_spp) + std::abs(sol.media.eps_m) * std::pow(sol.media.k0(), 2);
      CHECK(std::abs(lin.factorized - lin.direct) < 1e-14 * terms);
      CHECK(std::abs(lin.factorized) < 10.0 * std::norm(dk));
    }
    CHECK(std::abs(linearized_denominator(sol, sol.k_spp).direct) <
          1e-12 * std::norm(sol.k_spp));
  }
}

TEST_CASE("mode profile satisfies the interface conditions") {
  for (double n_imag : {-0.08, 0.0, 0.05})
    for (Parity p : kBothParities) {
      const auto sol = mode(p, 0.9726, n_imag);
      const ModeProfile profile(sol);
      const double d = sol.geom.d;
      const double h = 1e-6 * d;
      for (double face : {0.0, d}) {
        const Vec2 below = profile.bracket(face - h);
        const Vec2 above = profile.bracket(face + h);
        // Tangential A_x is continuous, normal eps A_z is continuous.
        CHECK(rel(above[0], below[0]) < 1e-4);
        const Complex eps_below = face == 0.0 ? sol.media.eps_d : sol.media.eps_m;
        const Complex eps_above = face == 0.0 ? sol.media.eps_m : sol.media.eps_d;
        CHECK(rel(eps_above * above[1], eps_below * below[1]) < 1e-4);
      }
      CHECK(std::abs(profile.bracket(-50.0 / sol.nu0.real())[0]) < 1e-20);
      CHECK(std::abs(profile.bracket(d + 50.0 / sol.nu0.real())[0]) < 1e-20);
    }
}

TEST_CASE("profile parity in the film") {
  // x-component is odd (antisymmetric) or even (symmetric) about the film centre.
  for (Parity p : kBothParities) {
    const auto sol = solve_dispersion(p, {}, make_media({1.5, 0.0}, Complex(-12.0, 0.0), 3e15));
    const ModeProfile profile(sol);
    const double c = 0.5 * sol.geom.d;
    const double s = upper_sign(p);
    for (double u : {5e-9, 17e-9, 29e-9})
      CHECK(rel(profile.bracket(c + u)[0], -s * profile.bracket(c - u)[0]) < 1e-12);
  }
}

TEST_CASE("green tensor reciprocity and x-translation") {
  const auto sol = mode(Parity::Symmetric, 1.9726, -0.081);
  const auto a = green_tensor(sol, 1e-7, 10e-9, 3e-7, -20e-9);
  const auto b = green_tensor(sol, 3e-7, -20e-9, 1e-7, 10e-9);
  const auto c = green_tensor(sol, 5e-7, 10e-9, 7e-7, -20e-9);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      CHECK(rel(b[j][i], a[i][j]) < 1e-14);
      CHECK(rel(c[i][j], a[i][j]) < 1e-12);
    }
}
