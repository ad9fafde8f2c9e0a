#include <cmath>
#include <vector>

#include "doctest.h"
#include "spp/verification.hpp"
#include "support.hpp"

using namespace spp;
using spp::test::mode;
using spp::test::rel;

namespace {

const double kSqrt7 = std::sqrt(7.0);

ModeSolution lossless_mode(Parity p) {
  return solve_dispersion(p, {}, make_media({1.5, 0.0}, Complex(-12.0, 0.0), 3e15));
}

}  // namespace

TEST_CASE("ladder means") {
  SUBCASE("coherent state") {
    const auto s = SppState::coherent(kSqrt7, 1.5);
    CHECK(rel(ladder_mean(s), std::polar(kSqrt7, 1.5)) < 1e-15);
  }
  SUBCASE("xi = 0 reduces to the coherent mean exactly") {
    const SppState squeezed{kSqrt7, 1.5, 0.0, 0.9};
    for (auto form : {SqueezeForm::AsPrinted, SqueezeForm::Textbook})
      CHECK(ladder_mean(squeezed, form) == ladder_mean(SppState::coherent(kSqrt7, 1.5)));
  }
  SUBCASE("real alpha and xi give e^{-|xi|} |alpha|") {
    const SppState s{2.0, 0.0, 0.7, 0.0};
    CHECK(ladder_mean(s).real() == doctest::Approx(std::exp(-0.7) * 2.0).epsilon(1e-14));
    CHECK(ladder_mean(s).imag() == 0.0);
  }
  SUBCASE("printed and textbook forms differ only through arg alpha") {
    const SppState s{kSqrt7, 1.5, 1.0, 0.0};
    const Complex printed = ladder_mean(s, SqueezeForm::AsPrinted);
    const Complex textbook = ladder_mean(s, SqueezeForm::Textbook);
    CHECK(rel(printed, s.alpha() * (s.mu() - s.nu())) < 1e-15);
    CHECK(rel(textbook, s.mu() * s.alpha() - s.nu() * std::conj(s.alpha())) < 1e-15);
    CHECK(std::abs(printed - textbook) > 0.1);
  }
  SUBCASE("squeeze coefficients satisfy mu^2 - |nu|^2 = 1") {
    for (double r : {0.0, 0.3, 1.0, 2.5}) {
      const SppState s{1.0, 0.0, r, 0.4};
      CHECK(std::abs(s.mu() * s.mu() - std::norm(s.nu()) - 1.0) < 1e-12 * s.mu() * s.mu());
    }
  }
  SUBCASE("negative magnitudes are rejected") {
    CHECK_THROWS_AS(ladder_mean(SppState{-1.0, 0.0, 0.0, 0.0}), Error);
    CHECK_THROWS_AS(ladder_mean(SppState{1.0, 0.0, -0.1, 0.0}), Error);
    CHECK_THROWS_AS(ladder_mean(SppState{NAN, 0.0, 0.0, 0.0}), Error);
  }
}

TEST_CASE("Langevin mean propagation") {
  const auto sol = mode(Parity::Antisymmetric, 0.9726, -0.08);
  const Complex a0(0.3, -1.2);
  CHECK(langevin_mean(sol, 0.0, a0) == a0);
  const double x1 = 1e-7, x2 = 9e-7;
  const double slope = (std::log(std::abs(langevin_mean(sol, x2, a0))) -
                        std::log(std::abs(langevin_mean(sol, x1, a0)))) / (x2 - x1);
  CHECK(slope == doctest::Approx(-sol.k_spp.imag()).epsilon(1e-12));
  CHECK(slope > 0.0);
}

TEST_CASE("field bracket") {
  SUBCASE("continuous across both faces at a root") {
    for (const auto& sol : {lossless_mode(Parity::Symmetric), lossless_mode(Parity::Antisymmetric),
                            mode(Parity::Symmetric, 0.9726, -0.08), mode(Parity::Antisymmetric, 1.9726, 0.05)}) {
      for (double face : {0.0, sol.geom.d}) {
        const double h = 1e-15;
        CHECK(rel(h_field_bracket(sol, face + h), h_field_bracket(sol, face - h)) < 1e-6);
      }
    }
  }
  SUBCASE("vanishes far from the film") {
    const auto sol = mode(Parity::Symmetric, 1.9726, -0.081);
    const double far = 60.0 / sol.nu0.real();
    CHECK(std::abs(h_field_bracket(sol, -far)) < 1e-15 * std::abs(h_field_bracket(sol, 0.0)));
    CHECK(std::abs(h_field_bracket(sol, sol.geom.d + far)) < 1e-15 * std::abs(h_field_bracket(sol, 0.0)));
  }
  SUBCASE("equals the finite-difference curl of the vector-potential mode") {
    for (const auto& sol : {mode(Parity::Symmetric, 0.9726, -0.08), mode(Parity::Antisymmetric, 1.9726, -0.081)})
      for (double z : sample_depths(sol, 20)) CHECK(curl_deviation(sol, 2e-8, z) < 1e-6);
  }
}

TEST_CASE("H mean") {
  const auto sol = mode(Parity::Symmetric, 0.9726, -0.08);
  const auto grid = default_field_grid(sol, 50);
  const SppState state = SppState::coherent(kSqrt7, 1.5);

  SUBCASE("default grid spans five growth lengths on both faces") {
    REQUIRE(grid.size() == 100);
    CHECK(grid.front().x == 0.0);
    CHECK(grid[49].x == doctest::Approx(5.0 / std::abs(sol.k_spp.imag())).epsilon(1e-15));
    CHECK(grid[0].z == 0.0);
    CHECK(grid[50].z == sol.geom.d);
  }

  SUBCASE("samples are the prefactor times propagation times bracket") {
    const auto f = h_field_mean(sol, state, grid);
    CHECK(f.regime == Regime::Amplified);
    for (std::size_t i = 0; i < grid.size(); i += 7) {
      const Complex want = f.prefactor * std::exp(Complex(0, 1) * sol.k_spp * grid[i].x) *
                           ladder_mean(state) * h_field_bracket(sol, grid[i].z);
      CHECK(rel(f.values[i], want) < 1e-14);
    }
  }

  SUBCASE("envelope grows along x for an amplified mode") {
    const auto f = h_field_mean(sol, state, grid);
    for (std::size_t i = 1; i < 50; ++i) CHECK(std::abs(f.values[i]) > std::abs(f.values[i - 1]));
  }

  SUBCASE("envelope decays along x for an attenuated mode") {
    const auto att = mode(Parity::Antisymmetric, 1.9726, 0.05);
    const auto g = default_field_grid(att, 50);
    const auto f = h_field_mean(att, state, g);
    for (std::size_t i = 1; i < 50; ++i) CHECK(std::abs(f.values[i]) < std::abs(f.values[i - 1]));
  }

  SUBCASE("linear in the ladder mean") {
    const Complex c(-0.4, 2.2);
    const Complex a = ladder_mean(state);
    const auto base = h_field_mean_from_ladder(sol, a, grid);
    const auto scaled = h_field_mean_from_ladder(sol, c * a, grid);
    for (std::size_t i = 0; i < grid.size(); ++i) CHECK(rel(scaled.values[i], c * base.values[i]) < 1e-14);
  }

  SUBCASE("coherent and xi = 0 squeezed samples coincide") {
    const auto a = h_field_mean(sol, state, grid);
    const auto b = h_field_mean(sol, SppState{kSqrt7, 1.5, 0.0, 0.3}, grid);
    for (std::size_t i = 0; i < grid.size(); ++i) CHECK(a.values[i] == b.values[i]);
  }

  SUBCASE("comparing a state with itself gives zero") {
    const auto d = compare_states(sol, state, state, grid);
    for (Complex v : d.values) CHECK(v == Complex{});
  }

  SUBCASE("comparison scales with the ladder-mean difference") {
    const SppState squeezed{kSqrt7, 1.5, 1.0, 0.0};
    const auto d = compare_states(sol, state, squeezed, grid);
    const auto unit = h_field_mean_from_ladder(sol, Complex(1.0, 0.0), grid);
    const Complex delta = ladder_mean(state) - ladder_mean(squeezed);
    CHECK(rel(d.ladder, delta) < 1e-15);
    for (std::size_t i = 0; i < grid.size(); ++i) CHECK(rel(d.values[i], delta * unit.values[i]) < 1e-13);
  }

  SUBCASE("neutral modes have no prefactor") {
    const auto neutral = lossless_mode(Parity::Symmetric);
    REQUIRE(neutral.k_spp.imag() == 0.0);
    CHECK_THROWS_AS(h_field_prefactor(neutral), Error);
    CHECK_THROWS_AS(default_field_grid(neutral), Error);
    CHECK(std::isfinite(std::abs(h_field_bracket(neutral, 0.0))));
  }

  SUBCASE("empty grid gives empty samples") {
    const auto f = h_field_mean(sol, state, std::span<const GridPoint>{});
    CHECK(f.values.empty());
  }
}
