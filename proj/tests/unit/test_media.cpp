#include "doctest.h"
#include "support.hpp"

using namespace spp;
using spp::test::rel;

TEST_CASE("dielectric permittivity is the square of the complex index") {
  const Complex eps = eps_dielectric({1.9726, -0.081});
  CHECK(rel(eps, {3.88458976, -0.31956120000000001}) < 1e-15);
  CHECK(eps_dielectric({1.5, 0.0}) == Complex(2.25, 0.0));
}

TEST_CASE("Drude permittivity matches the high-precision reference") {
  const Complex eps = eps_metal_drude(DrudeMetalSpec{}, 4.8e15);
  CHECK(rel(eps, {-7.5298211973067717, 0.11106538017326526}) < 1e-14);
}

TEST_CASE("Drude permittivity limits") {
  SUBCASE("collisionless metal is real and vanishes at the plasma frequency") {
    const DrudeMetalSpec lossless{14.02e15, 0.0};
    CHECK(eps_metal_drude(lossless, 7e15).imag() == 0.0);
    CHECK(std::abs(eps_metal_drude(lossless, 14.02e15)) < 1e-15);
  }
  SUBCASE("absorbing for gamma > 0 at every frequency") {
    for (double w : {1e14, 1e15, 4.8e15, 2e16}) CHECK(eps_metal_drude(DrudeMetalSpec{}, w).imag() > 0.0);
  }
  SUBCASE("omega <= 0 is rejected") {
    CHECK_THROWS_AS(eps_metal_drude(DrudeMetalSpec{}, 0.0), Error);
    CHECK_THROWS_AS(eps_metal_drude(DrudeMetalSpec{}, -1.0), Error);
  }
}

TEST_CASE("medium classification follows the sign of Im eps") {
  CHECK(classify_medium(eps_dielectric({0.9726, -0.08})) == MediumClass::Gain);
  CHECK(classify_medium(eps_dielectric({1.9726, 0.05})) == MediumClass::Loss);
  CHECK(classify_medium(eps_dielectric({1.9726, 0.0})) == MediumClass::Neutral);
  CHECK(classify_medium(eps_metal_drude(DrudeMetalSpec{}, 4.8e15)) == MediumClass::Loss);
}

TEST_CASE("invalid media are rejected with InvalidArgument") {
  const auto code_of = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::QuadratureFailure;
  };
  CHECK(code_of([] { validate(DielectricSpec{NAN, 0.0}); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { validate(DrudeMetalSpec{-1.0, 0.0}); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { validate(DrudeMetalSpec{1e16, -1.0}); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { make_media({1.0, 0.0}, Complex(0.0, 0.0), 1e15); }) ==
        ErrorCode::InvalidArgument);
  CHECK(code_of([] { make_media({1.0, 0.0}, DrudeMetalSpec{}, 0.0); }) ==
        ErrorCode::InvalidArgument);
}

TEST_CASE("direct metal permittivity is used as given") {
  const MediumSet m = make_media({1.5, 0.0}, Complex(-10.0, 0.5), 3e15);
  CHECK(m.eps_m == Complex(-10.0, 0.5));
  CHECK(m.k0() == doctest::Approx(3e15 / 299792458.0).epsilon(1e-15));
}
