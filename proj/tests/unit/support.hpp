#pragma once

#include <cmath>
#include <complex>

#include "spp/fields.hpp"

namespace spp::test {

inline double rel(Complex got, Complex want) {
  return std::abs(got - want) / std::abs(want);
}

inline constexpr double kOmega = 4.8e15;

inline MediumSet media(double n_real, double n_imag, double omega = kOmega) {
  return make_media(DielectricSpec{n_real, n_imag}, DrudeMetalSpec{}, omega);
}

inline ModeSolution mode(Parity p, double n_real, double n_imag, double d = 60e-9) {
  return solve_dispersion(p, SlabGeometry{d}, media(n_real, n_imag));
}

}  // namespace spp::test
