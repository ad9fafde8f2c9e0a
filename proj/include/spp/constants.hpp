#pragma once

#include <complex>

namespace spp {

using Complex = std::complex<double>;

// CODATA 2018.
namespace constants {
inline constexpr double c = 299792458.0;             // m/s
inline constexpr double hbar = 1.054571817e-34;      // J s
inline constexpr double eps0 = 8.8541878128e-12;     // F/m
}  // namespace constants

}  // namespace spp
