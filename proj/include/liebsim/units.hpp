#ifndef LIEBSIM_UNITS_HPP
#define LIEBSIM_UNITS_HPP

#include <cmath>
#include <numbers>

// All internal quantities are angular frequencies in rad/s (SI elsewhere).
// I/O uses ordinary frequency with explicit unit suffixes.

namespace liebsim {

inline constexpr double two_pi = 2.0 * std::numbers::pi;

// CODATA 2018 exact values
inline constexpr double hbar = 1.054571817e-34;        // J s
inline constexpr double e_charge = 1.602176634e-19;    // C
inline constexpr double phi0_reduced = hbar / (2.0 * e_charge);   // Wb, hbar/2e
inline constexpr double Phi0 = two_pi * phi0_reduced;             // Wb, h/2e

constexpr double from_hz(double f) { return two_pi * f; }
constexpr double from_khz(double f) { return two_pi * 1e3 * f; }
constexpr double from_mhz(double f) { return two_pi * 1e6 * f; }
constexpr double from_ghz(double f) { return two_pi * 1e9 * f; }

constexpr double to_hz(double w) { return w / two_pi; }
constexpr double to_khz(double w) { return w / (two_pi * 1e3); }
constexpr double to_mhz(double w) { return w / (two_pi * 1e6); }
constexpr double to_ghz(double w) { return w / (two_pi * 1e9); }

} // namespace liebsim

#endif
