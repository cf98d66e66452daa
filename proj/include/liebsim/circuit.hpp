#ifndef LIEBSIM_CIRCUIT_HPP
#define LIEBSIM_CIRCUIT_HPP

#include <Eigen/Dense>
#include <array>
#include <string>
#include <vector>

namespace liebsim {

// Physical unit-cell parameters: three transmission-line resonators grounded
// through a common SQUID.  SI units except where the field name says
// otherwise (fluxes are given in units of Phi0 = h/2e).
struct CircuitParams {
    double l = 4.1e-7;        // inductance per length, H/m
    double c = 1.6e-10;       // capacitance per length, F/m
    std::array<double, 3> length = {5.6e-3, 6.8e-3, 4.1e-3}; // L_A, L_B, L_C in m
    double I_J0 = 75.5e-6;    // maximal SQUID critical current, A
    double Phi_dc = 0.37;     // d.c. flux bias, units of Phi0
    double I_J = 30e-6;       // effective critical current, A
    double C_J = 0.5e-12;     // junction capacitance, F
    double Phi_ac_CA = 0.013; // a.c. amplitude of the 2*Delta tone, units of Phi0
    double Phi_ac_BA = 0.009; // a.c. amplitude of the Delta tone, units of Phi0
    double theta_CA = 0.0;    // tone phase, rad
    double theta_BA = 0.0;    // tone phase, rad

    double velocity() const; // 1/sqrt(l c)
    double E_J() const;      // I_J * phi0, J
    double E_J0() const;     // I_J0 * phi0, J
    double L_J() const;      // phi0^2 / E_J, H

    // Throws std::invalid_argument on non-positive parameters or when I_J
    // disagrees with I_J0*cos(pi*Phi_dc) by more than 5%.  Returns warnings
    // (a.c./d.c. amplitude ratio above 0.1) without failing.
    std::vector<std::string> validate() const;
};

// Lowest three eigenmodes of the shorted-TLR + SQUID unit cell.  Mode m is
// the root of the boundary-condition determinant nearest the bare lambda/2
// wavenumber pi/L_m, so mode labels follow the TLR labels.
struct EigenmodeSolution {
    Eigen::Vector3d k;         // 1/m
    Eigen::Vector3d omega;     // rad/s, omega = v*k
    Eigen::Matrix3d coeffs;    // coeffs(alpha, m) = C_{alpha,m}, normalized
    Eigen::Vector3d node_flux; // f_{alpha,m}(L_alpha), common across alpha
    Eigen::Vector3d phi_zpf;   // phi^m = node_flux * sqrt(hbar/(2 omega c)), Wb
};

// Scans the determinant of the coupled boundary-condition system on a
// wavenumber grid around each bare mode, brackets sign changes and bisects
// to relative 1e-12.  Throws on bracketing failure or (near-)degenerate
// roots instead of silently picking one.
EigenmodeSolution solve_eigenmodes(const CircuitParams& p);

// Kirchhoff current balance and node-flux continuity residual of a solved
// mode set (relative).
double boundary_residual(const EigenmodeSolution& sol, const CircuitParams& p);

// Max deviation of the mode inner products (including the C_J/c boundary
// term) from the identity.
double orthonormality_residual(const EigenmodeSolution& sol, const CircuitParams& p);

// Energy-storing ratio of mode m inside TLR alpha, in [0, 1].  Energy
// integrals by composite Simpson quadrature; the SQUID boundary energy
// enters the denominator.
double esr(const EigenmodeSolution& sol, const CircuitParams& p, int mode, int tlr);

// Static SQUID-induced mixing T_mn^dc = (phi^m phi^n/phi0^2) E_J0
// cos(pi Phi_dc) / hbar between distinct modes, rad/s.
double dc_mixing(const EigenmodeSolution& sol, const CircuitParams& p, int m, int n);

// Largest quartic Josephson term (1/48)(phi^j/phi0)^4 E_J0 cos(pi Phi_dc)
// relative to the smallest pairwise dc mixing.
double fourth_order_ratio(const EigenmodeSolution& sol, const CircuitParams& p);

enum class TonePair { BA, CA };

// Parametric hopping strength of one modulation tone under the rotating-wave
// approximation (cosine tone contributes half its amplitude):
//   T = (1/4) (Phi_ac/phi0) (phi^a phi^b/phi0^2) E_J0 sin(pi Phi_dc) / hbar.
// The hopping phase equals the tone's initial phase.
double parametric_strength(const EigenmodeSolution& sol, const CircuitParams& p, TonePair pair);

// sqrt(8 E_C E_J)/hbar with the Cooper-pair charging energy
// E_C = (2e)^2 / (2 C_J).
double plasma_frequency(const CircuitParams& p);

// 1/f spectrum S(w) = 2 pi A^2 / w between the cutoffs.
struct NoiseSpec {
    double amplitude = 0.0; // A_O, spectrum amplitude at 1 Hz
    double omega_min = 0.0; // rad/s
    double omega_max = 0.0; // rad/s
};

struct NoiseVariance {
    double variance = 0.0;    // A^2 ln(w_max/w_min)
    double range_bound = 0.0; // 5*A: quasi-static excursion estimate
};

NoiseVariance noise_variance(const NoiseSpec& n);

struct Disturbance {
    double delta_omega = 0.0;   // worst-mode on-site shift, rad/s
    double delta_hopping = 0.0; // worst-pair parametric-strength shift, rad/s
};

// Quasi-static flux offset dPhi (units of Phi0) propagated to first order:
// the diagonal part of the shifted Josephson energy moves each mode by
// (phi^m/phi0)^2 (dPhi*2pi) E_J0 sin(pi Phi_dc) / (2 hbar), and the a.c.
// coupling picks up the cos-factor correction T * cot(pi Phi_dc) * pi * dPhi.
Disturbance flux_noise_disturbance(const EigenmodeSolution& sol, const CircuitParams& p,
                                   double dPhi_Phi0);

// Critical-current offset dI/I propagated through E_J0: every Josephson
// coefficient scales linearly, so delta_omega = T_mm^dc * dI/I and
// delta_hopping = T_pair * dI/I.
Disturbance critical_current_noise_disturbance(const EigenmodeSolution& sol,
                                               const CircuitParams& p, double dI_over_I);

} // namespace liebsim

#endif
