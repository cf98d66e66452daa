#ifndef LIEBSIM_STEADY_STATE_HPP
#define LIEBSIM_STEADY_STATE_HPP

#include "liebsim/lattice.hpp"

#include <vector>

namespace liebsim {

// Coherent pump P (rad/s) with monochromatic detuning Omega_P and uniform
// decay rate kappa.
struct PumpConfig {
    Eigen::VectorXcd pump;
    double detuning = 0.0; // Omega_P, rad/s
    double kappa = 0.0;    // rad/s
    std::vector<SiteIndex> support;

    void validate() const;
};

struct SteadyStateResult {
    Eigen::VectorXcd amplitudes; // <a>
    Eigen::VectorXd sspn;        // |<a>|^2 per site
    double residual = 0.0;       // ||(B - (Omega_P + i kappa/2) I) <a> + P||
};

// Solves [B - (Omega_P + i kappa/2) I] <a> + P = 0 by dense LU with partial
// pivoting (deterministic).  Throws on a singular system, which needs
// kappa = 0 with Omega_P on an eigenvalue.
SteadyStateResult steady_state(const RealSpaceHamiltonian& h, const PumpConfig& cfg);

enum class PumpKind { single_b, rm1, rm2, rm3 };

// single_b drives site B_{anchor} with amplitude T_P; the rm kinds drive
// with T_P times the ring-mode coefficients.
PumpConfig make_pump(PumpKind kind, SiteIndex anchor, double T_P, const LiebLatticeSpec& spec,
                     double detuning, double kappa);

// Ratio of the SSPN on the pump-support sites to the SSPN over the region
// made of the pump-support unit cells plus their 4-connected neighbor cells
// (all three sublattice sites of each such cell).
double localization_factor(const SteadyStateResult& result, const PumpConfig& cfg,
                           const LiebLatticeSpec& spec);

struct LocalizationSweepRow {
    double tbc_dc = 0.0; // rad/s
    double lf_single = 0.0;
    double lf_rm1 = 0.0;
    double lf_rm2 = 0.0;
    double lf_rm3 = 0.0;
};

// For each T_BC^dc sets tprime = (T_BC^dc)^2/(3*Delta), rebuilds the lattice
// and solves all four pump cases.  single/rm1/rm2 run on the base gauge;
// rm3 runs at gauge_theta = pi/3.
std::vector<LocalizationSweepRow> localization_sweep(const std::vector<double>& tbc_dc_grid,
                                                     double delta, const LiebLatticeSpec& base,
                                                     SiteIndex anchor, double T_P, double kappa,
                                                     double detuning);

} // namespace liebsim

#endif
