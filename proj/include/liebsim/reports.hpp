#ifndef LIEBSIM_REPORTS_HPP
#define LIEBSIM_REPORTS_HPP

#include "liebsim/circuit.hpp"

#include <json.hpp>
#include <string>

namespace liebsim {

// Input ranges for the noise budget: 1/f amplitudes at 1 Hz, with the
// quasi-static excursion taken as +-5*A before propagation.
struct NoiseBudgetInput {
    double a_flux_lo = 1e-6;  // A_Phi/Phi0 lower bound
    double a_flux_hi = 1e-5;  // A_Phi/Phi0 upper bound
    double a_ic_lo = 1e-7;    // A_I/I lower bound
    double a_ic_hi = 1e-6;    // A_I/I upper bound
    double f_min = 1.0;       // spectral cutoff, Hz
    double f_max = 1e9;       // spectral cutoff, Hz
};

// Eigenfrequencies, ESR table, zero-point fluxes, coupling matrix,
// parametric strengths and the plasma-frequency margin, all in ordinary
// frequency units.
nlohmann::ordered_json circuit_report(const EigenmodeSolution& sol, const CircuitParams& p);

// Variance/range of both 1/f channels and the propagated disturbance ranges.
nlohmann::ordered_json noise_report(const EigenmodeSolution& sol, const CircuitParams& p,
                                    const NoiseBudgetInput& in);

void write_json(const std::string& path, const nlohmann::ordered_json& j);

} // namespace liebsim

#endif
