#ifndef LIEBSIM_EXPERIMENTS_HPP
#define LIEBSIM_EXPERIMENTS_HPP

#include "liebsim/circuit.hpp"
#include "liebsim/config.hpp"
#include "liebsim/lattice.hpp"
#include "liebsim/reports.hpp"
#include "liebsim/steady_state.hpp"

namespace liebsim {

// Configuration ingestion.  Defaults reproduce the reference experiment:
// 12x12 open lattice, T/2pi = 10 MHz, tprime/2pi = 0.6 MHz, pump anchored
// at cell [6,6] with T_P/2pi = 1 MHz and kappa/2pi = 100 kHz, plus the
// representative circuit parameters.

LiebLatticeSpec lattice_from_config(const Config& cfg);

struct PumpSettings {
    PumpKind kind = PumpKind::rm1;
    SiteIndex anchor{6, 6, Sublattice::A};
    double T_P = 0.0;      // rad/s
    double kappa = 0.0;    // rad/s
    double detuning = 0.0; // rad/s
};

PumpSettings pump_from_config(const Config& cfg);

CircuitParams circuit_from_config(const Config& cfg);

NoiseBudgetInput noise_input_from_config(const Config& cfg);

struct SweepSettings {
    double tbc_from = 0.0; // rad/s
    double tbc_to = 0.0;   // rad/s
    int points = 17;
    double delta = 0.0;    // rad/s
};

SweepSettings sweep_from_config(const Config& cfg);

PumpKind pump_kind_from_string(const std::string& name);
std::string to_string(PumpKind kind);

} // namespace liebsim

#endif
