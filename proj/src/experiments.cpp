#include "liebsim/experiments.hpp"
#include "liebsim/units.hpp"

#include <numbers>

namespace liebsim {

LiebLatticeSpec lattice_from_config(const Config& cfg)
{
    LiebLatticeSpec spec;
    spec.nx = cfg.get_int("lattice", "nx", 12);
    spec.ny = cfg.get_int("lattice", "ny", 12);
    spec.hopping_T = from_mhz(cfg.get_double("lattice", "T_MHz", 10.0));
    spec.gauge_theta = std::numbers::pi * cfg.get_double("lattice", "theta_over_pi", 0.0);
    spec.nnn_tprime = from_mhz(cfg.get_double("lattice", "tprime_MHz", 0.6));
    const std::string boundary = cfg.get_string("lattice", "boundary", "open");
    if (boundary == "open")
        spec.boundary = Boundary::open;
    else if (boundary == "periodic")
        spec.boundary = Boundary::periodic;
    else
        throw ConfigError("config: key 'lattice.boundary' must be open or periodic, got '" +
                          boundary + "'");
    spec.validate();
    return spec;
}

PumpKind pump_kind_from_string(const std::string& name)
{
    if (name == "single_B" || name == "single_b" || name == "single")
        return PumpKind::single_b;
    if (name == "rm1" || name == "RM1")
        return PumpKind::rm1;
    if (name == "rm2" || name == "RM2")
        return PumpKind::rm2;
    if (name == "rm3" || name == "RM3")
        return PumpKind::rm3;
    throw ConfigError("config: key 'pump.kind' must be single_B, rm1, rm2 or rm3, got '" +
                      name + "'");
}

std::string to_string(PumpKind kind)
{
    switch (kind) {
    case PumpKind::single_b: return "single_B";
    case PumpKind::rm1: return "rm1";
    case PumpKind::rm2: return "rm2";
    case PumpKind::rm3: return "rm3";
    }
    return "?";
}

PumpSettings pump_from_config(const Config& cfg)
{
    PumpSettings s;
    s.kind = pump_kind_from_string(cfg.get_string("pump", "kind", "rm1"));
    s.anchor.m = cfg.get_int("pump", "anchor_m", 6);
    s.anchor.n = cfg.get_int("pump", "anchor_n", 6);
    s.T_P = from_mhz(cfg.get_double("pump", "TP_MHz", 1.0));
    s.kappa = from_khz(cfg.get_double("pump", "kappa_kHz", 100.0));
    s.detuning = from_mhz(cfg.get_double("pump", "omegaP_MHz", 0.0));
    return s;
}

CircuitParams circuit_from_config(const Config& cfg)
{
    CircuitParams p; // defaults are the representative parameter set
    p.l = cfg.get_double("circuit", "l_H_per_m", p.l);
    p.c = cfg.get_double("circuit", "c_F_per_m", p.c);
    p.length[0] = 1e-3 * cfg.get_double("circuit", "L_A_mm", p.length[0] * 1e3);
    p.length[1] = 1e-3 * cfg.get_double("circuit", "L_B_mm", p.length[1] * 1e3);
    p.length[2] = 1e-3 * cfg.get_double("circuit", "L_C_mm", p.length[2] * 1e3);
    p.I_J0 = 1e-6 * cfg.get_double("circuit", "I_J0_uA", p.I_J0 * 1e6);
    p.Phi_dc = cfg.get_double("circuit", "Phi_dc_Phi0", p.Phi_dc);
    p.I_J = 1e-6 * cfg.get_double("circuit", "I_J_uA", p.I_J * 1e6);
    p.C_J = 1e-12 * cfg.get_double("circuit", "C_J_pF", p.C_J * 1e12);
    p.Phi_ac_CA = cfg.get_double("circuit", "Phi_ac_CA_Phi0", p.Phi_ac_CA);
    p.Phi_ac_BA = cfg.get_double("circuit", "Phi_ac_BA_Phi0", p.Phi_ac_BA);
    p.theta_CA = cfg.get_double("circuit", "theta_CA_rad", p.theta_CA);
    p.theta_BA = cfg.get_double("circuit", "theta_BA_rad", p.theta_BA);
    return p;
}

NoiseBudgetInput noise_input_from_config(const Config& cfg)
{
    NoiseBudgetInput in;
    in.a_flux_lo = cfg.get_double("noise", "A_flux_lo_Phi0", in.a_flux_lo);
    in.a_flux_hi = cfg.get_double("noise", "A_flux_hi_Phi0", in.a_flux_hi);
    in.a_ic_lo = cfg.get_double("noise", "A_Ic_lo_rel", in.a_ic_lo);
    in.a_ic_hi = cfg.get_double("noise", "A_Ic_hi_rel", in.a_ic_hi);
    in.f_min = cfg.get_double("noise", "f_min_Hz", in.f_min);
    in.f_max = cfg.get_double("noise", "f_max_Hz", in.f_max);
    return in;
}

SweepSettings sweep_from_config(const Config& cfg)
{
    SweepSettings s;
    s.tbc_from = from_mhz(cfg.get_double("sweep", "tbc_from_MHz", 0.0));
    s.tbc_to = from_mhz(cfg.get_double("sweep", "tbc_to_MHz", 80.0));
    s.points = cfg.get_int("sweep", "points", 17);
    s.delta = from_ghz(cfg.get_double("sweep", "Delta_GHz", 2.0));
    return s;
}

} // namespace liebsim
