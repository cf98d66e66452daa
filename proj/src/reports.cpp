#include "liebsim/reports.hpp"
#include "liebsim/units.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

namespace liebsim {

using nlohmann::ordered_json;

ordered_json circuit_report(const EigenmodeSolution& sol, const CircuitParams& p)
{
    static const char* mode_names[3] = {"A", "B", "C"};

    ordered_json j;
    for (int m = 0; m < 3; ++m) {
        j["eigenfrequencies_GHz"][mode_names[m]] = to_ghz(sol.omega(m));
        j["wavenumbers_per_m"][mode_names[m]] = sol.k(m);
        j["phi_zpf_over_phi0"][mode_names[m]] = sol.phi_zpf(m) / phi0_reduced;
    }
    for (int m = 0; m < 3; ++m)
        for (int a = 0; a < 3; ++a)
            j["esr"][mode_names[m]][mode_names[a]] = esr(sol, p, m, a);
    for (int m = 0; m < 3; ++m)
        for (int n = 0; n < 3; ++n)
            if (m != n)
                j["T_dc_MHz"][std::string(mode_names[m]) + mode_names[n]] =
                    to_mhz(dc_mixing(sol, p, m, n));

    const double t_ba = parametric_strength(sol, p, TonePair::BA);
    const double t_ca = parametric_strength(sol, p, TonePair::CA);
    j["parametric_MHz"]["BA"] = to_mhz(t_ba);
    j["parametric_MHz"]["CA"] = to_mhz(t_ca);
    j["parametric_phase_rad"]["BA"] = p.theta_BA;
    j["parametric_phase_rad"]["CA"] = p.theta_CA;
    // Amplitudes that would realize a 10 MHz hopping, strength being linear
    // in the tone amplitude.
    j["Phi_ac_for_10MHz_Phi0"]["BA"] = p.Phi_ac_BA * from_mhz(10.0) / t_ba;
    j["Phi_ac_for_10MHz_Phi0"]["CA"] = p.Phi_ac_CA * from_mhz(10.0) / t_ca;

    j["fourth_order_ratio"] = fourth_order_ratio(sol, p);
    const double wp = plasma_frequency(p);
    j["plasma_frequency_GHz"] = to_ghz(wp);
    j["plasma_margin_over_2Delta"] = wp / (2.0 * from_ghz(2.0));
    j["boundary_residual"] = boundary_residual(sol, p);
    j["orthonormality_residual"] = orthonormality_residual(sol, p);
    return j;
}

ordered_json noise_report(const EigenmodeSolution& sol, const CircuitParams& p,
                          const NoiseBudgetInput& in)
{
    ordered_json j;
    const double wmin = from_hz(in.f_min);
    const double wmax = from_hz(in.f_max);

    auto channel = [&](double a_lo, double a_hi) {
        ordered_json ch;
        const NoiseVariance lo = noise_variance({a_lo, wmin, wmax});
        const NoiseVariance hi = noise_variance({a_hi, wmin, wmax});
        ch["amplitude_at_1Hz"] = {a_lo, a_hi};
        ch["std_dev"] = {std::sqrt(lo.variance), std::sqrt(hi.variance)};
        ch["quasi_static_range"] = {lo.range_bound, hi.range_bound};
        return ch;
    };
    j["flux_channel_Phi0"] = channel(in.a_flux_lo, in.a_flux_hi);
    j["critical_current_channel_rel"] = channel(in.a_ic_lo, in.a_ic_hi);

    const Disturbance flux_lo = flux_noise_disturbance(sol, p, 5.0 * in.a_flux_lo);
    const Disturbance flux_hi = flux_noise_disturbance(sol, p, 5.0 * in.a_flux_hi);
    j["flux_disturbance"]["delta_omega_MHz"] = {to_mhz(flux_lo.delta_omega),
                                                to_mhz(flux_hi.delta_omega)};
    j["flux_disturbance"]["delta_T_MHz"] = {to_mhz(flux_lo.delta_hopping),
                                            to_mhz(flux_hi.delta_hopping)};

    const Disturbance ic_lo = critical_current_noise_disturbance(sol, p, 5.0 * in.a_ic_lo);
    const Disturbance ic_hi = critical_current_noise_disturbance(sol, p, 5.0 * in.a_ic_hi);
    j["critical_current_disturbance"]["delta_omega_MHz"] = {to_mhz(ic_lo.delta_omega),
                                                            to_mhz(ic_hi.delta_omega)};
    j["critical_current_disturbance"]["delta_T_MHz"] = {to_mhz(ic_lo.delta_hopping),
                                                        to_mhz(ic_hi.delta_hopping)};
    return j;
}

void write_json(const std::string& path, const ordered_json& j)
{
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot open output file '" + path + "'");
    out << j.dump(2) << '\n';
}

} // namespace liebsim
