#ifndef LIEBSIM_IO_HPP
#define LIEBSIM_IO_HPP

#include "liebsim/bands.hpp"
#include "liebsim/hofstadter.hpp"
#include "liebsim/steady_state.hpp"

#include <string>
#include <vector>

namespace liebsim {

// 12 significant digits, scientific; fixed formatting keeps identical runs
// byte-identical.
std::string format_sci(double v);

// bands.csv: kx, ky, E_minus_MHz, E_zero_MHz, E_plus_MHz
void write_bands_csv(const std::string& path, const BandSurface& surface);

// butterfly.csv: theta_over_pi, eigen_index, energy_MHz
void write_butterfly_csv(const std::string& path, const ButterflySpectrum& spectrum);

// sspn.csv: m, n, sublattice, re_a, im_a, sspn
void write_sspn_csv(const std::string& path, const SteadyStateResult& result,
                    const LiebLatticeSpec& spec);

// locfactor.csv: tbc_dc_MHz, lf_single, lf_rm1, lf_rm2, lf_rm3
void write_locfactor_csv(const std::string& path, const std::vector<LocalizationSweepRow>& rows);

// ringmodes.csv: kind, m, n, sublattice, re, im (nonzero amplitudes only)
struct RingModeRecord {
    std::string kind;
    Eigen::VectorXcd state;
};
void write_ringmodes_csv(const std::string& path, const std::vector<RingModeRecord>& modes,
                         const LiebLatticeSpec& spec);

// Coordinate-list text dump of a complex matrix: row, col, re, im per
// nonzero entry.
void write_matrix_coo(const std::string& path, const Eigen::MatrixXcd& mat);

} // namespace liebsim

#endif
