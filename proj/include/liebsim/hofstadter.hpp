#ifndef LIEBSIM_HOFSTADTER_HPP
#define LIEBSIM_HOFSTADTER_HPP

#include "liebsim/lattice.hpp"

#include <numbers>
#include <vector>

namespace liebsim {

// Open-boundary spectrum as a function of the gauge parameter theta.
struct ButterflySpectrum {
    std::vector<double> thetas;
    Eigen::MatrixXd energies; // energies(i, :) ascending spectrum at thetas[i]
    LiebLatticeSpec base;     // gauge_theta field is the per-row override
};

// Full dense diagonalization of build_lieb for every theta in the grid.
// Requires open boundary; rejects lattices above `dim_cap` sites.
ButterflySpectrum butterfly(const LiebLatticeSpec& base, const std::vector<double>& theta_grid,
                            int dim_cap = 5000);

// `points` uniform values on [0, theta_max]; the default covers one flux
// period [0, pi].
std::vector<double> uniform_theta_grid(int points = 201, double theta_max = std::numbers::pi);

// Per-theta width (max - min) of the eigenvalues inside [-window, +window].
std::vector<double> middle_cluster_width(const ButterflySpectrum& spectrum, double window);

} // namespace liebsim

#endif
