#ifndef LIEBSIM_BANDS_HPP
#define LIEBSIM_BANDS_HPP

#include <Eigen/Dense>
#include <array>
#include <vector>

namespace liebsim {

// Momentum-space Hamiltonian in the full-k convention: nearest-neighbor
// entries T*(1+e^{i kx}) (A-B) and T*(1+e^{-i ky}) (A-C), so the band
// touching sits at (pi, pi).  The NNN channels add a diagonal
// 2*tprime*diag(0, -cos(kx-ky), +cos(kx-ky)).
Eigen::Matrix3cd bloch_hamiltonian(double kx, double ky, double T, double tprime);

// Closed-form bands of the ideal (tprime = 0) lattice, ascending:
// -2T*sqrt(cos^2(kx/2)+cos^2(ky/2)), 0, +2T*sqrt(...).
Eigen::Vector3d analytic_bands(double kx, double ky, double T);

// Eigenvalue sheets on the uniform grid k_i = 2*pi*i/nk, i = 0..nk-1,
// which covers the Brillouin zone once and contains (pi,pi) for even nk.
struct BandSurface {
    int nk = 0;
    std::array<Eigen::MatrixXd, 3> energies; // [band](i,j), ascending per k

    double k_at(int i) const;
};

// Diagonalizes bloch_hamiltonian on the nk x nk grid.  k-points are
// independent; output is indexed by (i,j), never by completion order.
BandSurface band_grid(int nk, double T, double tprime);

struct Flatness {
    double width = 0.0; // max - min of the sheet, rad/s
    double ratio = 0.0; // width / total spectral span
};

Flatness flatness(const BandSurface& surface, int band);

} // namespace liebsim

#endif
