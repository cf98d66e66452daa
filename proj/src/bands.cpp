#include "liebsim/bands.hpp"
#include "liebsim/units.hpp"

#include <cmath>
#include <stdexcept>

namespace liebsim {

Eigen::Matrix3cd bloch_hamiltonian(double kx, double ky, double T, double tprime)
{
    if (!std::isfinite(kx) || !std::isfinite(ky))
        throw std::invalid_argument("bloch_hamiltonian: momentum must be finite");
    Eigen::Matrix3cd h = Eigen::Matrix3cd::Zero();
    const Complex ab = T * (1.0 + std::exp(Complex(0.0, kx)));
    const Complex ac = T * (1.0 + std::exp(Complex(0.0, -ky)));
    h(0, 1) = ab;
    h(1, 0) = std::conj(ab);
    h(0, 2) = ac;
    h(2, 0) = std::conj(ac);
    const double nnn = 2.0 * tprime * std::cos(kx - ky);
    h(1, 1) = -nnn;
    h(2, 2) = +nnn;
    return h;
}

Eigen::Vector3d analytic_bands(double kx, double ky, double T)
{
    const double c = std::hypot(std::cos(0.5 * kx), std::cos(0.5 * ky));
    return {-2.0 * T * c, 0.0, 2.0 * T * c};
}

double BandSurface::k_at(int i) const
{
    return two_pi * i / nk;
}

BandSurface band_grid(int nk, double T, double tprime)
{
    if (nk < 2)
        throw std::invalid_argument("band_grid: nk must be >= 2");
    BandSurface s;
    s.nk = nk;
    for (auto& sheet : s.energies)
        sheet.resize(nk, nk);

    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3cd> solver;
    for (int i = 0; i < nk; ++i) {
        for (int j = 0; j < nk; ++j) {
            solver.compute(bloch_hamiltonian(s.k_at(i), s.k_at(j), T, tprime),
                           Eigen::EigenvaluesOnly);
            const Eigen::Vector3d ev = solver.eigenvalues(); // ascending
            for (int b = 0; b < 3; ++b)
                s.energies[b](i, j) = ev(b);
        }
    }
    return s;
}

Flatness flatness(const BandSurface& surface, int band)
{
    if (band < 0 || band > 2)
        throw std::invalid_argument("flatness: band index must be 0, 1 or 2");
    const double width = surface.energies[band].maxCoeff() - surface.energies[band].minCoeff();
    const double span = surface.energies[2].maxCoeff() - surface.energies[0].minCoeff();
    return {width, span > 0.0 ? width / span : 0.0};
}

} // namespace liebsim
