#include "liebsim/hofstadter.hpp"

#include <limits>
#include <stdexcept>

namespace liebsim {

ButterflySpectrum butterfly(const LiebLatticeSpec& base, const std::vector<double>& theta_grid,
                            int dim_cap)
{
    if (base.boundary != Boundary::open)
        throw std::invalid_argument("butterfly: open boundary required");
    if (theta_grid.empty())
        throw std::invalid_argument("butterfly: theta grid must be nonempty");
    if (base.dim() > dim_cap)
        throw std::invalid_argument("butterfly: lattice dimension exceeds cap");

    ButterflySpectrum out;
    out.thetas = theta_grid;
    out.base = base;
    out.energies.resize(static_cast<Eigen::Index>(theta_grid.size()), base.dim());

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver;
    for (std::size_t i = 0; i < theta_grid.size(); ++i) {
        LiebLatticeSpec spec = base;
        spec.gauge_theta = theta_grid[i];
        solver.compute(build_lieb(spec).mat, Eigen::EigenvaluesOnly);
        out.energies.row(static_cast<Eigen::Index>(i)) = solver.eigenvalues().transpose();
    }
    return out;
}

std::vector<double> uniform_theta_grid(int points, double theta_max)
{
    if (points < 1)
        throw std::invalid_argument("theta grid needs at least one point");
    std::vector<double> grid(points);
    for (int i = 0; i < points; ++i)
        grid[i] = points == 1 ? 0.0 : theta_max * i / (points - 1);
    return grid;
}

std::vector<double> middle_cluster_width(const ButterflySpectrum& spectrum, double window)
{
    if (!(window > 0.0))
        throw std::invalid_argument("middle_cluster_width: window must be positive");
    std::vector<double> widths(spectrum.thetas.size(), 0.0);
    for (std::size_t i = 0; i < spectrum.thetas.size(); ++i) {
        double lo = std::numeric_limits<double>::infinity();
        double hi = -lo;
        for (Eigen::Index j = 0; j < spectrum.energies.cols(); ++j) {
            const double e = spectrum.energies(static_cast<Eigen::Index>(i), j);
            if (std::abs(e) <= window) {
                lo = std::min(lo, e);
                hi = std::max(hi, e);
            }
        }
        widths[i] = hi >= lo ? hi - lo : 0.0;
    }
    return widths;
}

} // namespace liebsim
