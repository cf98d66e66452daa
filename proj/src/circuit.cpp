#include "liebsim/circuit.hpp"
#include "liebsim/units.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

namespace liebsim {

double CircuitParams::velocity() const { return 1.0 / std::sqrt(l * c); }
double CircuitParams::E_J() const { return I_J * phi0_reduced; }
double CircuitParams::E_J0() const { return I_J0 * phi0_reduced; }
double CircuitParams::L_J() const { return phi0_reduced / I_J; }

std::vector<std::string> CircuitParams::validate() const
{
    auto positive = [](double v, const char* name) {
        if (!(v > 0.0))
            throw std::invalid_argument(std::string("circuit: ") + name + " must be positive");
    };
    positive(l, "l");
    positive(c, "c");
    positive(length[0], "L_A");
    positive(length[1], "L_B");
    positive(length[2], "L_C");
    positive(I_J0, "I_J0");
    positive(Phi_dc, "Phi_dc");
    positive(I_J, "I_J");
    positive(C_J, "C_J");
    if (Phi_ac_CA < 0.0 || Phi_ac_BA < 0.0)
        throw std::invalid_argument("circuit: a.c. amplitudes must be >= 0");

    const double expected = I_J0 * std::cos(std::numbers::pi * Phi_dc);
    if (std::abs(I_J - expected) > 0.05 * std::abs(I_J))
        throw std::invalid_argument(
            "circuit: I_J inconsistent with I_J0*cos(pi*Phi_dc) beyond 5%");

    std::vector<std::string> warnings;
    if (Phi_ac_CA / Phi_dc > 0.1 || Phi_ac_BA / Phi_dc > 0.1)
        warnings.push_back("a.c. modulation amplitude above 10% of the d.c. bias");
    return warnings;
}

namespace {

// Boundary-condition system for a trial wavenumber: row alpha reads
//   sum_beta C_beta L_J k cos(k L_beta)
//     + (l - C_J L_J k^2 / c) C_alpha sin(k L_alpha) = 0.
// A nontrivial null vector requires det = 0; the same condition enforces a
// common node flux C_alpha sin(k L_alpha) across the three TLRs.
Eigen::Matrix3d boundary_matrix(const CircuitParams& p, double k)
{
    const double lj = p.L_J();
    Eigen::Matrix3d m;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            m(a, b) = lj * k * std::cos(k * p.length[b]);
            if (a == b)
                m(a, b) += (p.l - p.C_J * lj * k * k / p.c) * std::sin(k * p.length[a]);
        }
    return m;
}

double boundary_det(const CircuitParams& p, double k)
{
    return boundary_matrix(p, k).determinant();
}

double bisect_root(const CircuitParams& p, double lo, double hi)
{
    double flo = boundary_det(p, lo);
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fmid = boundary_det(p, mid);
        if (fmid == 0.0)
            return mid;
        if ((flo < 0.0) != (fmid < 0.0)) {
            hi = mid;
        } else {
            lo = mid;
            flo = fmid;
        }
        if (hi - lo <= 1e-13 * hi)
            break;
    }
    return 0.5 * (lo + hi);
}

// Integral of sin(k1 x) sin(k2 x) over [0, L].
double sine_overlap(double k1, double k2, double L)
{
    if (k1 == k2)
        return 0.5 * L - std::sin(2.0 * k1 * L) / (4.0 * k1);
    return std::sin((k1 - k2) * L) / (2.0 * (k1 - k2)) -
           std::sin((k1 + k2) * L) / (2.0 * (k1 + k2));
}

double simpson(const std::function<double(double)>& f, double a, double b, int panels)
{
    if (panels % 2 != 0)
        ++panels;
    const double h = (b - a) / panels;
    double sum = f(a) + f(b);
    for (int i = 1; i < panels; ++i)
        sum += f(a + i * h) * (i % 2 == 1 ? 4.0 : 2.0);
    return sum * h / 3.0;
}

} // namespace

EigenmodeSolution solve_eigenmodes(const CircuitParams& p)
{
    p.validate();

    std::array<double, 3> bare{};
    for (int a = 0; a < 3; ++a)
        bare[a] = std::numbers::pi / p.length[a];

    // One global scan; the +-20% windows around different bare modes overlap
    // for the default lengths, so roots are collected once and then assigned
    // to their nearest bare mode.
    const double k_lo = 0.75 * *std::min_element(bare.begin(), bare.end());
    const double k_hi = 1.25 * *std::max_element(bare.begin(), bare.end());
    const int steps = 8000;
    std::vector<double> roots;
    double prev_k = k_lo;
    double prev_f = boundary_det(p, k_lo);
    for (int i = 1; i <= steps; ++i) {
        const double k = k_lo + (k_hi - k_lo) * i / steps;
        const double f = boundary_det(p, k);
        if (f == 0.0)
            roots.push_back(k);
        else if ((prev_f < 0.0) != (f < 0.0))
            roots.push_back(bisect_root(p, prev_k, k));
        prev_k = k;
        prev_f = f;
    }

    EigenmodeSolution sol;
    for (int a = 0; a < 3; ++a) {
        double best = -1.0;
        for (double r : roots)
            if (best < 0.0 || std::abs(r - bare[a]) < std::abs(best - bare[a]))
                best = r;
        if (best < 0.0 || std::abs(best - bare[a]) > 0.2 * bare[a])
            throw std::runtime_error("solve_eigenmodes: root bracketing failure for mode " +
                                     std::to_string(a));
        sol.k(a) = best;
    }
    for (int a = 0; a < 3; ++a)
        for (int b = a + 1; b < 3; ++b)
            if (std::abs(sol.k(a) - sol.k(b)) < 1e-6 * sol.k(a))
                throw std::runtime_error("solve_eigenmodes: degenerate roots, refusing to pick");

    const double v = p.velocity();
    for (int m = 0; m < 3; ++m) {
        const double k = sol.k(m);
        sol.omega(m) = v * k;

        // Null vector of the boundary system.
        Eigen::JacobiSVD<Eigen::Matrix3d> svd(boundary_matrix(p, k), Eigen::ComputeFullV);
        Eigen::Vector3d cvec = svd.matrixV().col(2);
        if (svd.singularValues()(2) > 1e-6 * svd.singularValues()(0))
            throw std::runtime_error("solve_eigenmodes: null space not resolved at root");
        if (cvec(m) < 0.0)
            cvec = -cvec;

        // Node flux must agree across the three TLRs.
        Eigen::Vector3d fj;
        for (int a = 0; a < 3; ++a)
            fj(a) = cvec(a) * std::sin(k * p.length[a]);
        if ((fj.maxCoeff() - fj.minCoeff()) > 1e-6 * std::abs(fj.mean()))
            throw std::runtime_error("solve_eigenmodes: node flux continuity violated");

        double norm2 = (p.C_J / p.c) * fj.mean() * fj.mean();
        for (int a = 0; a < 3; ++a)
            norm2 += cvec(a) * cvec(a) * sine_overlap(k, k, p.length[a]);
        cvec /= std::sqrt(norm2);

        sol.coeffs.col(m) = cvec;
        sol.node_flux(m) = cvec(m) * std::sin(k * p.length[m]);
        sol.phi_zpf(m) =
            std::abs(sol.node_flux(m)) * std::sqrt(hbar / (2.0 * sol.omega(m) * p.c));
    }
    return sol;
}

double boundary_residual(const EigenmodeSolution& sol, const CircuitParams& p)
{
    double worst = 0.0;
    for (int m = 0; m < 3; ++m) {
        const double k = sol.k(m);
        const double om = sol.omega(m);
        double current = 0.0, current_scale = 0.0;
        for (int a = 0; a < 3; ++a) {
            const double term = sol.coeffs(a, m) * k * std::cos(k * p.length[a]) / p.l;
            current -= term;
            current_scale += std::abs(term);
        }
        const double node = sol.node_flux(m) * (1.0 / p.L_J() - p.C_J * om * om);
        worst = std::max(worst, std::abs(current - node) / current_scale);

        double fmin = sol.coeffs(0, m) * std::sin(k * p.length[0]);
        double fmax = fmin;
        for (int a = 1; a < 3; ++a) {
            const double f = sol.coeffs(a, m) * std::sin(k * p.length[a]);
            fmin = std::min(fmin, f);
            fmax = std::max(fmax, f);
        }
        worst = std::max(worst, (fmax - fmin) / std::abs(sol.node_flux(m)));
    }
    return worst;
}

double orthonormality_residual(const EigenmodeSolution& sol, const CircuitParams& p)
{
    double worst = 0.0;
    for (int m = 0; m < 3; ++m)
        for (int n = 0; n < 3; ++n) {
            double overlap = (p.C_J / p.c) * sol.node_flux(m) * sol.node_flux(n);
            for (int a = 0; a < 3; ++a)
                overlap += sol.coeffs(a, m) * sol.coeffs(a, n) *
                           sine_overlap(sol.k(m), sol.k(n), p.length[a]);
            worst = std::max(worst, std::abs(overlap - (m == n ? 1.0 : 0.0)));
        }
    return worst;
}

double esr(const EigenmodeSolution& sol, const CircuitParams& p, int mode, int tlr)
{
    if (mode < 0 || mode > 2 || tlr < 0 || tlr > 2)
        throw std::invalid_argument("esr: mode and tlr must be 0, 1 or 2");

    const double k = sol.k(mode);
    const double om = sol.omega(mode);
    const double weight = 0.5 * (p.c * om * om + k * k / p.l);

    std::array<double, 3> stored{};
    for (int a = 0; a < 3; ++a) {
        const double amp = sol.coeffs(a, mode);
        stored[a] = weight * simpson(
                                 [&](double x) {
                                     const double f = amp * std::sin(k * x);
                                     return f * f;
                                 },
                                 0.0, p.length[a], 10000);
    }
    const double fj = sol.node_flux(mode);
    const double squid = 0.5 * (p.C_J * om * om + 1.0 / p.L_J()) * fj * fj;
    const double total = stored[0] + stored[1] + stored[2] + squid;
    return stored[tlr] / total;
}

double dc_mixing(const EigenmodeSolution& sol, const CircuitParams& p, int m, int n)
{
    if (m == n)
        throw std::invalid_argument("dc_mixing: requires two distinct modes");
    const double phi2 = sol.phi_zpf(m) * sol.phi_zpf(n) / (phi0_reduced * phi0_reduced);
    return phi2 * p.E_J0() * std::cos(std::numbers::pi * p.Phi_dc) / hbar;
}

double fourth_order_ratio(const EigenmodeSolution& sol, const CircuitParams& p)
{
    double quartic = 0.0;
    for (int m = 0; m < 3; ++m) {
        const double r = sol.phi_zpf(m) / phi0_reduced;
        quartic = std::max(quartic, r * r * r * r / 48.0 * p.E_J0() *
                                        std::cos(std::numbers::pi * p.Phi_dc) / hbar);
    }
    double mixing = dc_mixing(sol, p, 0, 1);
    mixing = std::min(mixing, dc_mixing(sol, p, 0, 2));
    mixing = std::min(mixing, dc_mixing(sol, p, 1, 2));
    return quartic / mixing;
}

double parametric_strength(const EigenmodeSolution& sol, const CircuitParams& p, TonePair pair)
{
    const int a = pair == TonePair::BA ? 1 : 2;
    const double amp_phi0 = pair == TonePair::BA ? p.Phi_ac_BA : p.Phi_ac_CA;
    const double phi2 = sol.phi_zpf(a) * sol.phi_zpf(0) / (phi0_reduced * phi0_reduced);
    return 0.25 * (amp_phi0 * two_pi) * phi2 * p.E_J0() *
           std::sin(std::numbers::pi * p.Phi_dc) / hbar;
}

double plasma_frequency(const CircuitParams& p)
{
    const double e_c = (2.0 * e_charge) * (2.0 * e_charge) / (2.0 * p.C_J);
    return std::sqrt(8.0 * e_c * p.E_J()) / hbar;
}

NoiseVariance noise_variance(const NoiseSpec& n)
{
    if (!(n.omega_min > 0.0) || !(n.omega_max > n.omega_min))
        throw std::invalid_argument("noise_variance: need 0 < omega_min < omega_max");
    return {n.amplitude * n.amplitude * std::log(n.omega_max / n.omega_min),
            5.0 * n.amplitude};
}

Disturbance flux_noise_disturbance(const EigenmodeSolution& sol, const CircuitParams& p,
                                   double dPhi_Phi0)
{
    const double dphi_phi0r = dPhi_Phi0 * two_pi; // delta Phi in units of phi0
    const double sin_dc = std::sin(std::numbers::pi * p.Phi_dc);

    Disturbance d;
    for (int m = 0; m < 3; ++m) {
        const double r = sol.phi_zpf(m) / phi0_reduced;
        d.delta_omega = std::max(
            d.delta_omega, std::abs(r * r * dphi_phi0r * p.E_J0() * sin_dc / (2.0 * hbar)));
    }
    // Same structure as parametric_strength with sin -> cos and the extra
    // factor dPhi/(2 phi0); written directly so Phi_dc = 0 stays finite.
    const double cos_dc = std::cos(std::numbers::pi * p.Phi_dc);
    for (TonePair pair : {TonePair::BA, TonePair::CA}) {
        const int a = pair == TonePair::BA ? 1 : 2;
        const double amp_phi0 = pair == TonePair::BA ? p.Phi_ac_BA : p.Phi_ac_CA;
        const double phi2 = sol.phi_zpf(a) * sol.phi_zpf(0) / (phi0_reduced * phi0_reduced);
        const double dt = std::abs(0.25 * (amp_phi0 * two_pi) * phi2 * p.E_J0() * cos_dc *
                                   std::numbers::pi * dPhi_Phi0 / hbar);
        d.delta_hopping = std::max(d.delta_hopping, dt);
    }
    return d;
}

Disturbance critical_current_noise_disturbance(const EigenmodeSolution& sol,
                                               const CircuitParams& p, double dI_over_I)
{
    Disturbance d;
    for (int m = 0; m < 3; ++m) {
        const double r = sol.phi_zpf(m) / phi0_reduced;
        const double t_mm = r * r * p.E_J0() * std::cos(std::numbers::pi * p.Phi_dc) / hbar;
        d.delta_omega = std::max(d.delta_omega, std::abs(t_mm * dI_over_I));
    }
    for (TonePair pair : {TonePair::BA, TonePair::CA})
        d.delta_hopping = std::max(
            d.delta_hopping, std::abs(parametric_strength(sol, p, pair) * dI_over_I));
    return d;
}

} // namespace liebsim
