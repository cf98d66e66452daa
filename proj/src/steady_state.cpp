#include "liebsim/steady_state.hpp"
#include "liebsim/units.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>

namespace liebsim {

void PumpConfig::validate() const
{
    if (!(kappa > 0.0))
        throw std::invalid_argument("pump: kappa must be positive");
    std::size_t nonzero = 0;
    for (Eigen::Index i = 0; i < pump.size(); ++i)
        if (pump(i) != Complex(0.0, 0.0))
            ++nonzero;
    if (nonzero != support.size())
        throw std::invalid_argument("pump: support inconsistent with nonzero entries");
}

SteadyStateResult steady_state(const RealSpaceHamiltonian& h, const PumpConfig& cfg)
{
    if (cfg.pump.size() != h.dim())
        throw std::invalid_argument("steady_state: pump dimension mismatch");

    const Complex shift(cfg.detuning, 0.5 * cfg.kappa);
    Eigen::MatrixXcd m = h.mat;
    m.diagonal().array() -= shift;

    SteadyStateResult out;
    out.amplitudes = Eigen::PartialPivLU<Eigen::MatrixXcd>(m).solve(-cfg.pump);
    out.residual = (m * out.amplitudes + cfg.pump).norm();

    const double scale = std::max(cfg.pump.norm(), 1e-300);
    if (!std::isfinite(out.residual) || out.residual > 1e-8 * scale)
        throw std::runtime_error(
            "steady_state: singular system (kappa = 0 with Omega_P on an eigenvalue)");

    out.sspn = out.amplitudes.cwiseAbs2();
    return out;
}

PumpConfig make_pump(PumpKind kind, SiteIndex anchor, double T_P, const LiebLatticeSpec& spec,
                     double detuning, double kappa)
{
    PumpConfig cfg;
    cfg.detuning = detuning;
    cfg.kappa = kappa;
    if (!(kappa > 0.0))
        throw std::invalid_argument("make_pump: kappa must be positive");

    if (kind == PumpKind::single_b) {
        if (!spec.contains(anchor))
            throw std::invalid_argument("make_pump: anchor outside lattice");
        cfg.pump = Eigen::VectorXcd::Zero(spec.dim());
        cfg.pump(spec.flat_index(SiteIndex{anchor.m, anchor.n, Sublattice::B})) = T_P;
    } else {
        const RingMode rm = kind == PumpKind::rm1   ? RingMode::rm1
                            : kind == PumpKind::rm2 ? RingMode::rm2
                                                    : RingMode::rm3;
        cfg.pump = T_P * ring_mode(rm, anchor, spec);
    }

    for (Eigen::Index i = 0; i < cfg.pump.size(); ++i)
        if (cfg.pump(i) != Complex(0.0, 0.0))
            cfg.support.push_back(spec.site_at(static_cast<int>(i)));
    return cfg;
}

double localization_factor(const SteadyStateResult& result, const PumpConfig& cfg,
                           const LiebLatticeSpec& spec)
{
    if (result.sspn.size() != spec.dim() || cfg.pump.size() != spec.dim())
        throw std::invalid_argument("localization_factor: dimension mismatch");

    double numerator = 0.0;
    std::set<std::pair<int, int>> cells;
    for (const SiteIndex& s : cfg.support) {
        numerator += result.sspn(spec.flat_index(s));
        cells.insert({s.m, s.n});
    }

    std::set<std::pair<int, int>> region = cells;
    const bool periodic = spec.boundary == Boundary::periodic;
    const int steps[4][2] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
    for (const auto& [m, n] : cells) {
        for (const auto& d : steps) {
            int mm = m + d[0];
            int nn = n + d[1];
            if (periodic) {
                mm = (mm - 1 + spec.nx) % spec.nx + 1;
                nn = (nn - 1 + spec.ny) % spec.ny + 1;
            }
            if (mm >= 1 && mm <= spec.nx && nn >= 1 && nn <= spec.ny)
                region.insert({mm, nn});
        }
    }

    double denominator = 0.0;
    for (const auto& [m, n] : region)
        for (Sublattice s : {Sublattice::A, Sublattice::B, Sublattice::C})
            denominator += result.sspn(spec.flat_index(SiteIndex{m, n, s}));

    if (!(denominator > 0.0))
        throw std::runtime_error("localization_factor: zero photon number in region");
    return numerator / denominator;
}

std::vector<LocalizationSweepRow> localization_sweep(const std::vector<double>& tbc_dc_grid,
                                                     double delta, const LiebLatticeSpec& base,
                                                     SiteIndex anchor, double T_P, double kappa,
                                                     double detuning)
{
    if (tbc_dc_grid.empty())
        throw std::invalid_argument("localization_sweep: empty grid");
    if (!(delta > 0.0))
        throw std::invalid_argument("localization_sweep: delta must be positive");

    std::vector<LocalizationSweepRow> rows;
    rows.reserve(tbc_dc_grid.size());
    for (double tbc : tbc_dc_grid) {
        LiebLatticeSpec spec = base;
        spec.nnn_tprime = tbc * tbc / (3.0 * delta);
        LiebLatticeSpec magnetic = spec;
        magnetic.gauge_theta = std::numbers::pi / 3.0;

        const RealSpaceHamiltonian h = build_lieb(spec);
        const RealSpaceHamiltonian hm = build_lieb(magnetic);

        LocalizationSweepRow row;
        row.tbc_dc = tbc;
        {
            const PumpConfig p = make_pump(PumpKind::single_b, anchor, T_P, spec, detuning, kappa);
            row.lf_single = localization_factor(steady_state(h, p), p, spec);
        }
        {
            const PumpConfig p = make_pump(PumpKind::rm1, anchor, T_P, spec, detuning, kappa);
            row.lf_rm1 = localization_factor(steady_state(h, p), p, spec);
        }
        {
            const PumpConfig p = make_pump(PumpKind::rm2, anchor, T_P, spec, detuning, kappa);
            row.lf_rm2 = localization_factor(steady_state(h, p), p, spec);
        }
        {
            const PumpConfig p = make_pump(PumpKind::rm3, anchor, T_P, magnetic, detuning, kappa);
            row.lf_rm3 = localization_factor(steady_state(hm, p), p, magnetic);
        }
        rows.push_back(row);
    }
    return rows;
}

} // namespace liebsim
