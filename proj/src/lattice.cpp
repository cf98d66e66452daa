#include "liebsim/lattice.hpp"
#include "liebsim/units.hpp"

#include <cmath>
#include <stdexcept>

namespace liebsim {

std::string to_string(Sublattice s)
{
    switch (s) {
    case Sublattice::A: return "A";
    case Sublattice::B: return "B";
    case Sublattice::C: return "C";
    }
    return "?";
}

bool LiebLatticeSpec::contains(SiteIndex site) const
{
    return site.m >= 1 && site.m <= nx && site.n >= 1 && site.n <= ny;
}

int LiebLatticeSpec::flat_index(SiteIndex site) const
{
    if (!contains(site))
        throw std::out_of_range("site index outside lattice");
    return 3 * ((site.n - 1) * nx + (site.m - 1)) + static_cast<int>(site.s);
}

SiteIndex LiebLatticeSpec::site_at(int flat) const
{
    if (flat < 0 || flat >= dim())
        throw std::out_of_range("flat index outside lattice");
    const int cell = flat / 3;
    return SiteIndex{cell % nx + 1, cell / nx + 1, static_cast<Sublattice>(flat % 3)};
}

void LiebLatticeSpec::validate() const
{
    if (nx < 1 || ny < 1)
        throw std::invalid_argument("lattice: nx and ny must be >= 1");
    if (hopping_T < 0.0)
        throw std::invalid_argument("lattice: hopping_T must be >= 0");
    if (nnn_tprime < 0.0)
        throw std::invalid_argument("lattice: nnn_tprime must be >= 0");
    if (!(gauge_theta >= 0.0 && gauge_theta < two_pi))
        throw std::invalid_argument("lattice: gauge_theta must lie in [0, 2*pi)");
    if (boundary == Boundary::periodic) {
        // The Landau gauge repeats vertically only if the accumulated flux
        // 2*theta*ny closes to a multiple of 2*pi.
        const double winding = 2.0 * gauge_theta * ny / two_pi;
        if (std::abs(winding - std::round(winding)) > 1e-9)
            throw std::invalid_argument(
                "lattice: periodic boundary requires 2*theta*ny to be a "
                "multiple of 2*pi (flux quantization mismatch)");
    }
}

namespace {

// Both entries written from one value so H == H^dagger holds exactly.
void add_hop(Eigen::MatrixXcd& mat, int to, int from, Complex amp)
{
    mat(to, from) += amp;
    mat(from, to) += std::conj(amp);
}

int wrap(int i, int extent) { return (i - 1 + extent) % extent + 1; }

} // namespace

RealSpaceHamiltonian build_lieb(const LiebLatticeSpec& spec)
{
    spec.validate();
    const int nx = spec.nx;
    const int ny = spec.ny;
    const bool periodic = spec.boundary == Boundary::periodic;
    const double T = spec.hopping_T;
    const double tp = spec.nnn_tprime;

    RealSpaceHamiltonian h{Eigen::MatrixXcd::Zero(spec.dim(), spec.dim()), spec};

    auto at = [&](int m, int n, Sublattice s) {
        return spec.flat_index(SiteIndex{m, n, s});
    };

    for (int n = 1; n <= ny; ++n) {
        const Complex east = T * std::exp(Complex(0.0, spec.gauge_theta * n));
        for (int m = 1; m <= nx; ++m) {
            const int a = at(m, n, Sublattice::A);
            // B(m,n) -> A(m,n) is an eastward hop.
            add_hop(h.mat, a, at(m, n, Sublattice::B), east);
            // A(m,n) -> B(m+1,n) is an eastward hop.
            if (m + 1 <= nx)
                add_hop(h.mat, at(m + 1, n, Sublattice::B), a, east);
            else if (periodic)
                add_hop(h.mat, at(1, n, Sublattice::B), a, east);
            // Vertical bonds are phase-free (Landau gauge).
            add_hop(h.mat, at(m, n, Sublattice::C), a, T);
            if (n - 1 >= 1)
                add_hop(h.mat, at(m, n - 1, Sublattice::C), a, T);
            else if (periodic)
                add_hop(h.mat, at(m, ny, Sublattice::C), a, T);

            if (tp != 0.0) {
                const bool fits = (m + 1 <= nx && n + 1 <= ny);
                if (fits || periodic) {
                    const int m2 = periodic ? wrap(m + 1, nx) : m + 1;
                    const int n2 = periodic ? wrap(n + 1, ny) : n + 1;
                    add_hop(h.mat, at(m, n, Sublattice::C), at(m2, n2, Sublattice::C), tp);
                    add_hop(h.mat, at(m, n, Sublattice::B), at(m2, n2, Sublattice::B), -tp);
                }
            }
        }
    }
    return h;
}

void add_site_disorder(RealSpaceHamiltonian& h, const Eigen::VectorXd& eps)
{
    if (eps.size() != h.dim())
        throw std::invalid_argument("disorder vector dimension mismatch");
    h.mat.diagonal() += eps.cast<Complex>();
}

double plaquette_flux(const RealSpaceHamiltonian& h, SiteIndex anchor)
{
    const LiebLatticeSpec& spec = h.spec;
    if (anchor.s != Sublattice::A)
        throw std::invalid_argument("plaquette anchor must be an A site");
    const bool periodic = spec.boundary == Boundary::periodic;
    if (!periodic && (anchor.m + 1 > spec.nx || anchor.n + 1 > spec.ny))
        throw std::invalid_argument("boundary plaquette: bounding bonds missing");

    const int m = anchor.m, n = anchor.n;
    const int m1 = periodic ? wrap(m + 1, spec.nx) : m + 1;
    const int n1 = periodic ? wrap(n + 1, spec.ny) : n + 1;

    // Counterclockwise corner/edge walk around the plaquette anchored at A(m,n).
    const SiteIndex loop[] = {
        {m, n, Sublattice::A},   {m1, n, Sublattice::B}, {m1, n, Sublattice::A},
        {m1, n, Sublattice::C},  {m1, n1, Sublattice::A}, {m1, n1, Sublattice::B},
        {m, n1, Sublattice::A},  {m, n, Sublattice::C},  {m, n, Sublattice::A},
    };

    Complex product = 1.0;
    for (int i = 0; i + 1 < static_cast<int>(std::size(loop)); ++i) {
        const Complex amp = h.mat(spec.flat_index(loop[i + 1]), spec.flat_index(loop[i]));
        if (amp == Complex(0.0, 0.0))
            throw std::invalid_argument("plaquette walk crossed a missing bond");
        product *= amp;
    }
    return std::arg(product);
}

Eigen::VectorXcd ring_mode(RingMode kind, SiteIndex anchor, const LiebLatticeSpec& spec)
{
    spec.validate();
    if (anchor.s != Sublattice::A)
        throw std::invalid_argument("ring mode anchor must be an A site");
    const int x = anchor.m, y = anchor.n;
    const int span = (kind == RingMode::rm1) ? 1 : 2;
    if (x + span > spec.nx || y + 1 > spec.ny)
        throw std::invalid_argument("ring mode footprint exceeds the lattice");

    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(spec.dim());
    auto set = [&](int m, int n, Sublattice s, Complex a) {
        v(spec.flat_index(SiteIndex{m, n, s})) = a;
    };

    switch (kind) {
    case RingMode::rm1:
        set(x, y, Sublattice::C, 0.5);
        set(x + 1, y, Sublattice::B, -0.5);
        set(x + 1, y, Sublattice::C, 0.5);
        set(x + 1, y + 1, Sublattice::B, -0.5);
        break;
    case RingMode::rm2: {
        const double a = 1.0 / std::sqrt(6.0);
        set(x, y, Sublattice::C, a);
        set(x + 2, y, Sublattice::C, -a);
        set(x + 1, y, Sublattice::B, -a);
        set(x + 1, y + 1, Sublattice::B, -a);
        set(x + 2, y, Sublattice::B, a);
        set(x + 2, y + 1, Sublattice::B, a);
        break;
    }
    case RingMode::rm3: {
        const double th = spec.gauge_theta;
        if (std::abs(th - std::numbers::pi / 3.0) > 1e-12)
            throw std::invalid_argument("rm3 requires gauge_theta = pi/3");
        const double a = 1.0 / std::sqrt(7.0);
        auto ph = [&](double mult) { return a * std::exp(Complex(0.0, th * mult)); };
        set(x + 1, y, Sublattice::B, ph(0));
        set(x + 1, y + 1, Sublattice::B, ph(1));
        set(x + 2, y, Sublattice::B, ph(2.0 * (y + 1)));
        set(x + 2, y + 1, Sublattice::B, ph(2.0 * y + 1));
        set(x, y, Sublattice::C, -ph(-static_cast<double>(y)));
        set(x + 1, y, Sublattice::C,
            -a * std::exp(Complex(0.0, th * y)) * (1.0 + std::exp(Complex(0.0, 2.0 * th))));
        set(x + 2, y, Sublattice::C, -ph(3.0 * y + 2));
        break;
    }
    }
    return v;
}

double interference_residual(const Eigen::VectorXcd& state, const RealSpaceHamiltonian& h)
{
    if (state.size() != h.dim())
        throw std::invalid_argument("state dimension mismatch");
    LiebLatticeSpec nn = h.spec;
    nn.nnn_tprime = 0.0;
    return (build_lieb(nn).mat * state).norm();
}

} // namespace liebsim
