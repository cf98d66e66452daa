#ifndef LIEBSIM_LATTICE_HPP
#define LIEBSIM_LATTICE_HPP

#include <Eigen/Dense>
#include <complex>
#include <string>

namespace liebsim {

using Complex = std::complex<double>;

// Line-centered square lattice with a three-site basis per unit cell.
// Site geometry: A at integer points (m,n); B on the west edge (m-1/2, n);
// C on the north edge (m, n+1/2).  A_{m,n} therefore neighbors B_{m,n},
// B_{m+1,n}, C_{m,n} and C_{m,n-1}.  Unit-cell indices are 1-based.
enum class Sublattice : int { A = 0, B = 1, C = 2 };

enum class Boundary { open, periodic };

struct SiteIndex {
    int m = 1;
    int n = 1;
    Sublattice s = Sublattice::A;

    friend bool operator==(const SiteIndex&, const SiteIndex&) = default;
};

std::string to_string(Sublattice s);

struct LiebLatticeSpec {
    int nx = 12;
    int ny = 12;
    double hopping_T = 0.0;   // nearest-neighbor strength, rad/s
    double gauge_theta = 0.0; // Landau-gauge phase per row step, rad
    double nnn_tprime = 0.0;  // diagonal NNN strength T_BC^2/(3*Delta), rad/s
    Boundary boundary = Boundary::open;

    int dim() const { return 3 * nx * ny; }
    bool contains(SiteIndex site) const;
    int flat_index(SiteIndex site) const;
    SiteIndex site_at(int flat) const;

    // Throws std::invalid_argument on malformed parameters, including a
    // periodic gauge whose flux does not close around the torus.
    void validate() const;
};

// Hermitian hopping matrix over all sites, rad/s.  Diagonal stays zero
// unless site disorder is injected.
struct RealSpaceHamiltonian {
    Eigen::MatrixXcd mat;
    LiebLatticeSpec spec;

    int dim() const { return static_cast<int>(mat.rows()); }
};

// Assemble the nearest-neighbor + NNN hopping matrix for `spec`.  Horizontal
// bonds in row n carry the Peierls phase theta*n on the eastward hop, so each
// plaquette encloses flux of magnitude 2*theta.  NNN terms are
// +t' C(m,n)->C(m+1,n+1) and -t' B(m,n)->B(m+1,n+1) plus conjugates.
RealSpaceHamiltonian build_lieb(const LiebLatticeSpec& spec);

// Adds a real on-site energy vector to the diagonal (disorder injection).
void add_site_disorder(RealSpaceHamiltonian& h, const Eigen::VectorXd& eps);

// Gauge-invariant flux through the elementary plaquette whose south-west
// corner is `anchor` (sublattice A).  Counterclockwise loop, result in
// (-pi, pi].  Throws if the anchor is not an interior plaquette.
double plaquette_flux(const RealSpaceHamiltonian& h, SiteIndex anchor);

enum class RingMode { rm1, rm2, rm3 };

// Compact localized zero modes of the nearest-neighbor lattice, anchored at
// an A-sublattice cell index:
//   rm1: one plaquette, amplitudes 1/2 on (C_{x,y}, -B_{x+1,y}, C_{x+1,y},
//        -B_{x+1,y+1});
//   rm2: two plaquettes, six sites with 1/sqrt(6) amplitudes;
//   rm3: magnetic ring mode at gauge_theta = pi/3.  A single plaquette
//        supports no zero mode at nonzero flux (the corner conditions force
//        e^{2 i theta} = 1), so the minimal compact state spans two
//        plaquettes: seven B/C sites of uniform weight 1/sqrt(7) whose
//        phases step in units of theta.
// Returned vectors are unit norm.
Eigen::VectorXcd ring_mode(RingMode kind, SiteIndex anchor, const LiebLatticeSpec& spec);

// || H_nn * state || with the NNN channels excluded: zero certifies
// membership in the flat-band kernel (the destructive-interference
// condition holds at every site).
double interference_residual(const Eigen::VectorXcd& state, const RealSpaceHamiltonian& h);

} // namespace liebsim

#endif
