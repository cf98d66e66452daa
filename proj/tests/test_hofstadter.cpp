#include "liebsim/hofstadter.hpp"
#include "liebsim/units.hpp"

#include <doctest.h>

#include <numbers>
#include <random>

using namespace liebsim;

namespace {
constexpr double pi = std::numbers::pi;

LiebLatticeSpec base_spec(int nx, int ny, double T, double tprime)
{
    LiebLatticeSpec s;
    s.nx = nx;
    s.ny = ny;
    s.hopping_T = T;
    s.nnn_tprime = tprime;
    s.boundary = Boundary::open;
    return s;
}
} // namespace

TEST_CASE("theta = 0 column reproduces the non-magnetic spectrum")
{
    const double T = from_mhz(10.0);
    const LiebLatticeSpec base = base_spec(4, 4, T, from_mhz(0.2));
    const ButterflySpectrum b = butterfly(base, {0.0, 0.5, 1.0});

    LiebLatticeSpec direct = base;
    direct.gauge_theta = 0.0;
    const Eigen::VectorXd ev =
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(build_lieb(direct).mat,
                                                        Eigen::EigenvaluesOnly)
            .eigenvalues();
    CHECK((b.energies.row(0).transpose() - ev).cwiseAbs().maxCoeff() < 1e-12 * T);
}

TEST_CASE("flat middle band survives the gauge sweep")
{
    const double T = from_mhz(10.0);
    const ButterflySpectrum b = butterfly(base_spec(6, 6, T, 0.0), uniform_theta_grid(7, pi));
    for (Eigen::Index i = 0; i < b.energies.rows(); ++i) {
        int zeros = 0;
        for (Eigen::Index j = 0; j < b.energies.cols(); ++j)
            if (std::abs(b.energies(i, j)) < 1e-9 * T)
                ++zeros;
        CHECK(zeros >= 25); // (nx-1)*(ny-1) independent plaquettes
    }
}

TEST_CASE("spectrum is periodic in theta -> theta + pi")
{
    std::mt19937 rng(7101);
    std::uniform_real_distribution<double> angle(0.0, pi);
    std::uniform_int_distribution<int> size(2, 4);
    std::uniform_real_distribution<double> tp(0.0, 0.1);
    const double T = from_mhz(10.0);
    for (int trial = 0; trial < 6; ++trial) {
        const double theta = angle(rng);
        const ButterflySpectrum b =
            butterfly(base_spec(size(rng), size(rng), T, tp(rng) * T), {theta, theta + pi});
        CHECK((b.energies.row(0) - b.energies.row(1)).cwiseAbs().maxCoeff() < 1e-9 * T);
    }
}

TEST_CASE("spectrum at theta and 2*pi - theta agree (flux time reversal)")
{
    std::mt19937 rng(7102);
    std::uniform_real_distribution<double> angle(0.0, pi);
    const double T = from_mhz(10.0);
    for (int trial = 0; trial < 6; ++trial) {
        const double theta = angle(rng);
        const ButterflySpectrum b =
            butterfly(base_spec(3, 4, T, from_mhz(0.4)), {theta, two_pi - theta});
        CHECK((b.energies.row(0) - b.energies.row(1)).cwiseAbs().maxCoeff() < 1e-9 * T);
    }
}

TEST_CASE("chiral pairing at every theta for tprime = 0")
{
    const double T = from_mhz(10.0);
    const ButterflySpectrum b = butterfly(base_spec(4, 3, T, 0.0), uniform_theta_grid(5, pi));
    const Eigen::Index d = b.energies.cols();
    for (Eigen::Index i = 0; i < b.energies.rows(); ++i)
        for (Eigen::Index j = 0; j < d; ++j)
            CHECK(std::abs(b.energies(i, j) + b.energies(i, d - 1 - j)) < 1e-10 * T);
}

TEST_CASE("middle cluster width")
{
    const double T = from_mhz(10.0);

    SUBCASE("zero without NNN channels")
    {
        const ButterflySpectrum b =
            butterfly(base_spec(6, 6, T, 0.0), uniform_theta_grid(5, pi));
        for (double w : middle_cluster_width(b, 1e-3 * T))
            CHECK(w < 1e-9 * T);
    }
    SUBCASE("window wider than the whole spectrum returns the full span")
    {
        const ButterflySpectrum b = butterfly(base_spec(3, 3, T, 0.0), {0.0});
        const double full = b.energies.row(0).maxCoeff() - b.energies.row(0).minCoeff();
        CHECK(middle_cluster_width(b, 100.0 * T)[0] == doctest::Approx(full));
    }
    SUBCASE("positive and window-bounded with NNN channels")
    {
        const double tp = from_mhz(0.6);
        const ButterflySpectrum b =
            butterfly(base_spec(6, 6, T, tp), uniform_theta_grid(5, pi));
        for (double w : middle_cluster_width(b, 5.0 * tp)) {
            CHECK(w > 0.0);
            CHECK(w <= 10.0 * tp);
        }
    }
    SUBCASE("empty window is rejected")
    {
        const ButterflySpectrum b = butterfly(base_spec(2, 2, T, 0.0), {0.0});
        CHECK_THROWS_AS((void)middle_cluster_width(b, 0.0), std::invalid_argument);
        CHECK_THROWS_AS((void)middle_cluster_width(b, -1.0), std::invalid_argument);
    }
}

TEST_CASE("butterfly preconditions")
{
    const double T = from_mhz(10.0);
    LiebLatticeSpec periodic = base_spec(3, 3, T, 0.0);
    periodic.boundary = Boundary::periodic;
    CHECK_THROWS_AS((void)butterfly(periodic, {0.0}), std::invalid_argument);
    CHECK_THROWS_AS((void)butterfly(base_spec(3, 3, T, 0.0), {}), std::invalid_argument);
    CHECK_THROWS_AS((void)butterfly(base_spec(30, 30, T, 0.0), {0.0}, 100),
                    std::invalid_argument);
}
