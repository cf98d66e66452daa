#include "liebsim/io.hpp"
#include "liebsim/units.hpp"

#include <cstdio>
#include <fstream>
#include <numbers>
#include <stdexcept>

namespace liebsim {

std::string format_sci(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.11e", v);
    return buf;
}

namespace {

std::ofstream open_out(const std::string& path)
{
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot open output file '" + path + "'");
    return out;
}

} // namespace

void write_bands_csv(const std::string& path, const BandSurface& surface)
{
    auto out = open_out(path);
    out << "kx,ky,E_minus_MHz,E_zero_MHz,E_plus_MHz\n";
    for (int i = 0; i < surface.nk; ++i)
        for (int j = 0; j < surface.nk; ++j)
            out << format_sci(surface.k_at(i)) << ',' << format_sci(surface.k_at(j)) << ','
                << format_sci(to_mhz(surface.energies[0](i, j))) << ','
                << format_sci(to_mhz(surface.energies[1](i, j))) << ','
                << format_sci(to_mhz(surface.energies[2](i, j))) << '\n';
}

void write_butterfly_csv(const std::string& path, const ButterflySpectrum& spectrum)
{
    auto out = open_out(path);
    out << "theta_over_pi,eigen_index,energy_MHz\n";
    for (std::size_t i = 0; i < spectrum.thetas.size(); ++i)
        for (Eigen::Index j = 0; j < spectrum.energies.cols(); ++j)
            out << format_sci(spectrum.thetas[i] / std::numbers::pi) << ',' << j << ','
                << format_sci(to_mhz(spectrum.energies(static_cast<Eigen::Index>(i), j)))
                << '\n';
}

void write_sspn_csv(const std::string& path, const SteadyStateResult& result,
                    const LiebLatticeSpec& spec)
{
    auto out = open_out(path);
    out << "m,n,sublattice,re_a,im_a,sspn\n";
    for (int i = 0; i < spec.dim(); ++i) {
        const SiteIndex s = spec.site_at(i);
        out << s.m << ',' << s.n << ',' << to_string(s.s) << ','
            << format_sci(result.amplitudes(i).real()) << ','
            << format_sci(result.amplitudes(i).imag()) << ',' << format_sci(result.sspn(i))
            << '\n';
    }
}

void write_locfactor_csv(const std::string& path, const std::vector<LocalizationSweepRow>& rows)
{
    auto out = open_out(path);
    out << "tbc_dc_MHz,lf_single,lf_rm1,lf_rm2,lf_rm3\n";
    for (const auto& r : rows)
        out << format_sci(to_mhz(r.tbc_dc)) << ',' << format_sci(r.lf_single) << ','
            << format_sci(r.lf_rm1) << ',' << format_sci(r.lf_rm2) << ','
            << format_sci(r.lf_rm3) << '\n';
}

void write_ringmodes_csv(const std::string& path, const std::vector<RingModeRecord>& modes,
                         const LiebLatticeSpec& spec)
{
    auto out = open_out(path);
    out << "kind,m,n,sublattice,re,im\n";
    for (const auto& rec : modes)
        for (int i = 0; i < spec.dim(); ++i) {
            if (rec.state(i) == Complex(0.0, 0.0))
                continue;
            const SiteIndex s = spec.site_at(i);
            out << rec.kind << ',' << s.m << ',' << s.n << ',' << to_string(s.s) << ','
                << format_sci(rec.state(i).real()) << ',' << format_sci(rec.state(i).imag())
                << '\n';
        }
}

void write_matrix_coo(const std::string& path, const Eigen::MatrixXcd& mat)
{
    auto out = open_out(path);
    out << "row,col,re,im\n";
    for (Eigen::Index i = 0; i < mat.rows(); ++i)
        for (Eigen::Index j = 0; j < mat.cols(); ++j)
            if (mat(i, j) != Complex(0.0, 0.0))
                out << i << ',' << j << ',' << format_sci(mat(i, j).real()) << ','
                    << format_sci(mat(i, j).imag()) << '\n';
}

} // namespace liebsim
