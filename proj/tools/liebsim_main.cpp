// liebsim: deterministic experiment runner for the Lieb-lattice simulator.
// Subcommands cover band structures, Hofstadter spectra, driven-dissipative
// steady states, localization sweeps, ring modes and the physical-circuit
// layer.  Flag values override the config file; built-in defaults are the
// representative parameter set.

#include "liebsim/bands.hpp"
#include "liebsim/experiments.hpp"
#include "liebsim/hofstadter.hpp"
#include "liebsim/io.hpp"
#include "liebsim/units.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <optional>
#include <sstream>

namespace fs = std::filesystem;
using namespace liebsim;

namespace {

struct GlobalOpts {
    std::string config_path;
    std::string output_dir = ".";
    std::string format = "csv";
};

std::string out_path(const GlobalOpts& g, const std::string& name)
{
    fs::create_directories(g.output_dir);
    return (fs::path(g.output_dir) / name).string();
}

// JSON mirror of an emitted CSV: {"columns": [...], "rows": [[...]]}.
// Numeric fields become numbers, everything else stays a string.
void mirror_csv_as_json(const std::string& csv_path)
{
    std::ifstream in(csv_path);
    if (!in)
        throw std::runtime_error("cannot reopen '" + csv_path + "'");
    nlohmann::ordered_json j;
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
        std::istringstream row(line);
        std::string field;
        nlohmann::ordered_json rec = nlohmann::ordered_json::array();
        while (std::getline(row, field, ',')) {
            if (header) {
                j["columns"].push_back(field);
                continue;
            }
            try {
                std::size_t used = 0;
                const double v = std::stod(field, &used);
                if (used == field.size())
                    rec.push_back(v);
                else
                    rec.push_back(field);
            } catch (const std::exception&) {
                rec.push_back(field);
            }
        }
        if (!header)
            j["rows"].push_back(rec);
        header = false;
    }
    const std::string json_path = fs::path(csv_path).replace_extension(".json").string();
    write_json(json_path, j);
}

void finish_csv(const GlobalOpts& g, const std::string& csv_path)
{
    if (g.format == "json")
        mirror_csv_as_json(csv_path);
}

template <typename T>
void override_key(Config& cfg, const std::string& section, const std::string& key,
                  const std::optional<T>& value)
{
    if (!value)
        return;
    std::ostringstream s;
    s.precision(17);
    s << *value;
    cfg.set(section, key, s.str());
}

struct LatticeFlags {
    std::optional<int> nx, ny;
    std::optional<double> T, tprime, theta_over_pi;
    std::optional<std::string> boundary;

    void attach(CLI::App* cmd)
    {
        cmd->add_option("--nx", nx, "unit-cell columns");
        cmd->add_option("--ny", ny, "unit-cell rows");
        cmd->add_option("--T", T, "nearest-neighbor hopping, MHz");
        cmd->add_option("--tprime", tprime, "diagonal NNN strength, MHz");
        cmd->add_option("--theta-over-pi", theta_over_pi, "gauge phase per row, units of pi");
        cmd->add_option("--boundary", boundary, "open|periodic");
    }
    void apply(Config& cfg) const
    {
        override_key(cfg, "lattice", "nx", nx);
        override_key(cfg, "lattice", "ny", ny);
        override_key(cfg, "lattice", "T_MHz", T);
        override_key(cfg, "lattice", "tprime_MHz", tprime);
        override_key(cfg, "lattice", "theta_over_pi", theta_over_pi);
        override_key(cfg, "lattice", "boundary", boundary);
    }
};

struct PumpFlags {
    std::optional<std::string> kind;
    std::optional<int> anchor_m, anchor_n;
    std::optional<double> TP, kappa, omegaP;

    void attach(CLI::App* cmd)
    {
        cmd->add_option("--pump", kind, "single_B|rm1|rm2|rm3");
        cmd->add_option("--anchor-m", anchor_m, "pump anchor cell column");
        cmd->add_option("--anchor-n", anchor_n, "pump anchor cell row");
        cmd->add_option("--TP", TP, "pump strength, MHz");
        cmd->add_option("--kappa", kappa, "uniform decay rate, kHz");
        cmd->add_option("--omegaP", omegaP, "pump detuning Omega_P, MHz");
    }
    void apply(Config& cfg) const
    {
        override_key(cfg, "pump", "kind", kind);
        override_key(cfg, "pump", "anchor_m", anchor_m);
        override_key(cfg, "pump", "anchor_n", anchor_n);
        override_key(cfg, "pump", "TP_MHz", TP);
        override_key(cfg, "pump", "kappa_kHz", kappa);
        override_key(cfg, "pump", "omegaP_MHz", omegaP);
    }
};

int run_bands(const GlobalOpts& g, Config cfg)
{
    const LiebLatticeSpec spec = lattice_from_config(cfg);
    const int nk = cfg.get_int("bands", "nk", 64);
    const BandSurface surface = band_grid(nk, spec.hopping_T, spec.nnn_tprime);
    const std::string path = out_path(g, "bands.csv");
    write_bands_csv(path, surface);
    finish_csv(g, path);
    const Flatness f = flatness(surface, 1);
    std::printf("bands: nk=%d middle band width: %.3f MHz (flatness ratio %.3e); wrote %s\n",
                nk, to_mhz(f.width), f.ratio, path.c_str());
    return 0;
}

int run_butterfly(const GlobalOpts& g, Config cfg)
{
    LiebLatticeSpec base = lattice_from_config(cfg);
    base.gauge_theta = 0.0; // theta is the swept variable
    const int points = cfg.get_int("butterfly", "theta_points", 201);
    const double theta_max =
        std::numbers::pi * cfg.get_double("butterfly", "theta_max_over_pi", 1.0);
    const ButterflySpectrum spec = butterfly(base, uniform_theta_grid(points, theta_max));
    const std::string path = out_path(g, "butterfly.csv");
    write_butterfly_csv(path, spec);
    finish_csv(g, path);
    const auto widths = middle_cluster_width(
        spec, base.nnn_tprime > 0.0 ? 5.0 * base.nnn_tprime : 1e-9 * base.hopping_T);
    std::printf("butterfly: %d theta points, dim=%d, max middle-cluster width: %.3f MHz; "
                "wrote %s\n",
                points, base.dim(), to_mhz(*std::max_element(widths.begin(), widths.end())),
                path.c_str());
    return 0;
}

int run_steady(const GlobalOpts& g, Config cfg, const std::string& dump_h)
{
    LiebLatticeSpec spec = lattice_from_config(cfg);
    const PumpSettings ps = pump_from_config(cfg);
    if (ps.kind == PumpKind::rm3)
        spec.gauge_theta = std::numbers::pi / 3.0;
    const RealSpaceHamiltonian h = build_lieb(spec);
    const PumpConfig pump = make_pump(ps.kind, ps.anchor, ps.T_P, spec, ps.detuning, ps.kappa);
    const SteadyStateResult result = steady_state(h, pump);
    const double lf = localization_factor(result, pump, spec);

    const std::string path = out_path(g, "sspn.csv");
    write_sspn_csv(path, result, spec);
    finish_csv(g, path);
    if (!dump_h.empty())
        write_matrix_coo(out_path(g, dump_h), h.mat);
    std::printf("steady: pump=%s total SSPN=%.6e localization factor=%.6f residual=%.3e; "
                "wrote %s\n",
                to_string(ps.kind).c_str(), result.sspn.sum(), lf, result.residual,
                path.c_str());
    return 0;
}

int run_sweep(const GlobalOpts& g, Config cfg)
{
    const LiebLatticeSpec base = lattice_from_config(cfg);
    const PumpSettings ps = pump_from_config(cfg);
    const SweepSettings ss = sweep_from_config(cfg);
    std::vector<double> grid(ss.points);
    for (int i = 0; i < ss.points; ++i)
        grid[i] = ss.points == 1
                      ? ss.tbc_from
                      : ss.tbc_from + (ss.tbc_to - ss.tbc_from) * i / (ss.points - 1);
    const auto rows =
        localization_sweep(grid, ss.delta, base, ps.anchor, ps.T_P, ps.kappa, ps.detuning);
    const std::string path = out_path(g, "locfactor.csv");
    write_locfactor_csv(path, rows);
    finish_csv(g, path);
    std::printf("sweep: %d points, first row LF single=%.6f rm1=%.6f rm2=%.6f rm3=%.6f; "
                "wrote %s\n",
                ss.points, rows.front().lf_single, rows.front().lf_rm1, rows.front().lf_rm2,
                rows.front().lf_rm3, path.c_str());
    return 0;
}

int run_ringmodes(const GlobalOpts& g, Config cfg)
{
    const LiebLatticeSpec spec = lattice_from_config(cfg);
    const PumpSettings ps = pump_from_config(cfg);
    LiebLatticeSpec magnetic = spec;
    magnetic.gauge_theta = std::numbers::pi / 3.0;

    std::vector<RingModeRecord> records;
    records.push_back({"rm1", ring_mode(RingMode::rm1, ps.anchor, spec)});
    records.push_back({"rm2", ring_mode(RingMode::rm2, ps.anchor, spec)});
    records.push_back({"rm3", ring_mode(RingMode::rm3, ps.anchor, magnetic)});

    LiebLatticeSpec nn = spec;
    nn.gauge_theta = 0.0;
    const RealSpaceHamiltonian h0 = build_lieb(nn);
    const RealSpaceHamiltonian hm = build_lieb(magnetic);
    const double r1 = interference_residual(records[0].state, h0);
    const double r2 = interference_residual(records[1].state, h0);
    const double r3 = interference_residual(records[2].state, hm);

    const std::string path = out_path(g, "ringmodes.csv");
    write_ringmodes_csv(path, records, spec);
    finish_csv(g, path);
    std::printf("ringmodes: kernel residuals (units of T) rm1=%.3e rm2=%.3e rm3=%.3e; "
                "wrote %s\n",
                r1 / spec.hopping_T, r2 / spec.hopping_T, r3 / spec.hopping_T, path.c_str());
    return 0;
}

int run_circuit(const GlobalOpts& g, Config cfg)
{
    const CircuitParams p = circuit_from_config(cfg);
    for (const std::string& w : p.validate())
        std::fprintf(stderr, "warning: %s\n", w.c_str());
    const EigenmodeSolution sol = solve_eigenmodes(p);
    const std::string path = out_path(g, "circuit_report.json");
    write_json(path, circuit_report(sol, p));
    std::printf("circuit: eigenfrequencies A=%.3f B=%.3f C=%.3f GHz, "
                "T_dc(AB)=%.1f MHz, omega_p=%.1f GHz; wrote %s\n",
                to_ghz(sol.omega(0)), to_ghz(sol.omega(1)), to_ghz(sol.omega(2)),
                to_mhz(dc_mixing(sol, p, 0, 1)), to_ghz(plasma_frequency(p)), path.c_str());
    return 0;
}

int run_noise(const GlobalOpts& g, Config cfg)
{
    const CircuitParams p = circuit_from_config(cfg);
    const NoiseBudgetInput in = noise_input_from_config(cfg);
    const EigenmodeSolution sol = solve_eigenmodes(p);
    const std::string path = out_path(g, "noise_report.json");
    write_json(path, noise_report(sol, p, in));
    const Disturbance hi = flux_noise_disturbance(sol, p, 5.0 * in.a_flux_hi);
    std::printf("noise: worst flux disturbance delta_omega=%.3e MHz delta_T=%.3e MHz; "
                "wrote %s\n",
                to_mhz(hi.delta_omega), to_mhz(hi.delta_hopping), path.c_str());
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"liebsim: flat-band Lieb-lattice simulator"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("-c,--config", g.config_path, "config file (INI-style)")
        ->envname("LIEBSIM_CONFIG");
    app.add_option("-o,--output-dir", g.output_dir, "directory for data files");
    app.add_option("--format", g.format, "csv|json (json adds a .json mirror)")
        ->check(CLI::IsMember({"csv", "json"}));

    LatticeFlags lat;
    PumpFlags pump;

    auto* bands = app.add_subcommand("bands", "Bloch bands on a k-grid -> bands.csv");
    std::optional<int> nk;
    bands->add_option("--nk", nk, "k-grid size per axis");
    lat.attach(bands);

    auto* butterfly_cmd =
        app.add_subcommand("butterfly", "open-boundary spectrum vs theta -> butterfly.csv");
    std::optional<int> theta_points;
    std::optional<double> theta_max_over_pi;
    butterfly_cmd->add_option("--theta-points", theta_points, "number of theta samples");
    butterfly_cmd->add_option("--theta-max-over-pi", theta_max_over_pi,
                              "upper end of the theta grid, units of pi");
    lat.attach(butterfly_cmd);

    auto* steady = app.add_subcommand("steady", "driven-dissipative steady state -> sspn.csv");
    std::string dump_h;
    steady->add_option("--dump-hamiltonian", dump_h,
                       "also write the hopping matrix as coordinate-list csv");
    lat.attach(steady);
    pump.attach(steady);

    auto* sweep = app.add_subcommand("sweep", "localization factor vs T_BC^dc -> locfactor.csv");
    std::optional<double> tbc_from, tbc_to, delta_ghz;
    std::optional<int> points;
    sweep->add_option("--tbc-from", tbc_from, "sweep start, MHz");
    sweep->add_option("--tbc-to", tbc_to, "sweep end, MHz");
    sweep->add_option("--points", points, "number of sweep points");
    sweep->add_option("--Delta", delta_ghz, "mode spacing Delta, GHz");
    lat.attach(sweep);
    pump.attach(sweep);

    auto* ringmodes =
        app.add_subcommand("ringmodes", "compact ring-mode states -> ringmodes.csv");
    lat.attach(ringmodes);
    pump.attach(ringmodes);

    app.add_subcommand("circuit", "unit-cell eigenmodes and couplings -> circuit_report.json");
    app.add_subcommand("noise", "1/f noise budget -> noise_report.json");

    CLI11_PARSE(app, argc, argv);

    try {
        Config cfg;
        if (!g.config_path.empty())
            cfg = Config::parse_file(g.config_path);
        lat.apply(cfg);
        pump.apply(cfg);
        override_key(cfg, "bands", "nk", nk);
        override_key(cfg, "butterfly", "theta_points", theta_points);
        override_key(cfg, "butterfly", "theta_max_over_pi", theta_max_over_pi);
        override_key(cfg, "sweep", "tbc_from_MHz", tbc_from);
        override_key(cfg, "sweep", "tbc_to_MHz", tbc_to);
        override_key(cfg, "sweep", "points", points);
        override_key(cfg, "sweep", "Delta_GHz", delta_ghz);

        if (app.got_subcommand("bands"))
            return run_bands(g, cfg);
        if (app.got_subcommand("butterfly"))
            return run_butterfly(g, cfg);
        if (app.got_subcommand("steady"))
            return run_steady(g, cfg, dump_h);
        if (app.got_subcommand("sweep"))
            return run_sweep(g, cfg);
        if (app.got_subcommand("ringmodes"))
            return run_ringmodes(g, cfg);
        if (app.got_subcommand("circuit"))
            return run_circuit(g, cfg);
        if (app.got_subcommand("noise"))
            return run_noise(g, cfg);
    } catch (const ConfigError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
