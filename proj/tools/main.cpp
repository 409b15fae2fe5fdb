#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "disklev/job.hpp"
#include "disklev/winding.hpp"

namespace {

struct Flags {
    std::string config_path;
    std::uint64_t seed = 0;
    long long samples = 0;
    int resolution = 0;
    int threads = 0;
    std::string method;
    std::string out_dir;
    std::vector<double> t_values;
    std::vector<double> p_values;
    int t_nodes = 0;
    double a_step = 0.0;
    double a_max = 0.0;
    double step = 0.0;

    std::string map_kind;
    double phase = 0.0;
    std::string zeros;
    std::string a;
    int degree = 0;
    double dilatation = 0.0;
    double h_const = 0.0;
    std::string density_csv;
    int grid_size = 0;
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Level-set geometry of holomorphic and radial self-maps of the unit disk"};
    app.require_subcommand(1);
    app.fallthrough();

    Flags flags;
    app.add_option("--config", flags.config_path, "Key-value job file with optional [map] section");
    auto* seed_opt = app.add_option("--seed", flags.seed, "Counter-based RNG seed");
    auto* samples_opt = app.add_option("--samples", flags.samples, "Monte Carlo sample count");
    auto* resolution_opt = app.add_option("--resolution", flags.resolution, "Grid/raster resolution");
    auto* threads_opt = app.add_option("--threads", flags.threads, "Worker threads (0 = hardware)");
    auto* method_opt = app.add_option("--method", flags.method, "Area estimator: mc or grid");
    auto* out_dir_opt = app.add_option("--out-dir", flags.out_dir, "Output directory");
    auto* t_opt = app.add_option("--t", flags.t_values, "Levels to sweep")->delimiter(',');
    auto* p_opt = app.add_option("--p", flags.p_values, "Norm exponents")->delimiter(',');
    auto* t_nodes_opt = app.add_option("--t-nodes", flags.t_nodes, "Quadrature nodes in t");
    auto* a_step_opt = app.add_option("--a-step", flags.a_step, "Figure 1 grid step in |a|");
    auto* a_max_opt = app.add_option("--a-max", flags.a_max, "Figure 1 grid end in |a|");
    auto* step_opt = app.add_option("--step", flags.step, "Differencing step for radial-verify");

    auto* map_opt = app.add_option("--map", flags.map_kind,
                                   "Map kind: blaschke, moebius, power-radial, radial-qc");
    auto* phase_opt = app.add_option("--phase", flags.phase, "Blaschke phase");
    auto* zeros_opt = app.add_option("--zeros", flags.zeros, "Blaschke zeros 're,im; re,im; ...'");
    auto* a_opt = app.add_option("--a", flags.a, "Moebius parameter 're[,im]' / radial exponent");
    auto* d_opt = app.add_option("--d", flags.degree, "Power-radial winding degree");
    auto* k_opt = app.add_option("--K", flags.dilatation, "Declared boundary dilatation");
    auto* h_const_opt = app.add_option("--h-const", flags.h_const, "Constant density value");
    auto* density_opt = app.add_option("--density-csv", flags.density_csv, "Density table (v,h)");
    auto* grid_opt = app.add_option("--grid-size", flags.grid_size, "Radial profile refinement");

    auto* area_cmd = app.add_subcommand("area", "Sublevel area of |f| at given levels");
    auto* sweep_cmd = app.add_subcommand("bound-sweep", "Grade measured areas against the sharp bound");
    auto* norm_cmd = app.add_subcommand("norm", "L^p norms by two independent routes");
    auto* winding_cmd = app.add_subcommand("winding", "Boundary winding number and speed integral");
    auto* fig1_cmd = app.add_subcommand("fig1", "Moebius L2 norm curve over |a|");
    auto* fig23_cmd = app.add_subcommand("fig23", "Sublevel-set images and component counts");
    auto* radial_cmd = app.add_subcommand("radial-verify", "Build a radial profile and verify it");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return disklev::kJobExitValidation;
    }

    try {
        disklev::JobConfig config;
        if (!flags.config_path.empty()) {
            config = disklev::JobConfig::from_file(flags.config_path);
        }

        if (area_cmd->parsed()) config.task = disklev::TaskKind::area;
        if (sweep_cmd->parsed()) config.task = disklev::TaskKind::bound_sweep;
        if (norm_cmd->parsed()) config.task = disklev::TaskKind::norm;
        if (winding_cmd->parsed()) config.task = disklev::TaskKind::winding;
        if (fig1_cmd->parsed()) config.task = disklev::TaskKind::figure1;
        if (fig23_cmd->parsed()) config.task = disklev::TaskKind::figure2_3;
        if (radial_cmd->parsed()) config.task = disklev::TaskKind::radial_verify;

        if (seed_opt->count() > 0) config.seed = flags.seed;
        if (samples_opt->count() > 0) config.samples = flags.samples;
        if (resolution_opt->count() > 0) config.resolution = flags.resolution;
        if (threads_opt->count() > 0) config.threads = flags.threads;
        if (method_opt->count() > 0) {
            if (flags.method == "mc" || flags.method == "monte-carlo") {
                config.method = disklev::AreaMethod::monte_carlo;
            } else if (flags.method == "grid") {
                config.method = disklev::AreaMethod::grid;
            } else {
                throw std::invalid_argument("--method expects 'mc' or 'grid'");
            }
        }
        if (out_dir_opt->count() > 0) config.out_dir = flags.out_dir;
        if (t_opt->count() > 0) config.t_values = flags.t_values;
        if (p_opt->count() > 0) config.p_values = flags.p_values;
        if (t_nodes_opt->count() > 0) config.t_nodes = flags.t_nodes;
        if (a_step_opt->count() > 0) config.fig1_a_step = flags.a_step;
        if (a_max_opt->count() > 0) config.fig1_a_max = flags.a_max;
        if (step_opt->count() > 0) config.laplacian_step = flags.step;

        if (map_opt->count() > 0) config.map.kind = disklev::map_kind_from_string(flags.map_kind);
        if (phase_opt->count() > 0) config.map.phase = flags.phase;
        if (zeros_opt->count() > 0) config.map.zeros = disklev::parse_zero_list(flags.zeros);
        if (a_opt->count() > 0) {
            const auto value = disklev::parse_complex_value(flags.a);
            config.map.moebius_a = value;
            if (value.imag() == 0.0) config.map.exponent = value.real();
        }
        if (d_opt->count() > 0) config.map.degree = flags.degree;
        if (k_opt->count() > 0) {
            config.map.dilatation = flags.dilatation;
            config.map.declared_dilatation = flags.dilatation;
        }
        if (h_const_opt->count() > 0) config.map.h_constant = flags.h_const;
        if (density_opt->count() > 0) config.map.density_csv = flags.density_csv;
        if (grid_opt->count() > 0) config.map.profile_grid = flags.grid_size;

        return disklev::run_job(config);
    } catch (const disklev::ConvergenceError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return disklev::kJobExitNonConvergence;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return disklev::kJobExitValidation;
    }
}
