#ifndef DISKLEV_JOB_HPP
#define DISKLEV_JOB_HPP

#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "disklev/area.hpp"
#include "disklev/disk_map.hpp"

namespace disklev {

enum class TaskKind { area, bound_sweep, norm, winding, figure1, figure2_3, radial_verify };

TaskKind task_from_string(const std::string& name);
std::string to_string(TaskKind task);

enum class MapKind { blaschke, moebius, power_radial, radial_qc };

MapKind map_kind_from_string(const std::string& name);
std::string to_string(MapKind kind);

/// Which map to construct and with what parameters. Fields not used by the
/// selected kind are ignored. The "a" and "K" config keys feed both the
/// Moebius/power-radial fields and the radial-profile fields, so a config
/// stays valid when only its kind changes.
struct MapSpec {
    MapKind kind = MapKind::blaschke;
    double phase = 0.0;             // blaschke
    std::vector<Complex> zeros;     // blaschke
    Complex moebius_a{0.0, 0.0};    // moebius
    int degree = 1;                 // power_radial
    double dilatation = 1.0;        // power_radial
    double exponent = 1.0;          // radial_qc a
    std::optional<double> declared_dilatation;  // radial_qc K, defaults to a
    double h_constant = 1.0;        // radial_qc density when no file given
    std::string density_csv;        // radial_qc density file
    int profile_grid = 4096;        // radial_qc table refinement

    std::unique_ptr<DiskMap> build() const;
};

void to_json(nlohmann::json& j, const MapSpec& spec);

/// "re" or "re,im".
Complex parse_complex_value(const std::string& text);
/// Semicolon-separated complex values, e.g. "0.5,0; -0.5,0".
std::vector<Complex> parse_zero_list(const std::string& text);

/// Everything one process invocation needs: the task, the map, estimator
/// parameters, and output locations. Parsed from a key-value config file
/// with an optional [map] section; CLI flags override parsed values.
struct JobConfig {
    TaskKind task = TaskKind::area;
    MapSpec map;
    long long samples = 1'000'000;
    std::uint64_t seed = 0;
    int resolution = 1024;
    int threads = 0;
    AreaMethod method = AreaMethod::monte_carlo;
    std::vector<double> t_values;  // empty = per-task default
    std::vector<double> p_values = {1.0, 2.0};
    int t_nodes = 64;
    double fig1_a_step = 0.01;
    double fig1_a_max = 0.99;
    double laplacian_step = 1e-4;
    std::filesystem::path out_dir = ".";

    static JobConfig from_file(const std::filesystem::path& path);

    /// Checks every parameter against the preconditions of the module it
    /// feeds; throws std::invalid_argument before any computation starts.
    void validate() const;

    /// Levels this task sweeps when none were given explicitly.
    std::vector<double> effective_t_values() const;
};

inline constexpr int kJobExitOk = 0;
inline constexpr int kJobExitValidation = 1;
inline constexpr int kJobExitBoundViolation = 2;
inline constexpr int kJobExitNonConvergence = 3;

/// Runs the configured task and writes its outputs under out_dir. Returns
/// kJobExitOk, or kJobExitBoundViolation when a sweep produced a violated
/// verdict. Validation and convergence failures surface as exceptions, which
/// the CLI maps onto the remaining exit codes.
int run_job(const JobConfig& config);

}  // namespace disklev

#endif
