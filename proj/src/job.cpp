#include "disklev/job.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "disklev/bounds.hpp"
#include "disklev/maps.hpp"
#include "disklev/norms.hpp"
#include "disklev/radial_qc.hpp"
#include "disklev/raster.hpp"
#include "disklev/rng.hpp"
#include "disklev/serialize.hpp"
#include "disklev/winding.hpp"

namespace disklev {

namespace {

constexpr double kPi = std::numbers::pi;

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) {
        return {};
    }
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string current;
    std::istringstream in(s);
    while (std::getline(in, current, sep)) {
        parts.push_back(trim(current));
    }
    return parts;
}

double parse_double(const std::string& s, const std::string& key) {
    try {
        std::size_t used = 0;
        const double v = std::stod(s, &used);
        if (used != s.size()) {
            throw std::invalid_argument("trailing characters");
        }
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument("config key '" + key + "': cannot parse number '" + s + "'");
    }
}

long long parse_integer(const std::string& s, const std::string& key) {
    try {
        std::size_t used = 0;
        const long long v = std::stoll(s, &used);
        if (used != s.size()) {
            throw std::invalid_argument("trailing characters");
        }
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument("config key '" + key + "': cannot parse integer '" + s + "'");
    }
}

Complex parse_complex(const std::string& s, const std::string& key) {
    const auto parts = split(s, ',');
    if (parts.size() == 1) {
        return {parse_double(parts[0], key), 0.0};
    }
    if (parts.size() == 2) {
        return {parse_double(parts[0], key), parse_double(parts[1], key)};
    }
    throw std::invalid_argument("config key '" + key + "': expected 're' or 're,im'");
}

std::vector<double> parse_double_list(const std::string& s, const std::string& key) {
    std::vector<double> values;
    for (const auto& part : split(s, ',')) {
        if (!part.empty()) {
            values.push_back(parse_double(part, key));
        }
    }
    if (values.empty()) {
        throw std::invalid_argument("config key '" + key + "': empty list");
    }
    return values;
}

void apply_job_key(JobConfig& config, const std::string& key, const std::string& value) {
    if (key == "task") {
        config.task = task_from_string(value);
    } else if (key == "samples") {
        config.samples = parse_integer(value, key);
    } else if (key == "seed") {
        config.seed = static_cast<std::uint64_t>(parse_integer(value, key));
    } else if (key == "resolution") {
        config.resolution = static_cast<int>(parse_integer(value, key));
    } else if (key == "threads") {
        config.threads = static_cast<int>(parse_integer(value, key));
    } else if (key == "method") {
        if (value == "mc" || value == "monte-carlo" || value == "monte_carlo") {
            config.method = AreaMethod::monte_carlo;
        } else if (value == "grid") {
            config.method = AreaMethod::grid;
        } else {
            throw std::invalid_argument("config key 'method': expected 'mc' or 'grid'");
        }
    } else if (key == "t_values") {
        config.t_values = parse_double_list(value, key);
    } else if (key == "p_values") {
        config.p_values = parse_double_list(value, key);
    } else if (key == "t_nodes") {
        config.t_nodes = static_cast<int>(parse_integer(value, key));
    } else if (key == "a_step") {
        config.fig1_a_step = parse_double(value, key);
    } else if (key == "a_max") {
        config.fig1_a_max = parse_double(value, key);
    } else if (key == "step") {
        config.laplacian_step = parse_double(value, key);
    } else if (key == "out_dir") {
        config.out_dir = value;
    } else {
        throw std::invalid_argument("unknown config key '" + key + "'");
    }
}

void apply_map_key(MapSpec& map, const std::string& key, const std::string& value) {
    if (key == "kind") {
        map.kind = map_kind_from_string(value);
    } else if (key == "phase") {
        map.phase = parse_double(value, key);
    } else if (key == "zeros") {
        map.zeros.clear();
        for (const auto& part : split(value, ';')) {
            if (!part.empty()) {
                map.zeros.push_back(parse_complex(part, key));
            }
        }
    } else if (key == "a") {
        map.moebius_a = parse_complex(value, key);
        if (map.moebius_a.imag() == 0.0) {
            map.exponent = map.moebius_a.real();
        }
    } else if (key == "d") {
        map.degree = static_cast<int>(parse_integer(value, key));
    } else if (key == "K") {
        map.dilatation = parse_double(value, key);
        map.declared_dilatation = map.dilatation;
    } else if (key == "h_const") {
        map.h_constant = parse_double(value, key);
    } else if (key == "density_csv") {
        map.density_csv = value;
    } else if (key == "grid_size") {
        map.profile_grid = static_cast<int>(parse_integer(value, key));
    } else {
        throw std::invalid_argument("unknown [map] key '" + key + "'");
    }
}

nlohmann::json job_meta(const JobConfig& config) {
    return nlohmann::json{
        {"rng", std::string(kRngName)},
        {"seed", config.seed},
        {"samples", config.samples},
        {"resolution", config.resolution},
        {"method", std::string(to_string(config.method))},
    };
}

void write_text_file(const std::filesystem::path& path, const std::string& body) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write file: " + path.string());
    }
    out << body;
    if (!out) {
        throw std::runtime_error("failed writing file: " + path.string());
    }
}

void note_output(const std::filesystem::path& path) { std::cout << "wrote " << path.string() << '\n'; }

std::vector<Complex> default_figure_zeros() {
    return {Complex(0.5, 0.0), Complex(-0.5, 0.0), Complex(0.0, 0.5), Complex(0.0, -0.5)};
}

int map_degree(const DiskMap& map) { return map.degree_hint().value_or(winding_number(map)); }

int run_area(const JobConfig& config) {
    const auto map = config.map.build();
    const EstimatorConfig estimator{config.method, config.samples, config.seed, config.resolution,
                                    config.threads};
    nlohmann::json results = nlohmann::json::array();
    for (double t : config.effective_t_values()) {
        results.push_back({{"t", t}, {"estimate", sublevel_area(*map, t, estimator)}});
    }
    nlohmann::json doc{{"task", to_string(config.task)},
                       {"map", config.map},
                       {"meta", job_meta(config)},
                       {"results", results}};
    const auto path = config.out_dir / "area.json";
    write_json_file(path, doc);
    note_output(path);
    return kJobExitOk;
}

int run_bound_sweep(const JobConfig& config) {
    const auto map = config.map.build();
    const int d = map_degree(*map);
    const double dilatation = map->boundary_dilatation();
    const auto levels = config.effective_t_values();

    std::vector<BoundReport> reports;
    reports.reserve(levels.size());
    if (config.method == AreaMethod::monte_carlo) {
        const auto sample = ModulusSample::monte_carlo(*map, config.samples, config.seed,
                                                       config.threads);
        for (double t : levels) {
            reports.push_back(grade_bound(t, d, dilatation, sample.sublevel(t)));
        }
    } else {
        for (double t : levels) {
            reports.push_back(grade_bound(t, d, dilatation,
                                          sublevel_area_grid(*map, t, config.resolution)));
        }
    }

    std::string csv = kBoundSweepCsvHeader;
    csv += '\n';
    bool violated = false;
    for (const auto& report : reports) {
        csv += bound_report_csv_row(report);
        csv += '\n';
        violated = violated || report.verdict == BoundVerdict::violated;
    }
    const auto csv_path = config.out_dir / "bound_sweep.csv";
    write_text_file(csv_path, csv);
    note_output(csv_path);

    nlohmann::json doc{{"task", to_string(config.task)},
                       {"map", config.map},
                       {"meta", job_meta(config)},
                       {"reports", reports}};
    const auto json_path = config.out_dir / "bound_sweep.json";
    write_json_file(json_path, doc);
    note_output(json_path);

    if (violated) {
        std::cerr << "bound violation detected; see " << json_path.string() << '\n';
        return kJobExitBoundViolation;
    }
    return kJobExitOk;
}

int run_norm(const JobConfig& config) {
    const auto map = config.map.build();
    const auto sample = ModulusSample::monte_carlo(*map, config.samples, config.seed,
                                                   config.threads);
    std::vector<NormResult> results;
    for (double p : config.p_values) {
        results.push_back(lp_norm_distributional(sample, p, config.t_nodes));
        results.push_back(lp_norm_quadrature2d(*map, p, 256, 512));
    }

    std::string csv = "p,value,method,error_estimate\n";
    for (const auto& result : results) {
        csv += format_number(result.p);
        csv += ',';
        csv += format_number(result.value);
        csv += ',';
        csv += to_string(result.method);
        csv += ',';
        csv += format_number(result.error_estimate);
        csv += '\n';
    }
    const auto csv_path = config.out_dir / "norm.csv";
    write_text_file(csv_path, csv);
    note_output(csv_path);

    nlohmann::json doc{{"task", to_string(config.task)},
                       {"map", config.map},
                       {"meta", job_meta(config)},
                       {"results", results}};
    const auto json_path = config.out_dir / "norm.json";
    write_json_file(json_path, doc);
    note_output(json_path);
    return kJobExitOk;
}

int run_winding(const JobConfig& config) {
    const auto map = config.map.build();
    const int winding = winding_number(*map);
    const double integral = boundary_speed_integral(*map);
    nlohmann::json doc{{"task", to_string(config.task)},
                       {"map", config.map},
                       {"winding_number", winding},
                       {"boundary_speed_integral", integral},
                       {"integral_over_two_pi", integral / (2.0 * kPi)}};
    const auto path = config.out_dir / "winding.json";
    write_json_file(path, doc);
    note_output(path);
    return kJobExitOk;
}

int run_figure1(const JobConfig& config) {
    std::string csv = "a_modulus,h_closed_form,h_quadrature\n";
    for (int i = 0;; ++i) {
        const double a = config.fig1_a_step * i;
        if (a > config.fig1_a_max + 1e-12) {
            break;
        }
        const MoebiusTransform map((Complex(a, 0.0)));
        const auto quad = lp_norm_quadrature2d(map, 2.0, 256, 512);
        csv += format_number(a);
        csv += ',';
        csv += format_number(moebius_l2_closed_form(a));
        csv += ',';
        csv += format_number(quad.value);
        csv += '\n';
    }
    const auto path = config.out_dir / "fig1.csv";
    write_text_file(path, csv);
    note_output(path);
    return kJobExitOk;
}

int run_figure2_3(const JobConfig& config) {
    MapSpec spec = config.map;
    if (spec.kind == MapKind::blaschke && spec.zeros.empty()) {
        spec.zeros = default_figure_zeros();
    }
    const auto map = spec.build();
    const int d = map_degree(*map);
    const double dilatation = map->boundary_dilatation();

    nlohmann::json levels = nlohmann::json::array();
    int index = 0;
    for (double t : config.effective_t_values()) {
        const auto raster = rasterize_sublevel(*map, t, config.resolution);
        const int components = count_components(raster);
        const auto pgm_path = config.out_dir / ("fig23_" + std::to_string(index) + ".pgm");
        const auto png_path = config.out_dir / ("fig23_" + std::to_string(index) + ".png");
        write_pgm(raster, pgm_path);
        write_png(raster, png_path);
        note_output(pgm_path);
        note_output(png_path);

        const auto area = sublevel_area_grid(*map, t, config.resolution);
        const double bound = sharp_sublevel_bound(t, d, dilatation);
        levels.push_back({{"t", t},
                          {"components", components},
                          {"area", area},
                          {"sharp_bound", bound},
                          {"below_bound", area.value <= bound},
                          {"pgm", pgm_path.filename().string()},
                          {"png", png_path.filename().string()}});
        ++index;
    }

    nlohmann::json doc{{"task", to_string(config.task)},
                       {"map", spec},
                       {"meta", job_meta(config)},
                       {"d", d},
                       {"K", dilatation},
                       {"levels", levels}};
    const auto path = config.out_dir / "fig23.json";
    write_json_file(path, doc);
    note_output(path);
    return kJobExitOk;
}

int run_radial_verify(const JobConfig& config) {
    const MapSpec& spec = config.map;
    DensitySpec density = spec.density_csv.empty() ? DensitySpec::constant(spec.h_constant)
                                                   : DensitySpec::from_csv(spec.density_csv);
    const RadialQCMap map = RadialQCMap::build(spec.exponent, spec.declared_dilatation,
                                               std::move(density), spec.profile_grid);

    const auto table_path = config.out_dir / "g_table.csv";
    map.export_table_csv(table_path);
    note_output(table_path);

    const std::vector<double> probes = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
    const double residual = map.max_laplacian_residual(probes, config.laplacian_step);
    const double dilatation = map.boundary_dilatation();

    nlohmann::json levels = nlohmann::json::array();
    for (double t : config.effective_t_values()) {
        const double radius = map.g_inverse(t);
        const double area = kPi * radius * radius;
        const double bound = sharp_sublevel_bound(t, 1, dilatation);
        levels.push_back({{"t", t},
                          {"radius", radius},
                          {"area", area},
                          {"sharp_bound", bound},
                          {"holds", area <= bound + 1e-12}});
    }

    nlohmann::json doc{{"task", to_string(config.task)},
                       {"a", map.exponent()},
                       {"K", dilatation},
                       {"g_at_one", map.table_g(map.table_size() - 1)},
                       {"max_log_slope", map.max_log_slope()},
                       {"laplacian_residual", residual},
                       {"laplacian_step", config.laplacian_step},
                       {"winding_number", winding_number(map)},
                       {"levels", levels}};
    const auto path = config.out_dir / "radial_verify.json";
    write_json_file(path, doc);
    note_output(path);
    return kJobExitOk;
}

}  // namespace

TaskKind task_from_string(const std::string& name) {
    if (name == "area") return TaskKind::area;
    if (name == "bound-sweep" || name == "bound_sweep") return TaskKind::bound_sweep;
    if (name == "norm") return TaskKind::norm;
    if (name == "winding") return TaskKind::winding;
    if (name == "fig1" || name == "figure1") return TaskKind::figure1;
    if (name == "fig23" || name == "figure2_3") return TaskKind::figure2_3;
    if (name == "radial-verify" || name == "radial_verify") return TaskKind::radial_verify;
    throw std::invalid_argument("unknown task '" + name + "'");
}

std::string to_string(TaskKind task) {
    switch (task) {
        case TaskKind::area: return "area";
        case TaskKind::bound_sweep: return "bound-sweep";
        case TaskKind::norm: return "norm";
        case TaskKind::winding: return "winding";
        case TaskKind::figure1: return "fig1";
        case TaskKind::figure2_3: return "fig23";
        case TaskKind::radial_verify: return "radial-verify";
    }
    throw std::logic_error("unreachable task kind");
}

MapKind map_kind_from_string(const std::string& name) {
    if (name == "blaschke") return MapKind::blaschke;
    if (name == "moebius") return MapKind::moebius;
    if (name == "power-radial" || name == "power_radial") return MapKind::power_radial;
    if (name == "radial-qc" || name == "radial_qc") return MapKind::radial_qc;
    throw std::invalid_argument("unknown map kind '" + name + "'");
}

std::string to_string(MapKind kind) {
    switch (kind) {
        case MapKind::blaschke: return "blaschke";
        case MapKind::moebius: return "moebius";
        case MapKind::power_radial: return "power-radial";
        case MapKind::radial_qc: return "radial-qc";
    }
    throw std::logic_error("unreachable map kind");
}

Complex parse_complex_value(const std::string& text) { return parse_complex(text, "a"); }

std::vector<Complex> parse_zero_list(const std::string& text) {
    std::vector<Complex> zeros;
    for (const auto& part : split(text, ';')) {
        if (!part.empty()) {
            zeros.push_back(parse_complex(part, "zeros"));
        }
    }
    return zeros;
}

std::unique_ptr<DiskMap> MapSpec::build() const {
    switch (kind) {
        case MapKind::blaschke:
            return std::make_unique<BlaschkeProduct>(phase, zeros);
        case MapKind::moebius:
            return std::make_unique<MoebiusTransform>(moebius_a);
        case MapKind::power_radial:
            return std::make_unique<PowerRadialMap>(degree, dilatation);
        case MapKind::radial_qc: {
            DensitySpec density = density_csv.empty() ? DensitySpec::constant(h_constant)
                                                      : DensitySpec::from_csv(density_csv);
            return std::make_unique<RadialQCMap>(
                RadialQCMap::build(exponent, declared_dilatation, std::move(density), profile_grid));
        }
    }
    throw std::logic_error("unreachable map kind");
}

void to_json(nlohmann::json& j, const MapSpec& spec) {
    j = nlohmann::json{{"kind", to_string(spec.kind)}};
    switch (spec.kind) {
        case MapKind::blaschke: {
            j["phase"] = spec.phase;
            nlohmann::json zeros = nlohmann::json::array();
            for (const auto& zero : spec.zeros) {
                zeros.push_back({zero.real(), zero.imag()});
            }
            j["zeros"] = zeros;
            break;
        }
        case MapKind::moebius:
            j["a"] = {spec.moebius_a.real(), spec.moebius_a.imag()};
            break;
        case MapKind::power_radial:
            j["d"] = spec.degree;
            j["K"] = spec.dilatation;
            break;
        case MapKind::radial_qc:
            j["a"] = spec.exponent;
            j["K"] = spec.declared_dilatation.value_or(spec.exponent);
            if (spec.density_csv.empty()) {
                j["h_const"] = spec.h_constant;
            } else {
                j["density_csv"] = spec.density_csv;
            }
            j["grid_size"] = spec.profile_grid;
            break;
    }
}

JobConfig JobConfig::from_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open config file: " + path.string());
    }
    JobConfig config;
    bool in_map_section = false;
    std::string line;
    int line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        const auto hash = line.find('#');
        if (hash != std::string::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        if (line == "[map]") {
            in_map_section = true;
            continue;
        }
        if (line.front() == '[') {
            throw std::invalid_argument("config line " + std::to_string(line_number) +
                                        ": unknown section " + line);
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument("config line " + std::to_string(line_number) +
                                        ": expected key = value");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (in_map_section) {
            apply_map_key(config.map, key, value);
        } else {
            apply_job_key(config, key, value);
        }
    }
    return config;
}

void JobConfig::validate() const {
    if (samples < 1000) {
        throw std::invalid_argument("samples must be at least 1000");
    }
    if (resolution < 64) {
        throw std::invalid_argument("resolution must be at least 64");
    }
    if (threads < 0) {
        throw std::invalid_argument("threads must be nonnegative");
    }
    if (t_nodes < 16) {
        throw std::invalid_argument("t_nodes must be at least 16");
    }
    for (double t : t_values) {
        if (!(t >= 0.0 && t <= 1.0)) {
            throw std::invalid_argument("levels must lie in [0, 1]");
        }
    }
    for (double p : p_values) {
        if (!(p >= 1.0)) {
            throw std::invalid_argument("norm exponents must be at least 1");
        }
    }
    if (!(fig1_a_step > 0.0 && fig1_a_step <= 1.0)) {
        throw std::invalid_argument("a_step must lie in (0, 1]");
    }
    if (!(fig1_a_max >= 0.0 && fig1_a_max <= 0.999)) {
        throw std::invalid_argument("a_max must lie in [0, 0.999]");
    }
    if (!(laplacian_step > 0.0 && laplacian_step <= 1e-3)) {
        throw std::invalid_argument("step must lie in (0, 1e-3]");
    }
}

std::vector<double> JobConfig::effective_t_values() const {
    if (!t_values.empty()) {
        return t_values;
    }
    switch (task) {
        case TaskKind::area:
            return {0.5};
        case TaskKind::figure2_3:
            return {0.125, 1.0 / 18.0};
        case TaskKind::bound_sweep:
        case TaskKind::radial_verify:
        default: {
            std::vector<double> grid;
            for (int i = 1; i <= 9; ++i) {
                grid.push_back(i / 10.0);
            }
            return grid;
        }
    }
}

int run_job(const JobConfig& config) {
    config.validate();
    std::filesystem::create_directories(config.out_dir);
    switch (config.task) {
        case TaskKind::area: return run_area(config);
        case TaskKind::bound_sweep: return run_bound_sweep(config);
        case TaskKind::norm: return run_norm(config);
        case TaskKind::winding: return run_winding(config);
        case TaskKind::figure1: return run_figure1(config);
        case TaskKind::figure2_3: return run_figure2_3(config);
        case TaskKind::radial_verify: return run_radial_verify(config);
    }
    throw std::logic_error("unreachable task kind");
}

}  // namespace disklev
