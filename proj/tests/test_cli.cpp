#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>

#include "json.hpp"

#include "disklev/serialize.hpp"

extern std::string g_cli_path;

namespace {

namespace fs = std::filesystem;
constexpr double kPi = std::numbers::pi;

int run_cli(const std::string& args) {
    REQUIRE(!g_cli_path.empty());
    const std::string command = "'" + g_cli_path + "' " + args + " >/dev/null 2>&1";
    const int status = std::system(command.c_str());
    REQUIRE(status != -1);
    return WEXITSTATUS(status);
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream body;
    body << in.rdbuf();
    return body.str();
}

nlohmann::json read_json(const fs::path& path) { return nlohmann::json::parse(read_file(path)); }

struct TempDir {
    fs::path path;
    explicit TempDir(const std::string& name) : path(fs::temp_directory_path() / name) {
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string str() const { return path.string(); }
};

}  // namespace

TEST_CASE("bound sweep outputs are byte-identical across worker counts") {
    TempDir dir_a("disklev_cli_sweep_a");
    TempDir dir_b("disklev_cli_sweep_b");
    const std::string shared =
        " --zeros '0.4,0.1; -0.3,0.2' --samples 200000 --seed 9 --out-dir ";
    CHECK(run_cli("bound-sweep --threads 1" + shared + dir_a.str()) == 0);
    CHECK(run_cli("bound-sweep --threads 4" + shared + dir_b.str()) == 0);

    CHECK(read_file(dir_a.path / "bound_sweep.csv") == read_file(dir_b.path / "bound_sweep.csv"));
    CHECK(read_file(dir_a.path / "bound_sweep.json") ==
          read_file(dir_b.path / "bound_sweep.json"));

    const std::string csv = read_file(dir_a.path / "bound_sweep.csv");
    CHECK(csv.rfind(std::string(disklev::kBoundSweepCsvHeader) + "\n", 0) == 0);
    CHECK(csv.find("violated") == std::string::npos);

    // Rerunning an identical job reproduces the bytes exactly.
    TempDir dir_c("disklev_cli_sweep_c");
    CHECK(run_cli("bound-sweep --threads 2" + shared + dir_c.str()) == 0);
    CHECK(read_file(dir_a.path / "bound_sweep.json") ==
          read_file(dir_c.path / "bound_sweep.json"));
}

TEST_CASE("area task reports the estimate with its metadata") {
    TempDir dir("disklev_cli_area");
    CHECK(run_cli("area --map moebius --a 0.5 --t 0.5 --samples 100000 --seed 4 --out-dir " +
                  dir.str()) == 0);
    const auto doc = read_json(dir.path / "area.json");
    CHECK(doc.at("meta").at("rng") == "splitmix64");
    CHECK(doc.at("meta").at("seed") == 4);
    const auto& estimate = doc.at("results").at(0).at("estimate");
    CHECK(estimate.contains("value"));
    CHECK(estimate.contains("stderr"));
    CHECK(estimate.contains("method"));
    CHECK(estimate.contains("samples"));
    const double value = estimate.at("value").get<double>();
    const double std_error = estimate.at("stderr").get<double>();
    CHECK(std::abs(value - 0.16 * kPi) < 3.5 * std_error);
}

TEST_CASE("figure 1 curve starts at its minimum") {
    TempDir dir("disklev_cli_fig1");
    CHECK(run_cli("fig1 --a-step 0.05 --a-max 0.2 --out-dir " + dir.str()) == 0);
    std::ifstream in(dir.path / "fig1.csv");
    REQUIRE(in.good());
    std::string line;
    std::getline(in, line);
    CHECK(line == "a_modulus,h_closed_form,h_quadrature");
    double first_closed = 0.0;
    double previous = 0.0;
    int rows = 0;
    while (std::getline(in, line)) {
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream row(line);
        double a = 0.0;
        double closed = 0.0;
        double quadrature = 0.0;
        REQUIRE((row >> a >> closed >> quadrature));
        if (rows == 0) {
            CHECK(a == 0.0);
            first_closed = closed;
        } else {
            CHECK(closed >= previous);
        }
        CHECK(std::abs(closed - quadrature) < 1e-5);
        previous = closed;
        ++rows;
    }
    CHECK(rows == 5);
    CHECK(std::abs(first_closed - std::sqrt(kPi / 2.0)) < 1e-9);
}

TEST_CASE("figure 2 and 3 reproduction at reduced resolution") {
    TempDir dir("disklev_cli_fig23");
    CHECK(run_cli("fig23 --resolution 256 --out-dir " + dir.str()) == 0);
    const auto doc = read_json(dir.path / "fig23.json");
    CHECK(doc.at("d") == 4);
    const auto& levels = doc.at("levels");
    REQUIRE(levels.size() == 2);
    CHECK(levels.at(0).at("components") == 1);
    CHECK(levels.at(1).at("components") == 4);
    CHECK(levels.at(0).at("below_bound") == true);
    CHECK(levels.at(1).at("below_bound") == true);

    const std::string pgm = read_file(dir.path / "fig23_0.pgm");
    CHECK(pgm.rfind("P5\n256 256\n255\n", 0) == 0);
    CHECK(pgm.size() == std::string("P5\n256 256\n255\n").size() + 256 * 256);
    CHECK(fs::exists(dir.path / "fig23_0.png"));
    CHECK(fs::exists(dir.path / "fig23_1.png"));
}

TEST_CASE("winding task on the power radial map") {
    TempDir dir("disklev_cli_winding");
    CHECK(run_cli("winding --map power-radial --d 3 --K 2 --out-dir " + dir.str()) == 0);
    const auto doc = read_json(dir.path / "winding.json");
    CHECK(doc.at("winding_number") == 3);
    CHECK(std::abs(doc.at("integral_over_two_pi").get<double>() - 3.0) < 1e-6);
}

TEST_CASE("norm task emits both routes") {
    TempDir dir("disklev_cli_norm");
    CHECK(run_cli("norm --map power-radial --d 1 --K 1 --p 2 --samples 50000 --out-dir " +
                  dir.str()) == 0);
    const auto doc = read_json(dir.path / "norm.json");
    const auto& results = doc.at("results");
    REQUIRE(results.size() == 2);
    bool saw_quadrature = false;
    for (const auto& result : results) {
        if (result.at("method") == "quadrature2d") {
            saw_quadrature = true;
            CHECK(std::abs(result.at("value").get<double>() - std::sqrt(kPi / 2.0)) < 1e-6);
        }
    }
    CHECK(saw_quadrature);
    const std::string csv = read_file(dir.path / "norm.csv");
    CHECK(csv.rfind("p,value,method,error_estimate\n", 0) == 0);
}

TEST_CASE("radial verification task") {
    TempDir dir("disklev_cli_radial");
    CHECK(run_cli("radial-verify --a 1 --K 1 --h-const 1 --grid-size 512 --out-dir " +
                  dir.str()) == 0);
    const auto doc = read_json(dir.path / "radial_verify.json");
    CHECK(std::abs(doc.at("g_at_one").get<double>() - 1.0) < 1e-10);
    CHECK(doc.at("laplacian_residual").get<double>() <= 1e-3);
    CHECK(doc.at("winding_number") == 1);
    CHECK(doc.at("max_log_slope").get<double>() <= 1.0 + 1e-8);
    for (const auto& level : doc.at("levels")) {
        CHECK(level.at("holds") == true);
    }
    const std::string table = read_file(dir.path / "g_table.csv");
    CHECK(table.rfind("r,g\n", 0) == 0);
}

TEST_CASE("config file drives a job and flags override it") {
    TempDir dir("disklev_cli_config");
    const auto config_path = dir.path / "job.conf";
    {
        std::ofstream out(config_path);
        out << "task = area\n"
            << "samples = 50000\n"
            << "seed = 1\n"
            << "t_values = 0.5\n"
            << "out_dir = " << dir.str() << "\n"
            << "\n"
            << "[map]\n"
            << "kind = blaschke\n"
            << "phase = 0\n"
            << "zeros = 0.5,0; -0.5,0\n";
    }
    CHECK(run_cli("area --config " + config_path.string() + " --seed 2") == 0);
    const auto doc = read_json(dir.path / "area.json");
    CHECK(doc.at("meta").at("seed") == 2);
    CHECK(doc.at("meta").at("samples") == 50000);
    CHECK(doc.at("map").at("kind") == "blaschke");
}

TEST_CASE("invalid input exits with the validation code") {
    TempDir dir("disklev_cli_invalid");
    CHECK(run_cli("area --out-dir " + dir.str()) == 1);  // blaschke with no zeros
    CHECK(run_cli("area --map moebius --a 1.5 --out-dir " + dir.str()) == 1);
    CHECK(run_cli("area --map moebius --a 0.5 --t 1.5 --out-dir " + dir.str()) == 1);
    CHECK(run_cli("area --map moebius --a 0.5 --samples 10 --out-dir " + dir.str()) == 1);
    CHECK(run_cli("no-such-task") == 1);
    CHECK(run_cli("radial-verify --a 0.2 --h-const 1 --out-dir " + dir.str()) == 1);
}
