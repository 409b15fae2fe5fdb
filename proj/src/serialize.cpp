#include "disklev/serialize.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace disklev {

void to_json(nlohmann::json& j, const AreaEstimate& estimate) {
    j = nlohmann::json{
        {"value", estimate.value},
        {"stderr", estimate.std_error},
        {"method", std::string(to_string(estimate.method))},
        {"samples", estimate.samples},
    };
    if (estimate.bracket) {
        j["bracket"] = {{"lower", estimate.bracket->lower}, {"upper", estimate.bracket->upper}};
    }
}

void to_json(nlohmann::json& j, const BoundReport& report) {
    j = nlohmann::json{
        {"t", report.t},
        {"d", report.d},
        {"K", report.dilatation},
        {"measured_sublevel", report.measured_sublevel},
        {"sharp_bound", report.sharp_bound},
        {"margin", report.margin},
        {"verdict", std::string(to_string(report.verdict))},
    };
}

void to_json(nlohmann::json& j, const NormResult& result) {
    j = nlohmann::json{
        {"p", result.p},
        {"value", result.value},
        {"method", std::string(to_string(result.method))},
        {"error_estimate", result.error_estimate},
    };
}

std::string format_number(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

void write_json_file(const std::filesystem::path& path, const nlohmann::json& j) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write file: " + path.string());
    }
    out << j.dump(2) << '\n';
    if (!out) {
        throw std::runtime_error("failed writing file: " + path.string());
    }
}

std::string bound_report_csv_row(const BoundReport& report) {
    std::string row;
    row += format_number(report.t);
    row += ',';
    row += std::to_string(report.d);
    row += ',';
    row += format_number(report.dilatation);
    row += ',';
    row += format_number(report.measured_sublevel.value);
    row += ',';
    row += format_number(report.measured_sublevel.std_error);
    row += ',';
    row += format_number(report.sharp_bound);
    row += ',';
    row += format_number(report.margin);
    row += ',';
    row += to_string(report.verdict);
    return row;
}

}  // namespace disklev
