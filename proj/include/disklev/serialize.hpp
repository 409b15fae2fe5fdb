#ifndef DISKLEV_SERIALIZE_HPP
#define DISKLEV_SERIALIZE_HPP

#include <filesystem>
#include <string>

#include "json.hpp"

#include "disklev/area.hpp"
#include "disklev/bounds.hpp"
#include "disklev/norms.hpp"

namespace disklev {

void to_json(nlohmann::json& j, const AreaEstimate& estimate);
void to_json(nlohmann::json& j, const BoundReport& report);
void to_json(nlohmann::json& j, const NormResult& result);

/// Shortest round-trippable decimal form, locale independent.
std::string format_number(double value);

/// Writes pretty-printed JSON with a trailing newline.
void write_json_file(const std::filesystem::path& path, const nlohmann::json& j);

/// One CSV row in the bound sweep table (schema kept in bounds.hpp order:
/// t,d,K,measured,stderr,bound,margin,verdict).
std::string bound_report_csv_row(const BoundReport& report);

inline constexpr const char* kBoundSweepCsvHeader = "t,d,K,measured,stderr,bound,margin,verdict";

}  // namespace disklev

#endif
