#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "horo/fans.hpp"
#include "horo/horospherical.hpp"
#include "horo/picard1.hpp"
#include "horo/realform.hpp"

namespace horo {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

// A single pipeline input: group + structure, optional datum, optional fan.
struct JobSpec {
  GroupSpec group;
  RealStructureSpec sigma;
  std::optional<HorosphericalDatum> datum;
  std::optional<ColoredFan> fan;
};

JobSpec job_from_json(const Json& j);
Json job_to_json(const JobSpec& job);

// Structured reports.  Every report echoes the schema version, the factor
// offset table (global 0-based node indices vs Bourbaki numbering) and, for
// job-driven commands, the job itself, re-emittable as an input document.
Json report_classify_group(const GroupSpec& g);
Json report_check(const JobSpec& job);
Json report_fan(const JobSpec& job);
Json report_picard1(int max_rank);
Json report_tables(int max_rank);

// Plain-text renderings of the corresponding reports.
std::string render_classify_group(const Json& report);
std::string render_check(const Json& report);
std::string render_fan(const Json& report);
std::string render_picard1(const Json& report);
std::string render_tables(const Json& report);

}  // namespace horo
