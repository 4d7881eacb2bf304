#pragma once

#include <string>

#include "json.hpp"
#include "wmc/wmc.hpp"

namespace wmctool {

struct BuiltSurface {
  wmc::ParametricSurface surface;
  std::string generator;  // short provenance tag for OBJ headers
};

// One verification/generation job, parsed from a single JSON document.
// Unknown keys anywhere in the document are rejected; every numeric field
// must be finite.
struct JobConfig {
  wmc::DensityField density = wmc::make_density_ez();
  nlohmann::json surface_json;  // kept verbatim so sweeps can override fields
  BuiltSurface surface;
  bool use_fd = false;  // replace analytic derivatives by finite differences
  int nu = 50, nv = 50;
  double tolerance = 1e-8;
  std::string obj_path;  // empty when the config names no output
  std::string csv_path;
};

wmc::DensityField density_from_json(const nlohmann::json& j);
BuiltSurface build_surface_from_json(const nlohmann::json& j);
JobConfig parse_job_config(const nlohmann::json& j);
JobConfig load_job_config(const std::string& path);

}  // namespace wmctool
