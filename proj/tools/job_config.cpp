#include "job_config.hpp"

#include <cmath>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>

namespace wmctool {
namespace {

using nlohmann::json;
using wmc::InvalidParams;
using wmc::Interval;
using wmc::Vec3;

[[noreturn]] void bad(const std::string& what) { throw InvalidParams(what); }

void reject_unknown_keys(const json& j, const char* where,
                         std::initializer_list<const char*> allowed) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool known = false;
    for (const char* key : allowed) {
      if (it.key() == key) {
        known = true;
        break;
      }
    }
    if (!known) bad("unknown key '" + it.key() + "' in " + where);
  }
}

double finite_number(const json& j, const std::string& name) {
  if (!j.is_number()) bad(name + " must be a number");
  const double x = j.get<double>();
  if (!std::isfinite(x)) bad(name + " must be finite");
  return x;
}

double number_or(const json& j, const char* key, double fallback) {
  return j.contains(key) ? finite_number(j.at(key), key) : fallback;
}

Vec3 vec3_field(const json& j, const std::string& name) {
  if (!j.is_array() || j.size() != 3) bad(name + " must be an array of 3 numbers");
  return Vec3(finite_number(j[0], name + "[0]"), finite_number(j[1], name + "[1]"),
              finite_number(j[2], name + "[2]"));
}

Eigen::Vector2d vec2_field(const json& j, const std::string& name) {
  if (!j.is_array() || j.size() != 2) bad(name + " must be an array of 2 numbers");
  return {finite_number(j[0], name + "[0]"), finite_number(j[1], name + "[1]")};
}

Interval interval_or(const json& j, const char* key, Interval fallback) {
  if (!j.contains(key)) return fallback;
  const json& r = j.at(key);
  if (!r.is_array() || r.size() != 2) bad(std::string(key) + " must be [lo, hi]");
  Interval out{finite_number(r[0], std::string(key) + "[0]"),
               finite_number(r[1], std::string(key) + "[1]")};
  if (!out.valid()) bad(std::string(key) + " must satisfy lo < hi");
  return out;
}

std::string str_field(const json& j, const std::string& name) {
  if (!j.is_string()) bad(name + " must be a string");
  return j.get<std::string>();
}

std::string short_num(double x) {
  std::ostringstream out;
  out << x;
  return out.str();
}

BuiltSurface build_cylindrical(const json& j) {
  reject_unknown_keys(j, "surface", {"kind", "A", "b", "c", "rot", "shift", "u_range", "v_range"});
  wmc::CylindricalFamilyParams p;
  p.A = number_or(j, "A", 1.0);
  p.b = number_or(j, "b", 1.0);
  p.c = number_or(j, "c", 0.0);
  p.rot_z = number_or(j, "rot", 0.0);
  if (j.contains("shift")) p.shift = vec3_field(j.at("shift"), "shift");
  const Interval ur = interval_or(j, "u_range", {-1.0, 1.0});
  const Interval vr = interval_or(j, "v_range", {-1.0, 1.0});
  BuiltSurface out;
  out.surface = wmc::make_cylindrical_minimal(p, vr, ur).as_parametric();
  out.generator = "cylindrical A=" + short_num(p.A) + " b=" + short_num(p.b) + " c=" +
                  short_num(p.c);
  return out;
}

BuiltSurface build_vertical_plane(const json& j) {
  reject_unknown_keys(j, "surface", {"kind", "direction", "through", "u_range", "v_range"});
  const Eigen::Vector2d dir =
      j.contains("direction") ? vec2_field(j.at("direction"), "direction")
                              : Eigen::Vector2d(1.0, 0.0);
  const Vec3 through =
      j.contains("through") ? vec3_field(j.at("through"), "through") : Vec3(Vec3::Zero());
  const Interval ur = interval_or(j, "u_range", {-1.0, 1.0});
  const Interval vr = interval_or(j, "v_range", {-1.0, 1.0});
  BuiltSurface out;
  out.surface = wmc::make_vertical_plane(dir, through, ur, vr).as_parametric();
  out.generator =
      "vertical-plane direction=(" + short_num(dir.x()) + "," + short_num(dir.y()) + ")";
  return out;
}

BuiltSurface build_translation_surface(const json& j) {
  reject_unknown_keys(j, "surface", {"kind", "c", "D", "d", "u_range", "v_range"});
  const double c = number_or(j, "c", 0.0);
  const double D = number_or(j, "D", 0.0);
  const double d = number_or(j, "d", 0.0);
  const Interval ur = interval_or(j, "u_range", {-1.0, 1.0});
  const Interval vr = interval_or(j, "v_range", {-1.0, 1.0});
  BuiltSurface out;
  out.surface = wmc::make_translation_minimal(c, D, d, ur, vr).as_parametric();
  out.generator =
      "translation c=" + short_num(c) + " D=" + short_num(D) + " d=" + short_num(d);
  return out;
}

BuiltSurface build_gallery(const json& j) {
  reject_unknown_keys(
      j, "surface",
      {"kind", "gallery", "radius", "normal", "offset", "pitch", "u_range", "v_range"});
  if (!j.contains("gallery")) bad("gallery surface needs a 'gallery' kind");
  const std::string kind = str_field(j.at("gallery"), "gallery");
  wmc::GallerySpec spec;
  std::string tag;
  if (kind == "sphere") {
    spec = wmc::GallerySpec::sphere(number_or(j, "radius", 1.0));
    tag = "gallery sphere R=" + short_num(spec.radius);
  } else if (kind == "cylinder") {
    spec = wmc::GallerySpec::cylinder_z(number_or(j, "radius", 1.0));
    tag = "gallery cylinder R=" + short_num(spec.radius);
  } else if (kind == "plane") {
    const Vec3 n = j.contains("normal") ? vec3_field(j.at("normal"), "normal")
                                        : Vec3(0.0, 0.0, 1.0);
    spec = wmc::GallerySpec::plane(n, number_or(j, "offset", 0.0));
    tag = "gallery plane offset=" + short_num(spec.offset);
  } else if (kind == "helicoid") {
    spec = wmc::GallerySpec::helicoid(number_or(j, "pitch", 1.0));
    tag = "gallery helicoid pitch=" + short_num(spec.pitch);
  } else {
    bad("unknown gallery kind '" + kind + "'");
  }
  BuiltSurface out;
  out.surface = wmc::make_gallery_surface(spec);
  out.surface.domain.u = interval_or(j, "u_range", out.surface.domain.u);
  out.surface.domain.v = interval_or(j, "v_range", out.surface.domain.v);
  out.generator = tag;
  return out;
}

}  // namespace

wmc::DensityField density_from_json(const json& j) {
  reject_unknown_keys(j, "density", {"kind", "a"});
  if (!j.contains("kind")) bad("density needs a 'kind'");
  const std::string kind = str_field(j.at("kind"), "density.kind");
  if (kind == "ez") return wmc::make_density_ez();
  if (kind == "gaussian") return wmc::make_density_gaussian();
  if (kind == "linear") {
    if (!j.contains("a")) bad("linear density needs the gradient vector 'a'");
    return wmc::make_density_linear(vec3_field(j.at("a"), "density.a"));
  }
  bad("unknown density kind '" + kind + "'");
}

BuiltSurface build_surface_from_json(const json& j) {
  if (!j.is_object()) bad("surface must be an object");
  if (!j.contains("kind")) bad("surface needs a 'kind'");
  const std::string kind = str_field(j.at("kind"), "surface.kind");
  if (kind == "cylindrical") return build_cylindrical(j);
  if (kind == "vertical-plane") return build_vertical_plane(j);
  if (kind == "translation") return build_translation_surface(j);
  if (kind == "gallery") return build_gallery(j);
  bad("unknown surface kind '" + kind + "'");
}

JobConfig parse_job_config(const json& j) {
  if (!j.is_object()) bad("config must be a JSON object");
  reject_unknown_keys(j, "config",
                      {"density", "surface", "grid", "tolerance", "derivatives", "outputs"});
  if (!j.contains("surface")) bad("config needs a 'surface'");

  JobConfig cfg;
  if (j.contains("density")) cfg.density = density_from_json(j.at("density"));
  cfg.surface_json = j.at("surface");
  cfg.surface = build_surface_from_json(cfg.surface_json);

  if (j.contains("grid")) {
    const json& g = j.at("grid");
    reject_unknown_keys(g, "grid", {"nu", "nv"});
    const double nu = number_or(g, "nu", 50.0);
    const double nv = number_or(g, "nv", 50.0);
    if (nu < 2 || nv < 2 || nu != std::floor(nu) || nv != std::floor(nv)) {
      bad("grid nu, nv must be integers >= 2");
    }
    cfg.nu = static_cast<int>(nu);
    cfg.nv = static_cast<int>(nv);
  }
  cfg.tolerance = number_or(j, "tolerance", 1e-8);
  if (!(cfg.tolerance > 0)) bad("tolerance must be positive");

  if (j.contains("derivatives")) {
    const std::string mode = str_field(j.at("derivatives"), "derivatives");
    if (mode == "fd") {
      cfg.use_fd = true;
      cfg.surface.surface = wmc::with_fd_derivatives(cfg.surface.surface);
    } else if (mode != "analytic") {
      bad("derivatives must be 'analytic' or 'fd'");
    }
  }

  if (j.contains("outputs")) {
    const json& o = j.at("outputs");
    reject_unknown_keys(o, "outputs", {"obj", "csv"});
    if (o.contains("obj")) cfg.obj_path = str_field(o.at("obj"), "outputs.obj");
    if (o.contains("csv")) cfg.csv_path = str_field(o.at("csv"), "outputs.csv");
  }
  return cfg;
}

JobConfig load_job_config(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw wmc::IoError("cannot open config " + path);
  json j;
  try {
    j = json::parse(f);
  } catch (const json::exception& e) {
    throw InvalidParams("config " + path + " is not valid JSON: " + e.what());
  }
  return parse_job_config(j);
}

}  // namespace wmctool
