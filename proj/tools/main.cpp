#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "job_config.hpp"

namespace {

using wmctool::JobConfig;

std::string fmt(double x, const char* spec) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, x);
  return buf;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw wmc::IoError("cannot open " + path + " for writing");
  return f;
}

int run_generate(const std::string& config_path, std::string obj_path) {
  const JobConfig cfg = wmctool::load_job_config(config_path);
  if (obj_path.empty()) obj_path = cfg.obj_path;
  if (obj_path.empty()) {
    throw wmc::InvalidParams("generate needs an output path (--obj or outputs.obj)");
  }
  const wmc::Mesh mesh =
      wmc::tessellate(cfg.surface.surface, cfg.nu, cfg.nv, cfg.surface.generator);
  wmc::export_obj(mesh, obj_path);
  std::cerr << "wrote " << obj_path << ": " << mesh.vertices.size() << " vertices, "
            << mesh.faces.size() << " quads\n";
  return 0;
}

int run_verify(const std::string& config_path, std::string csv_path) {
  const JobConfig cfg = wmctool::load_job_config(config_path);
  if (csv_path.empty()) csv_path = cfg.csv_path;
  const wmc::MinimalityReport report = wmc::minimality_report(
      cfg.surface.surface, cfg.density, cfg.nu, cfg.nv, cfg.tolerance);
  if (!csv_path.empty()) wmc::export_report_csv(report, csv_path);
  std::cerr << "max|Hphi| = " << fmt(report.max_abs_Hphi, "%.6g") << " over " << cfg.nu
            << "x" << cfg.nv << " grid (tolerance " << fmt(report.tolerance, "%.6g")
            << "): " << (report.pass ? "PASS" : "FAIL") << "\n";
  return report.pass ? 0 : 1;
}

int run_ode(double A, double b, double c, double u_end, double step,
            const std::string& csv_path) {
  const wmc::DirectrixState init = wmc::closed_form_directrix(A, b, c, 0.0);
  wmc::OdeSolution sol =
      wmc::integrate_directrix(b, c, init.position, init.velocity, u_end, step);
  sol.A = A;

  double sup = 0.0;
  std::vector<wmc::Vec3> deltas;
  deltas.reserve(sol.samples.size());
  for (const wmc::OdeSample& s : sol.samples) {
    const wmc::Vec3 d = s.position - wmc::closed_form_directrix(A, b, c, s.u).position;
    deltas.push_back(d);
    sup = std::max(sup, d.cwiseAbs().maxCoeff());
  }

  if (!csv_path.empty()) {
    std::ofstream out = open_output(csv_path);
    out << "u,x,y,z,vx,vy,vz,dx,dy,dz\n";
    for (size_t i = 0; i < sol.samples.size(); ++i) {
      const wmc::OdeSample& s = sol.samples[i];
      const wmc::Vec3& d = deltas[i];
      out << fmt(s.u, "%.12g") << ',' << fmt(s.position.x(), "%.12g") << ','
          << fmt(s.position.y(), "%.12g") << ',' << fmt(s.position.z(), "%.12g") << ','
          << fmt(s.velocity.x(), "%.12g") << ',' << fmt(s.velocity.y(), "%.12g") << ','
          << fmt(s.velocity.z(), "%.12g") << ',' << fmt(d.x(), "%.12g") << ','
          << fmt(d.y(), "%.12g") << ',' << fmt(d.z(), "%.12g") << "\n";
    }
    out.flush();
    if (!out) throw wmc::IoError("write to " + csv_path + " failed");
  }

  std::cerr << "sup|delta| = " << fmt(sup, "%.6g") << " over " << sol.samples.size()
            << " samples\n";
  return sup < 1e-6 ? 0 : 1;
}

int run_sweep(const std::string& config_path, const std::string& param,
              const std::vector<double>& values, const std::string& csv_path) {
  const JobConfig cfg = wmctool::load_job_config(config_path);
  if (values.empty()) throw wmc::InvalidParams("sweep needs at least one value");

  std::ofstream out = open_output(csv_path);
  out << param << ",max_abs_Hphi\n";
  for (double value : values) {
    nlohmann::json sj = cfg.surface_json;
    if (sj.contains(param) && !sj.at(param).is_number()) {
      throw wmc::InvalidParams("sweep parameter '" + param + "' is not a scalar field");
    }
    sj[param] = value;
    wmctool::BuiltSurface built = wmctool::build_surface_from_json(sj);
    if (cfg.use_fd) built.surface = wmc::with_fd_derivatives(built.surface);
    const wmc::MinimalityReport report =
        wmc::minimality_report(built.surface, cfg.density, cfg.nu, cfg.nv, cfg.tolerance);
    out << fmt(value, "%.12g") << ',' << fmt(report.max_abs_Hphi, "%.12g") << "\n";
    std::cerr << param << " = " << fmt(value, "%.6g")
              << ": max|Hphi| = " << fmt(report.max_abs_Hphi, "%.6g") << "\n";
  }
  out.flush();
  if (!out) throw wmc::IoError("write to " + csv_path + " failed");
  return 0;
}

int run_gauss(const std::string& family, const std::vector<double>& bracket) {
  if (bracket.size() != 2) throw wmc::InvalidParams("--bracket needs lo,hi");
  wmc::RadialFamily fam;
  if (family == "sphere") {
    fam = wmc::RadialFamily::sphere;
  } else if (family == "cylinder") {
    fam = wmc::RadialFamily::cylinder_z;
  } else {
    throw wmc::InvalidParams("--family must be sphere or cylinder");
  }
  const double radius = wmc::find_minimal_radius(fam, wmc::make_density_gaussian(),
                                                 {bracket[0], bracket[1]});
  if (fam == wmc::RadialFamily::sphere) {
    std::cerr << "convention note: this radius follows the tool's outward-normal, "
                 "average-of-principal-curvatures conventions; other curvature "
                 "normalizations in circulation place the same family's critical "
                 "radius at 1/sqrt(2) instead of sqrt(2)\n";
  }
  std::cout << fmt(radius, "%.9f") << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"weighted-minimal: surfaces of vanishing weighted mean curvature"};
  app.require_subcommand(1);

  std::string config_path, obj_path, csv_path;

  CLI::App* gen = app.add_subcommand("generate", "tessellate a surface into a quad OBJ");
  gen->add_option("--config", config_path, "job config (JSON)")->required();
  gen->add_option("--obj", obj_path, "output OBJ path (overrides outputs.obj)");

  CLI::App* ver = app.add_subcommand("verify", "grid-check max|Hphi| against a tolerance");
  ver->add_option("--config", config_path, "job config (JSON)")->required();
  ver->add_option("--csv", csv_path, "per-node report CSV (overrides outputs.csv)");

  double A = 1.0, b = 1.0, c = 0.0, u_end = 1.0, step = 1e-3;
  CLI::App* ode = app.add_subcommand(
      "ode", "integrate the directrix system and compare with the closed form");
  ode->add_option("--A", A, "family constant, A > 0")->capture_default_str();
  ode->add_option("--b", b, "director y-component")->capture_default_str();
  ode->add_option("--c", c, "director z-component")->capture_default_str();
  ode->add_option("--u-end", u_end, "integration endpoint")->capture_default_str();
  ode->add_option("--step", step, "RK4 step size")->capture_default_str();
  ode->add_option("--csv", csv_path, "per-step CSV with closed-form deltas");

  std::string param;
  std::vector<double> values;
  CLI::App* sweep =
      app.add_subcommand("sweep", "re-verify while varying one surface parameter");
  sweep->add_option("--config", config_path, "job config (JSON)")->required();
  sweep->add_option("--param", param, "surface field to vary")->required();
  sweep->add_option("--values", values, "comma-separated values")
      ->required()
      ->delimiter(',');
  sweep->add_option("--csv", csv_path, "summary CSV path")->required();

  std::string family;
  std::vector<double> bracket;
  CLI::App* gauss = app.add_subcommand(
      "gauss", "bisect for the minimal member of a radial family under the "
               "Gaussian weight");
  gauss->add_option("--family", family, "sphere or cylinder")->required();
  gauss->add_option("--bracket", bracket, "radius bracket lo,hi")
      ->required()
      ->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (gen->parsed()) return run_generate(config_path, obj_path);
    if (ver->parsed()) return run_verify(config_path, csv_path);
    if (ode->parsed()) return run_ode(A, b, c, u_end, step, csv_path);
    if (sweep->parsed()) return run_sweep(config_path, param, values, csv_path);
    if (gauss->parsed()) return run_gauss(family, bracket);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
