#include "wmc/mesh.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <utility>

#include "wmc/errors.hpp"

namespace wmc {
namespace {

// Fixed-format float printing so output bytes do not depend on the stream's
// locale or prior formatting state.
std::string fmt(double x, const char* spec) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, x);
  return buf;
}

template <typename WriteFn>
void write_file(const std::string& path, WriteFn&& write) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open " + path + " for writing");
  write(f);
  f.flush();
  if (!f) throw IoError("write to " + path + " failed");
}

}  // namespace

Mesh tessellate(const ParametricSurface& s, int nu, int nv, std::string generator) {
  if (nu < 2 || nv < 2) throw InvalidParams("tessellate needs nu, nv >= 2");
  Mesh mesh;
  mesh.generator = std::move(generator);
  mesh.vertices.reserve(static_cast<size_t>(nu) * nv);
  const double du = s.domain.u.length() / (nu - 1);
  const double dv = s.domain.v.length() / (nv - 1);
  for (int i = 0; i < nu; ++i) {
    const double u = s.domain.u.lo + i * du;
    for (int j = 0; j < nv; ++j) {
      const double v = s.domain.v.lo + j * dv;
      const Vec3 p = s.X(u, v);
      const double cross = s.Xu(u, v).cross(s.Xv(u, v)).norm();
      if (!p.allFinite() || !std::isfinite(cross) || cross <= kDegenerateCross) {
        std::ostringstream msg;
        msg << "degenerate parametrization: |Xu x Xv| = " << cross << " at (u, v) = ("
            << u << ", " << v << ")";
        throw DegenerateSurface(msg.str());
      }
      mesh.vertices.push_back(p);
    }
  }
  mesh.faces.reserve(static_cast<size_t>(nu - 1) * (nv - 1));
  for (int i = 0; i + 1 < nu; ++i) {
    for (int j = 0; j + 1 < nv; ++j) {
      mesh.faces.push_back(
          {i * nv + j, i * nv + j + 1, (i + 1) * nv + j + 1, (i + 1) * nv + j});
    }
  }
  return mesh;
}

void export_obj(const Mesh& mesh, std::ostream& out) {
  const int n = static_cast<int>(mesh.vertices.size());
  for (const auto& face : mesh.faces) {
    for (int idx : face) {
      if (idx < 0 || idx >= n) {
        std::ostringstream msg;
        msg << "face references vertex " << idx << " outside [0, " << n << ")";
        throw InvalidParams(msg.str());
      }
    }
  }
  for (const Vec3& p : mesh.vertices) {
    if (!p.allFinite()) throw InvalidParams("mesh has a non-finite vertex");
  }
  out << "# weighted-minimal " << mesh.generator << "\n";
  for (const Vec3& p : mesh.vertices) {
    out << "v " << fmt(p.x(), "%.9g") << ' ' << fmt(p.y(), "%.9g") << ' '
        << fmt(p.z(), "%.9g") << "\n";
  }
  for (const auto& face : mesh.faces) {
    out << "f " << face[0] + 1 << ' ' << face[1] + 1 << ' ' << face[2] + 1 << ' '
        << face[3] + 1 << "\n";
  }
}

void export_obj(const Mesh& mesh, const std::string& path) {
  write_file(path, [&mesh](std::ostream& out) { export_obj(mesh, out); });
}

void export_report_csv(const MinimalityReport& report, std::ostream& out) {
  out << "u,v,x,y,z,H,Hphi\n";
  for (const ReportRecord& r : report.grid) {
    out << fmt(r.u, "%.12g") << ',' << fmt(r.v, "%.12g") << ','
        << fmt(r.point.x(), "%.12g") << ',' << fmt(r.point.y(), "%.12g") << ','
        << fmt(r.point.z(), "%.12g") << ',' << fmt(r.H, "%.12g") << ','
        << fmt(r.Hphi, "%.12g") << "\n";
  }
}

void export_report_csv(const MinimalityReport& report, const std::string& path) {
  write_file(path, [&report](std::ostream& out) { export_report_csv(report, out); });
}

}  // namespace wmc
