#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "wmc/curvature.hpp"
#include "wmc/surface.hpp"

namespace wmc {

struct Mesh {
  std::vector<Vec3> vertices;              // row-major (u outer) grid order
  std::vector<std::array<int, 4>> faces;   // 0-based quads
  std::string generator;                   // provenance note for the OBJ header
};

// Inclusive (nu x nv) vertex grid; quad (i,j) = [i*nv+j, i*nv+j+1,
// (i+1)*nv+j+1, (i+1)*nv+j]. Regularity is checked at every vertex.
Mesh tessellate(const ParametricSurface& s, int nu, int nv,
                std::string generator = "parametric-grid");

// Wavefront OBJ subset: one `# weighted-minimal <generator>` comment, `v`
// lines at 9 significant digits, 1-based `f` quads. LF endings, byte-stable.
void export_obj(const Mesh& mesh, std::ostream& out);
void export_obj(const Mesh& mesh, const std::string& path);

// CSV `u,v,x,y,z,H,Hphi` at 12 significant digits, LF endings. Summary
// statistics are not written; they belong to the caller's diagnostics.
void export_report_csv(const MinimalityReport& report, std::ostream& out);
void export_report_csv(const MinimalityReport& report, const std::string& path);

}  // namespace wmc
