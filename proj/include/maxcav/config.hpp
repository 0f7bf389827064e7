// Copyright (c) 2026 The maxcav Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "maxcav/assembly.hpp"
#include "maxcav/boundary_algebra.hpp"
#include "maxcav/mesh.hpp"
#include "maxcav/solve.hpp"

namespace maxcav {

/// Named analytic source presets; complex numbers enter as [re, im] pairs.
struct SourceSpec {
  enum class Kind { zero, constant, gaussian, table };
  Kind kind = Kind::zero;
  Vec3c value = Vec3c::Zero();     // constant value / gaussian amplitude
  Vec3 center = Vec3::Zero();      // gaussian
  double width = 1.0;              // gaussian
  Vec3 wavevector = Vec3::Zero();  // gaussian plane-wave modulation
  std::string table_path;          // per-element table file

  SourceField make(const TetMesh& mesh) const;
};

struct MeshSpec {
  std::string path;  // used when not a box
  bool is_box = false;
  int n[3] = {1, 1, 1};
  Vec3 lengths = Vec3::Ones();

  TetMesh make() const;
};

struct PatchConfig {
  int patch = 0;
  Mat3c lambda = Mat3c::Zero();
  std::optional<double> eta;  // overrides the global default
};

struct Tolerances {
  double linear = 1e-10;     // relative residual of direct solves
  double rank = 1e-9;        // kernel rank cut, relative to sigma_max
  double validation = 1e-8;  // Hermitian / identity checks
  double c0 = 1e-8;          // required coercivity constant
};

struct OmegaRange {
  double start = 0.0;
  double stop = 0.0;
  double step = 0.0;
};

struct OutputConfig {
  std::string dir = ".";
  bool vtk = false;
};

/// One structured document describing a run: geometry, coefficients,
/// sources, frequency and absorption parameters, tolerances, outputs.
struct RunConfig {
  MeshSpec mesh;
  std::vector<MaterialSpec> materials;
  std::vector<PatchConfig> patches;
  SourceSpec f_e, f_h;
  std::optional<double> omega;
  std::optional<OmegaRange> omega_range;
  std::vector<double> omega_list;
  double delta = 0.0;
  std::vector<double> delta_schedule;
  double eta = 1e-6;
  Tolerances tol;
  OutputConfig output;

  static RunConfig parse(const nlohmann::json& doc);
  static RunConfig parse_file(const std::string& path);
  nlohmann::json to_json() const;

  std::vector<double> omegas() const;  // expanded list (range/list/single)
  std::vector<ImpedancePatch> make_patches() const;
  double patch_eta(const PatchConfig& p) const;
};

// Command entry points. Each writes a deterministic plain-text report to
// `out` (and artifacts under config.output.dir) and returns the process exit
// code: 0 ok, 1 validation failure, 2 parse error, 3 singular system.
int run_validate(const RunConfig& config, std::ostream& out);
int run_solve(const RunConfig& config, std::ostream& out);
int run_sweep(const RunConfig& config, std::ostream& out);
int run_la(const RunConfig& config, std::ostream& out);
int run_export(const RunConfig& config, std::ostream& out);

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitSingular = 3;

/// Legacy ASCII VTK unstructured grid with cell-data vectors E_re, E_im,
/// H_re, H_im (E interpolated to element centroids).
void export_vtk(const TetMesh& mesh, const FieldSolution& solution, const std::string& path);

/// Fixed-format float used everywhere in reports so identical configs yield
/// bit-identical output.
std::string format_float(double v);

}  // namespace maxcav
