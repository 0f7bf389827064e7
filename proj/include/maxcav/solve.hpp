// Copyright (c) 2026 The maxcav Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <vector>

#include "maxcav/assembly.hpp"
#include "maxcav/boundary_algebra.hpp"
#include "maxcav/mesh.hpp"
#include "maxcav/types.hpp"

namespace maxcav {

struct SolveConfig {
  double omega = 1.0;
  double delta = 0.0;
  double linear_tol = 1e-10;
  std::vector<double> delta_schedule;  // strictly decreasing when used
  int threads = 1;
};

struct EnergyReport {
  double source_power = 0.0;       // -Im(E^H b)
  double boundary_absorbed = 0.0;  // omega * E^H B_sigma E
  double volume_absorbed = 0.0;    // delta * E^H M_unit E
  double mismatch = 0.0;           // |lhs - rhs| / (1 + |rhs|)
};

struct FieldSolution {
  ComplexVector e_reduced;
  ComplexVector e_full;       // expanded to all edges (zeros on eliminated)
  std::vector<Vec3c> h;       // per element
  double residual = 0.0;      // ||A x - b|| / ||b||
  double e_l2 = 0.0;          // L2 norm of the edge field
  double trace_energy = 0.0;  // E^H B_unit E
  EnergyReport energy;
};

/// Sparse direct solve with one step of iterative refinement. Throws
/// SingularSystemError when the factorization fails or the relative residual
/// stays above tol.
ComplexVector solve_linear(const ComplexSparseMatrix& A, const ComplexVector& b, double tol);

/// Largest absorption delta0 with (1 - delta0^2) >= 2 delta0 omega^2 ||eps||,
/// i.e. the positive root of delta^2 + 2 omega^2 ||eps|| delta - 1 = 0,
/// evaluated in cancellation-free form.
double compute_delta0(double omega, double eps_bound);

/// Full pipeline: source reduction, assembly, direct solve, field recovery,
/// power balance. The returned E solves the absorbing system for the reduced
/// electric source and the original magnetic source.
FieldSolution solve_maxwell(const TetMesh& mesh, const std::vector<MaterialSpec>& materials,
                            const std::vector<ImpedancePatch>& patches, const SourceField& f_e,
                            const SourceField& f_h, const SolveConfig& config);

/// Discrete energy identity obtained by testing the solved system with E:
///   -delta E^H M_unit E - omega E^H B_sigma E = Im(E^H b).
/// Reports each term; throws ConsistencyError when the relative mismatch
/// exceeds 1e-8 (assembly bug signal, only meaningful for Hermitian
/// coefficient blocks).
EnergyReport power_balance(const AssembledSystem& system, const ComplexVector& e_reduced,
                           const ComplexVector& b);

struct AbsorptionStep {
  double delta = 0.0;
  double e_l2 = 0.0;
  double gap_to_next = 0.0;    // ||E_k - E_{k+1}||_L2, 0 for the last step
  double grad_part_l2 = 0.0;   // ||grad psi_delta||_L2 from the Helmholtz split
  double gap_to_direct = 0.0;  // ||E_delta - E_0||_L2 when a direct solve exists
};

struct AbsorptionReport {
  std::vector<AbsorptionStep> steps;
  bool direct_available = false;   // delta = 0 solve succeeded
  double direct_e_l2 = 0.0;
  double slope_gap = 0.0;          // log-log slope of gap_to_direct vs delta
  double slope_grad = 0.0;         // log-log slope of grad_part_l2 vs delta
  bool resonance_suspected = false;
  std::vector<std::string> notes;
  FieldSolution final_solution;    // last scheduled delta
};

/// Limiting-absorption continuation: solves the absorbing problem along the
/// decreasing delta schedule, tracks iterate gaps and the gradient part of
/// each solution, and compares against the direct delta = 0 solve when that
/// system is nonsingular. Norm growth across the schedule is reported as a
/// suspected resonance, not an error.
AbsorptionReport limiting_absorption(const TetMesh& mesh,
                                     const std::vector<MaterialSpec>& materials,
                                     const std::vector<ImpedancePatch>& patches,
                                     const SourceField& f_e, const SourceField& f_h,
                                     double omega, const std::vector<double>& delta_schedule,
                                     double linear_tol = 1e-10);

struct SweepPoint {
  double omega = 0.0;
  double response = 0.0;           // L2 norm of E, +inf for a singular solve
  double boundary_absorbed = 0.0;
  bool singular = false;
};

struct SweepPeak {
  double omega_grid = 0.0;     // sample at the local maximum
  double omega_refined = 0.0;  // 3-point quadratic fit in log-response
  double response = 0.0;
};

struct SweepReport {
  std::vector<SweepPoint> points;
  std::vector<SweepPeak> peaks;
};

/// One solve per frequency; interior local maxima of the response are
/// reported as peaks. Singular solves at delta = 0 enter as infinite
/// response. Throws std::invalid_argument for an empty or non-increasing
/// frequency list.
SweepReport frequency_sweep(const TetMesh& mesh, const std::vector<MaterialSpec>& materials,
                            const std::vector<ImpedancePatch>& patches, const SourceField& f_e,
                            const SourceField& f_h, const std::vector<double>& omegas,
                            double delta, double linear_tol = 1e-10, int threads = 1);

/// L2 norm of a Whitney edge field given full edge coefficients.
double edge_field_l2_norm(const TetMesh& mesh, const ComplexVector& e_full);

/// Least-squares slope of log(y) against log(x); pairs with y <= 0 are skipped.
double fit_loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace maxcav
