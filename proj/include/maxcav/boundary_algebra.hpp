// Copyright (c) 2026 The maxcav Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "maxcav/types.hpp"

namespace maxcav {

/// Numerical kernel/complement splitting of a complex 3x3 matrix.
/// Singular values below tol * sigma_max count as zero; the kernel is spanned
/// by the corresponding right-singular vectors. For the zero matrix the
/// kernel is all of C^3.
struct KernelDecomposition {
  Eigen::MatrixXcd z_basis;      // 3 x (3-rank), orthonormal kernel basis
  Eigen::MatrixXcd zperp_basis;  // 3 x rank, orthonormal complement basis
  int rank = 0;
  double tol = 0.0;

  Mat3c kernel_projector() const;      // Pi_Z
  Mat3c complement_projector() const;  // Pi_{Z^perp}
};

KernelDecomposition kernel_decomposition(const Mat3c& lambda, double tol);

struct ValidationCondition {
  std::string id;           // short tag, e.g. "kernel-contains-normal"
  std::string description;  // human-readable statement of the check
  bool pass = false;
  double measured = 0.0;    // residual or eigenvalue backing the verdict
};

struct ValidationReport {
  std::vector<ValidationCondition> conditions;
  bool ok() const;
  std::string summary() const;
  const ValidationCondition* find(const std::string& id) const;
};

enum class PatchKind { pec, full_impedance, mixed };

std::string to_string(PatchKind kind);

/// Per-patch impedance data: the coefficient matrix Lambda together with its
/// derived kernel decomposition, the projector Theta onto ker(Lambda), and
/// Sigma, the inverse of Lambda on the kernel complement (zero on the
/// kernel). `eta` is the regularization weight used to enforce the kernel
/// constraint on the tangential trace weakly.
struct ImpedancePatch {
  int patch_id = 0;
  Mat3c lambda = Mat3c::Zero();
  KernelDecomposition decomposition;
  Mat3c theta = Mat3c::Identity();
  Mat3c sigma = Mat3c::Zero();
  double eta = 1e-6;
  PatchKind kind = PatchKind::pec;
};

/// Admissibility of Lambda at a boundary point with outward normal nu.
/// Conditions reported:
///   (i)   "kernel-contains-normal":   |Lambda nu| small, so nu in ker(Lambda)
///   (ii)  "range-in-complement":      ||Pi_Z Lambda|| small
///   (iii) "coercive-on-complement":   Lambda restricted to the kernel
///         complement is Hermitian within tol and its smallest eigenvalue
///         is >= c0
/// Failures are report entries, never exceptions.
ValidationReport validate_lambda(const Mat3c& lambda, const Vec3& nu, double c0, double tol);

/// Coercivity of Sigma + Theta on all of C^3: Hermitian within tol and
/// smallest eigenvalue of the Hermitian part >= c0.
ValidationReport validate_sigma_theta(const Mat3c& sigma, const Mat3c& theta, double c0,
                                      double tol);

/// Builds (Sigma, Theta) from an admissible Lambda: Theta projects onto
/// ker(Lambda); Sigma inverts Lambda on the complement and vanishes on the
/// kernel. Throws ValidationError when nu is visibly not in the kernel or
/// when the complement restriction is numerically singular relative to tol
/// (inconsistent rank cut).
std::pair<Mat3c, Mat3c> build_sigma_theta(const Mat3c& lambda, const Vec3& nu, double tol);

/// Assembles the full patch record (decomposition, Sigma, Theta, kind flag).
ImpedancePatch make_impedance_patch(int patch_id, const Mat3c& lambda, double eta, double tol);

/// Patch for Lambda_eta = Lambda + eta * Pi_{Z \cap nu^perp}: the tangential
/// part of the kernel becomes a stiff impedance, so the derived Sigma gains
/// the penalty block eta^{-1} * Pi_{Z \cap nu^perp} and only the normal
/// direction remains in the kernel. For a pec patch this yields
/// Lambda_eta = eta * (I - nu nu^T). Throws std::invalid_argument for
/// eta <= 0.
ImpedancePatch regularize_lambda(const ImpedancePatch& patch, double eta, const Vec3& nu);

/// Per-region material coefficients.
struct MaterialSpec {
  int region = 0;
  Mat3c eps = Mat3c::Identity();
  Mat3c mu = Mat3c::Identity();
};

/// Both eps and mu must be Hermitian within tol with smallest eigenvalue
/// >= c0 (this is what makes the quadratic form real and bounded below).
ValidationReport validate_material(const MaterialSpec& m, double c0, double tol);

/// sup over regions of the spectral norm of eps; feeds the admissible
/// absorption bound delta0.
double eps_operator_norm_bound(const std::vector<MaterialSpec>& materials);

const MaterialSpec& material_for_region(const std::vector<MaterialSpec>& materials, int region);

}  // namespace maxcav
