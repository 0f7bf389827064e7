// Copyright (c) 2026 The maxcav Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <vector>

#include "maxcav/boundary_algebra.hpp"
#include "maxcav/mesh.hpp"
#include "maxcav/types.hpp"

namespace maxcav {

/// Free/eliminated status of every edge dof. An edge is eliminated exactly
/// when it lies on at least one boundary facet and every boundary facet
/// containing it carries a pec patch (the tangential trace is then forced to
/// zero strongly). Free edges keep their relative order in the reduced
/// numbering.
struct DofMap {
  int num_edges = 0;
  std::vector<int> reduced_index;  // per edge; -1 when eliminated
  std::vector<int> free_edges;     // reduced index -> edge id

  int num_free() const { return static_cast<int>(free_edges.size()); }
  bool is_free(int edge) const { return reduced_index[edge] >= 0; }

  ComplexVector expand(const ComplexVector& reduced) const;   // zeros on eliminated edges
  ComplexVector restrict(const ComplexVector& full) const;
};

DofMap build_dof_map(const TetMesh& mesh, const std::vector<ImpedancePatch>& patches);

/// Volumetric source term, evaluated per element at quadrature points.
class SourceField {
public:
  SourceField() = default;  // zero field

  static SourceField zero();
  static SourceField constant(const Vec3c& value);
  static SourceField function(std::function<Vec3c(const Vec3&)> f);
  static SourceField per_element(std::vector<Vec3c> values);

  Vec3c eval(int element, const Vec3& x) const;
  bool is_zero() const { return !eval_ && shift_.empty(); }

  /// Returns this field minus a per-element constant correction; used to
  /// subtract the gradient part of a source.
  SourceField shifted_by(std::vector<Vec3c> element_constants) const;

private:
  std::function<Vec3c(int, const Vec3&)> eval_;  // null means zero
  std::vector<Vec3c> shift_;                     // subtracted per element when non-empty
};

struct ElementMatrices {
  Eigen::Matrix<Complex, 6, 6> K;  // integral of mu^{-1} curl phi_j . curl phi_i
  Eigen::Matrix<Complex, 6, 6> M;  // integral of eps phi_j . phi_i
};

/// Whitney edge-element matrices on one tet; exact for per-element-constant
/// coefficients. Throws ValidationError on a degenerate tet.
ElementMatrices element_matrices(const TetMesh& mesh, int tet, const Mat3c& eps,
                                 const Mat3c& mu);

/// Boundary facet matrix over the three facet edges:
///   B[i][j] = integral over the facet of sigma (nu x phi_j) . (nu x phi_i)
/// using the tangential traces of the Whitney functions. The i*omega factor
/// of the weak form is applied at global assembly, not here. Throws
/// std::invalid_argument when the facet id is out of range.
Eigen::Matrix3cd facet_sigma_matrix(const TetMesh& mesh, int facet, const Mat3c& sigma);

/// Edge-by-vertex incidence matrix: (G p) on edge (a,b) is p_b - p_a.
ComplexSparseMatrix discrete_gradient(const TetMesh& mesh);

/// All coefficient blocks of the absorbing weak form, restricted to free
/// dofs, plus the combined system
///   A = K - omega^2 M_eps - i delta M_unit - i omega B_sigma.
/// B_sigma carries the regularized impedance coefficient of each non-pec
/// facet, including the eta^{-1} penalty block on mixed patches; B_unit is
/// the plain boundary mass over the same facets (trace-energy diagnostics).
struct AssembledSystem {
  ComplexSparseMatrix A;
  ComplexSparseMatrix K;
  ComplexSparseMatrix M_eps;
  ComplexSparseMatrix M_unit;
  ComplexSparseMatrix B_sigma;
  ComplexSparseMatrix B_unit;
  DofMap dofs;
  double omega = 0.0;
  double delta = 0.0;
};

/// Validates materials and patches, then assembles. Patch regularization is
/// applied facet by facet with that facet's outward normal.
AssembledSystem assemble_system(const TetMesh& mesh, const std::vector<MaterialSpec>& materials,
                                const std::vector<ImpedancePatch>& patches, double omega,
                                double delta);

/// b[i] = integral of { i omega f_e . phi_i + mu^{-1} f_h . curl phi_i }.
ComplexVector assemble_rhs(const TetMesh& mesh, const DofMap& dofs,
                           const std::vector<MaterialSpec>& materials, const SourceField& f_e,
                           const SourceField& f_h, double omega);

/// Element-wise magnetic field H = (i omega mu)^{-1} (curl E - f_h), with
/// curl E the constant Whitney curl on each tet and f_h evaluated at the
/// element centroid. Takes the full (expanded) edge coefficient vector.
std::vector<Vec3c> recover_H(const TetMesh& mesh, const ComplexVector& e_full,
                             const std::vector<MaterialSpec>& materials, const SourceField& f_h,
                             double omega);

/// Constant curl of the Whitney combination on one tet.
Vec3c element_curl(const TetMesh& mesh, int tet, const ComplexVector& e_full);

}  // namespace maxcav
