// Copyright (c) 2026 The maxcav Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <memory>
#include <vector>

#include "maxcav/assembly.hpp"
#include "maxcav/boundary_algebra.hpp"
#include "maxcav/mesh.hpp"
#include "maxcav/types.hpp"

namespace maxcav {

/// Lowest-order nodal space with homogeneous Dirichlet boundary (boundary
/// vertices eliminated) and the eps-weighted stiffness
///   S[i][j] = integral of eps grad psi_j . grad psi_i.
/// The stiffness is factorized once and reused for every solve.
class NodalSpace {
public:
  NodalSpace(const TetMesh& mesh, const std::vector<MaterialSpec>& materials);
  ~NodalSpace();
  NodalSpace(NodalSpace&&) noexcept;
  NodalSpace& operator=(NodalSpace&&) noexcept;

  int num_interior() const { return static_cast<int>(interior_vertices_.size()); }
  const ComplexSparseMatrix& stiffness() const { return stiffness_; }
  const std::vector<int>& interior_vertices() const { return interior_vertices_; }

  /// Solves S x = rhs on interior vertices. Throws SingularSystemError on
  /// factorization failure.
  ComplexVector solve(const ComplexVector& rhs) const;

  /// Interior vector -> full vertex vector with zeros on the boundary.
  ComplexVector expand(const ComplexVector& interior) const;

private:
  const TetMesh* mesh_;
  std::vector<int> interior_vertices_;
  std::vector<int> interior_index_;  // per vertex; -1 on boundary
  ComplexSparseMatrix stiffness_;
  struct Factorization;
  std::unique_ptr<Factorization> factorization_;
};

struct SourceReduction {
  SourceField f_e_reduced;  // f_e - i omega eps grad(chi), per element
  ComplexVector chi;        // full vertex vector (zero on boundary)
  double div_residual;      // max nodal moment of the reduced source, relative
};

/// Splits off the gradient part of f_e: chi solves the eps-weighted Poisson
/// problem with nodal data (i omega)^{-1} f_e, and the reduced source
/// f_e - i omega eps grad(chi) has vanishing discrete divergence against
/// every interior nodal function.
SourceReduction reduce_source(const TetMesh& mesh, const std::vector<MaterialSpec>& materials,
                              double omega, const SourceField& f_e);

struct DivFreeProjection {
  ComplexVector v;          // full edge vector, discretely eps-divergence-free
  ComplexVector psi;        // full vertex vector (zero on boundary)
  double ortho_residual;    // max eps-moment of v against nodal gradients, relative
};

/// Splits an edge field u = v + G psi with psi in the Dirichlet nodal space
/// and v eps-orthogonal to all discrete gradients.
DivFreeProjection project_div_free(const TetMesh& mesh,
                                   const std::vector<MaterialSpec>& materials,
                                   const ComplexVector& u_full);

DivFreeProjection project_div_free(const NodalSpace& space, const TetMesh& mesh,
                                   const ComplexVector& u_full);

}  // namespace maxcav
