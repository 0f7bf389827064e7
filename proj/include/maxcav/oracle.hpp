// Copyright (c) 2026 The maxcav Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "maxcav/assembly.hpp"
#include "maxcav/boundary_algebra.hpp"
#include "maxcav/mesh.hpp"
#include "maxcav/types.hpp"

namespace maxcav::oracle {

/// Reference system built by a deliberately independent code path: shape
/// functions evaluated from the barycentric coordinate system solved point
/// by point, high-order collapsed Gauss quadrature, dense storage, and a
/// re-derived pec elimination. Shares no quadrature tables or shape-function
/// code with the production assembly. Small meshes only.
struct DenseSystem {
  Eigen::MatrixXcd A;
  Eigen::VectorXcd b;
  std::vector<int> free_edges;  // reduced index -> edge id
};

inline constexpr int kMaxEdges = 200;

/// Throws std::invalid_argument when the mesh exceeds kMaxEdges edges.
DenseSystem dense_assemble(const TetMesh& mesh, const std::vector<MaterialSpec>& materials,
                           const std::vector<ImpedancePatch>& patches, double omega,
                           double delta, const SourceField& f_e, const SourceField& f_h);

Eigen::VectorXcd dense_solve(const DenseSystem& system);

/// Dense high-order quadrature of sigma-weighted tangential Whitney products
/// on one boundary facet (reference for the production facet matrix).
Eigen::Matrix3cd dense_facet_matrix(const TetMesh& mesh, int facet, const Mat3c& sigma);

struct CubeResonance {
  double omega = 0.0;
  int multiplicity = 0;
};

/// Resonant frequencies omega = pi sqrt(m^2 + n^2 + p^2) of the unit cube
/// with perfectly conducting walls, over index triples with max entry
/// <= max_index and at least two nonzero entries; sorted ascending and
/// deduplicated. The multiplicity counts ordered triples, twice when all
/// three indices are positive (two polarizations).
std::vector<CubeResonance> analytic_cube_resonances(int max_index);

}  // namespace maxcav::oracle
