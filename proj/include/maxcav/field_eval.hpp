// Copyright (c) 2026 The maxcav Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "maxcav/mesh.hpp"
#include "maxcav/types.hpp"

namespace maxcav {

/// Point location and Whitney field evaluation on a tet mesh, backed by a
/// uniform bucket grid over the bounding box.
class FieldEvaluator {
public:
  explicit FieldEvaluator(const TetMesh& mesh);

  /// Containing tet of x, or -1 when x lies outside the mesh (up to a small
  /// barycentric slack for points on facets).
  int locate(const Vec3& x) const;

  /// Whitney edge field at x given full edge coefficients; zero outside.
  Vec3c eval(const ComplexVector& e_full, const Vec3& x) const;

private:
  const TetMesh* mesh_;
  Vec3 lo_, cell_;
  int nb_[3];
  std::vector<std::vector<int>> buckets_;
};

/// L2 norm of the difference between edge fields living on two different
/// meshes of the same domain, integrated over `mesh_a` with second-order
/// quadrature.
double cross_mesh_l2_gap(const TetMesh& mesh_a, const ComplexVector& e_a,
                         const TetMesh& mesh_b, const ComplexVector& e_b);

}  // namespace maxcav
