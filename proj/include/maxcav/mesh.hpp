// Copyright (c) 2026 The maxcav Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <string>
#include <vector>

#include "maxcav/types.hpp"

namespace maxcav {

struct PatchTag {
  int id;
  std::string name;
};

struct Tet {
  std::array<int, 4> v;
  int region = 0;
};

struct BoundaryFacet {
  std::array<int, 3> v;
  int patch = 0;
  int owner_tet = -1;
};

struct FacetFrame {
  Vec3 normal;  // outward unit normal
  double area;
  Vec3 t1, t2;  // orthonormal tangent basis, both orthogonal to normal
};

// Local edge numbering of a tetrahedron (vertex index pairs).
inline constexpr std::array<std::array<int, 2>, 6> kTetEdgeVertices = {
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

/// Tetrahedral mesh with globally numbered oriented edges and tagged boundary
/// facets. Immutable after construction; all derived connectivity (edges,
/// incidence, facet owners) is rebuilt deterministically from vertices, tets
/// and facets.
///
/// Conventions:
///  - every stored edge (a, b) has a < b (global vertex order);
///  - per-tet incidence signs absorb the local edge direction, so assembly
///    does not depend on tet vertex ordering;
///  - every tet has positive signed volume under its stored vertex order.
class TetMesh {
public:
  /// Derives edges, incidence and facet ownership, then validates every
  /// structural invariant. Throws ValidationError on the first violation.
  static TetMesh build(std::vector<Vec3> vertices, std::vector<Tet> tets,
                       std::vector<BoundaryFacet> facets, std::vector<PatchTag> patch_tags);

  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  int num_tets() const { return static_cast<int>(tets_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  int num_facets() const { return static_cast<int>(facets_.size()); }

  const std::vector<Vec3>& vertices() const { return vertices_; }
  const std::vector<Tet>& tets() const { return tets_; }
  const std::vector<BoundaryFacet>& boundary_facets() const { return facets_; }
  const std::vector<PatchTag>& patch_tags() const { return patch_tags_; }
  const std::vector<std::array<int, 2>>& edges() const { return edges_; }

  /// Global edge ids of tet t, in kTetEdgeVertices order.
  const std::array<int, 6>& tet_edges(int t) const { return tet_edges_[t]; }
  /// Orientation sign of each tet edge relative to the canonical (a < b) edge.
  const std::array<int, 6>& tet_edge_signs(int t) const { return tet_edge_signs_[t]; }

  double tet_volume(int t) const;
  Vec3 tet_centroid(int t) const;
  Vec3 facet_centroid(int f) const;

  /// Outward unit normal, area, and an orthonormal tangent basis of a
  /// boundary facet. Throws ValidationError for a degenerate facet.
  FacetFrame facet_frame(int f) const;

  /// Edge ids of boundary facet f (the three canonical edges of its triangle).
  std::array<int, 3> facet_edges(int f) const;

  /// For each edge, the boundary facets containing it (empty for interior edges).
  const std::vector<std::vector<int>>& edge_boundary_facets() const {
    return edge_boundary_facets_;
  }

  std::vector<bool> boundary_vertex_mask() const;

  int find_edge(int a, int b) const;  // -1 if absent

private:
  TetMesh() = default;
  void derive_connectivity();
  void validate() const;

  std::vector<Vec3> vertices_;
  std::vector<Tet> tets_;
  std::vector<BoundaryFacet> facets_;
  std::vector<PatchTag> patch_tags_;

  std::vector<std::array<int, 2>> edges_;
  std::vector<std::array<int, 6>> tet_edges_;
  std::vector<std::array<int, 6>> tet_edge_signs_;
  std::vector<std::vector<int>> edge_boundary_facets_;
};

/// Structured box [0,lx]x[0,ly]x[0,lz] with nx*ny*nz cells, each cell split
/// into six tets sharing the cell diagonal (Kuhn subdivision, globally
/// conforming). Boundary patches: 0 xmin, 1 xmax, 2 ymin, 3 ymax, 4 zmin,
/// 5 zmax.
TetMesh generate_box_mesh(int nx, int ny, int nz, const Vec3& lengths);

/// ASCII mesh reader/writer. Format:
///   tetmesh 1
///   <V>            followed by V lines "x y z"
///   <T>            followed by T lines "v0 v1 v2 v3 region"
///   <F>            followed by F lines "v0 v1 v2 patch"
/// Indices 0-based; '#' starts a comment. Parse failures throw ParseError
/// with the offending line; structural failures throw ValidationError.
TetMesh read_mesh(const std::string& path);
void write_mesh(const TetMesh& mesh, const std::string& path);

}  // namespace maxcav
