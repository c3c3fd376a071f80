#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "regtri/errors.hpp"

namespace regtri {

using Vertex = std::int32_t;
using FaceTriple = std::array<Vertex, 3>;  // always stored with v[0] < v[1] < v[2]

struct FVector {
  std::int64_t f0 = 0;  // vertices
  std::int64_t f1 = 0;  // edges
  std::int64_t f2 = 0;  // faces

  std::int64_t chi() const { return f0 - f1 + f2; }
  bool operator==(const FVector&) const = default;
};

/// Ordered neighbor cycle (interior vertex) or path (boundary vertex).
struct Link {
  enum class Kind { Cycle, Path };
  Kind kind = Kind::Cycle;
  std::vector<Vertex> vertices;

  bool is_cycle() const { return kind == Kind::Cycle; }
};

/// Immutable triangulated surface (possibly with boundary), identified by its
/// set of triangles. Validation happens once in build_from_faces; afterwards
/// all queries are pure and safe to share across threads.
class SimplicialSurface {
 public:
  /// Empty placeholder; every usable instance comes from build_from_faces.
  SimplicialSurface() = default;

  /// Validates and indexes a face list. Vertex ids must be dense: every id in
  /// [0, max_id] has to occur in some face. Throws Error with code
  /// DegenerateFace, DuplicateFace, NonManifoldEdge or BadLink.
  static SimplicialSurface build_from_faces(std::vector<FaceTriple> faces);

  /// Same, but with the vertex count given up front (ids must cover [0, n)).
  static SimplicialSurface build_from_faces(Vertex vertex_count,
                                            std::vector<FaceTriple> faces);

  Vertex vertex_count() const { return n_; }
  const std::vector<FaceTriple>& faces() const { return faces_; }
  /// Edges as sorted (u,v) pairs, u < v, in lexicographic order.
  const std::vector<std::pair<Vertex, Vertex>>& edges() const { return edges_; }

  bool closed() const { return closed_; }
  bool connected() const { return connected_; }
  bool is_boundary_vertex(Vertex v) const { return valid(v), boundary_[v]; }
  bool is_boundary_edge(Vertex u, Vertex v) const;
  int degree(Vertex v) const { return valid(v), static_cast<int>(link_[v].vertices.size()); }
  /// Neighbors in ascending id order.
  std::vector<Vertex> neighbors(Vertex v) const;

  /// Ordered link of v; cycles start at the smallest neighbor and run toward
  /// the smaller of its two link neighbors, paths take the lexicographically
  /// smaller of the two end-to-end traversals.
  const Link& link(Vertex v) const { return valid(v), link_[v]; }

  /// The cone v * lk(v) as a standalone surface; vertex ids are compacted
  /// preserving ascending order. A 2-disc whenever v is interior.
  SimplicialSurface star(Vertex v) const;

  FVector f_vector() const;

  /// Boundary vertices in cyclic order, starting at the smallest boundary
  /// vertex and running toward the smaller of its two boundary neighbors.
  /// Requires a triangulated disc: throws ClosedSurface or NotADisc.
  std::vector<Vertex> boundary_cycle() const;

  /// Number of vertices adjacent to both u and v (u != v).
  int common_neighbor_count(Vertex u, Vertex v) const;
  bool adjacent(Vertex u, Vertex v) const;

  /// The two face apexes over edge (u,v); second is -1 for boundary edges.
  /// Throws UnknownVertex if (u,v) is not an edge.
  std::pair<Vertex, Vertex> edge_apexes(Vertex u, Vertex v) const;

  /// True iff every tested vertex has degree exactly d. Interior vertices
  /// only when the surface has boundary, all vertices when closed.
  bool is_d_regular(int d) const;

  /// Degree d if the tested vertices (see is_d_regular) all agree, else -1.
  int regular_degree() const;

 private:
  void valid(Vertex v) const {
    if (v < 0 || v >= n_)
      throw Error(ErrorCode::UnknownVertex, "vertex " + std::to_string(v));
  }
  std::size_t edge_index(Vertex u, Vertex v) const;  // npos when absent

  Vertex n_ = 0;
  std::vector<FaceTriple> faces_;                  // sorted lexicographically
  std::vector<std::pair<Vertex, Vertex>> edges_;   // sorted
  std::vector<std::array<Vertex, 2>> edge_faces_;  // apexes per edge, -1 pad
  std::vector<Link> link_;                         // canonical, per vertex
  std::vector<char> boundary_;
  bool closed_ = false;
  bool connected_ = false;
};

}  // namespace regtri
